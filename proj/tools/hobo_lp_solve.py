#!/usr/bin/env python3
# Copyright 2026 hoboc developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""LP-file MILP adapter around scipy.optimize.milp (HiGHS).

Usage: hobo_lp_solve.py MODEL.LP TIMELIMIT SOLUTION.OUT

Reads the CPLEX-LP subset hoboc emits (Minimize / Subject To / Bounds /
Binaries / End), solves it and writes a plain solution file:

    status optimal|feasible|infeasible|error
    objective <value>
    <name> <value>
    ...

A "MODEL.LP.mst" warm-start sidecar is ignored here; scipy's MILP entry
point takes no starting solution.
"""

import re
import sys

import numpy as np
import scipy.sparse as sp
from scipy.optimize import Bounds, LinearConstraint, milp

TOKEN = re.compile(r"[A-Za-z0-9_.\[\]]+|[+\-:<>=\\]")


def tokenize(path):
    tokens = []
    with open(path) as f:
        for line in f:
            if line.lstrip().startswith("\\"):
                continue
            tokens.extend(TOKEN.findall(line))
    return tokens


def is_number(tok):
    try:
        float(tok)
        return True
    except ValueError:
        return False


class Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def keyword(self):
        tok = self.peek()
        return tok.lower() if tok else None


def parse_expression(p, columns):
    """Reads a +/- separated linear expression into {column: coefficient}."""
    expr = {}
    sign = 1.0
    while True:
        tok = p.peek()
        if tok is None:
            break
        low = tok.lower()
        if low in ("subject", "st", "s.t.", "bounds", "binaries", "binary", "end",
                   "general", "generals"):
            break
        if tok in ("<", ">", "="):
            break
        p.next()
        if tok == "+":
            sign = 1.0
            continue
        if tok == "-":
            sign = -1.0
            continue
        if is_number(tok):
            coef = sign * float(tok)
            name = p.next()
            idx = columns.setdefault(name, len(columns))
            expr[idx] = expr.get(idx, 0.0) + coef
        else:
            idx = columns.setdefault(tok, len(columns))
            expr[idx] = expr.get(idx, 0.0) + sign
        sign = 1.0
    return expr


def parse_signed(p):
    sign = 1.0
    while p.peek() in ("+", "-"):
        if p.next() == "-":
            sign = -sign
    return sign * float(p.next())


def parse_lp(path):
    p = Parser(tokenize(path))
    columns = {}
    objective = {}
    rows = []  # (expr, sense, rhs)
    binaries = set()
    bounds = {}  # name -> (lo, hi)

    if p.keyword() in ("minimize", "min"):
        p.next()
    # objective label
    if p.peek() and p.toks[p.pos + 1 : p.pos + 2] == [":"]:
        p.next()
        p.next()
    objective = parse_expression(p, columns)

    if p.keyword() == "subject":
        p.next()
        if p.keyword() == "to":
            p.next()
    while p.peek() is not None and p.keyword() not in (
            "bounds", "binaries", "binary", "end", "general", "generals"):
        # row label
        if p.toks[p.pos + 1 : p.pos + 2] == [":"]:
            p.next()
            p.next()
        expr = parse_expression(p, columns)
        sense = p.next()
        if p.peek() == "=":  # '<=' / '>=' split into two tokens
            p.next()
        rhs = parse_signed(p)
        rows.append((expr, sense, rhs))

    while p.peek() is not None:
        section = p.keyword()
        if section == "end":
            break
        p.next()
        if section == "bounds":
            while p.peek() is not None and p.keyword() not in (
                    "binaries", "binary", "end", "general", "generals"):
                lo = parse_signed(p)
                p.next()  # <
                if p.peek() == "=":
                    p.next()
                name = p.next()
                p.next()  # <
                if p.peek() == "=":
                    p.next()
                hi = parse_signed(p)
                bounds[name] = (lo, hi)
        elif section in ("binaries", "binary"):
            while p.peek() is not None and p.keyword() not in (
                    "bounds", "end", "general", "generals"):
                binaries.add(p.next())
    return columns, objective, rows, bounds, binaries


def main():
    if len(sys.argv) != 4:
        print("usage: hobo_lp_solve.py MODEL.LP TIMELIMIT SOLUTION.OUT", file=sys.stderr)
        return 2
    lp_path, time_limit, out_path = sys.argv[1], float(sys.argv[2]), sys.argv[3]

    columns, objective, rows, bounds, binaries = parse_lp(lp_path)
    names = [None] * len(columns)
    for name, idx in columns.items():
        names[idx] = name
    ncols = len(names)

    c = np.zeros(ncols)
    for idx, coef in objective.items():
        c[idx] = coef

    data, ri, ci, lo, hi = [], [], [], [], []
    for row_no, (expr, sense, rhs) in enumerate(rows):
        for idx, coef in expr.items():
            ri.append(row_no)
            ci.append(idx)
            data.append(coef)
        if sense == "<":
            lo.append(-np.inf)
            hi.append(rhs)
        elif sense == ">":
            lo.append(rhs)
            hi.append(np.inf)
        else:
            lo.append(rhs)
            hi.append(rhs)
    A = sp.csr_matrix((data, (ri, ci)), shape=(len(rows), ncols))

    lb = np.zeros(ncols)
    ub = np.ones(ncols)
    for name, (blo, bhi) in bounds.items():
        idx = columns[name]
        lb[idx] = blo
        ub[idx] = bhi
    integrality = np.zeros(ncols)
    for name in binaries:
        idx = columns[name]
        integrality[idx] = 1
        lb[idx] = 0.0
        ub[idx] = 1.0

    res = milp(c=c,
               constraints=LinearConstraint(A, np.array(lo), np.array(hi)),
               integrality=integrality,
               bounds=Bounds(lb, ub),
               options={"time_limit": time_limit, "disp": False})

    with open(out_path, "w") as out:
        if res.status == 2:
            out.write("status infeasible\n")
        elif res.x is None:
            out.write("status error\n")
        else:
            out.write("status %s\n" % ("optimal" if res.status == 0 else "feasible"))
            out.write("objective %.17g\n" % res.fun)
            for idx, name in enumerate(names):
                out.write("%s %.17g\n" % (name, res.x[idx]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
