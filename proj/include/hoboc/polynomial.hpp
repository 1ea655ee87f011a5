// Copyright 2026 hoboc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hoboc {

/// A monomial is a set of variable indices stored as a bitmask.
/// Bit i corresponds to variable i+1 in the external 1-based notation.
using Mask = std::uint32_t;

/// Largest number of variables a polynomial may declare.
constexpr int kMaxVars = 30;

int mask_degree(Mask m);
std::vector<int> mask_to_indices(Mask m);  // 1-based, ascending
Mask mask_from_indices(const std::vector<int>& indices_1based);

/// Lexicographic order on the ascending index sequences of two monomials.
bool mask_lex_less(Mask a, Mask b);

struct Term {
    Mask monomial = 0;
    double coefficient = 0.0;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t byte_offset);
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Multilinear polynomial over binary variables x_1..x_n.
///
/// Terms are kept sorted by monomial mask, duplicates merged, and
/// (near-)zero coefficients dropped. Repeated variables inside one
/// monomial collapse because x_i^2 = x_i on {0,1}.
class HoboPolynomial {
  public:
    HoboPolynomial() = default;
    HoboPolynomial(int var_count, std::vector<Term> terms);

    /// Parses the text grammar described in the README
    /// (optional "vars N;" header, signed terms, x<k> factors).
    static HoboPolynomial parse(std::string_view text);

    int var_count() const { return n_; }
    int degree() const;
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    double evaluate(const std::vector<int>& x) const;

    /// Canonical text form; parse(str()) reproduces the polynomial.
    std::string str() const;

    bool operator==(const HoboPolynomial& other) const;

  private:
    int n_ = 0;
    std::vector<Term> terms_;
};

/// Polynomial in spin variables Z_1..Z_n. The empty-monomial coefficient
/// is kept apart: it only ever contributes a global phase downstream.
class IsingPolynomial {
  public:
    IsingPolynomial() = default;
    IsingPolynomial(int var_count, std::vector<Term> terms, double constant);

    int var_count() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    double constant() const { return constant_; }

    /// Coefficient of the given non-constant monomial (0 when absent).
    double coefficient(Mask monomial) const;

    double evaluate(const std::vector<int>& z) const;

  private:
    int n_ = 0;
    std::vector<Term> terms_;  // non-constant, sorted by mask
    double constant_ = 0.0;
};

/// Change of variable x_i <- (1 - Z_i)/2 with like-term merging.
IsingPolynomial expand_to_ising(const HoboPolynomial& f);

double evaluate_hobo(const HoboPolynomial& f, const std::vector<int>& x);
double evaluate_ising(const IsingPolynomial& h, const std::vector<int>& z);

}  // namespace hoboc
