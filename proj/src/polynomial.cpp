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

#include "hoboc/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace hoboc {

namespace {

constexpr double kMergeEps = 1e-12;

std::vector<Term> normalize_terms(const std::vector<Term>& raw) {
    std::map<Mask, double> merged;
    for (const Term& t : raw) merged[t.monomial] += t.coefficient;
    std::vector<Term> out;
    out.reserve(merged.size());
    for (const auto& [mask, coef] : merged) {
        if (std::fabs(coef) > kMergeEps) out.push_back({mask, coef});
    }
    return out;
}

}  // namespace

int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < kMaxVars + 2; ++i)
        if (m & (Mask{1} << i)) out.push_back(i + 1);
    return out;
}

Mask mask_from_indices(const std::vector<int>& indices_1based) {
    Mask m = 0;
    for (int idx : indices_1based) {
        if (idx < 1 || idx > kMaxVars)
            throw std::invalid_argument("variable index out of range: " + std::to_string(idx));
        m |= Mask{1} << (idx - 1);
    }
    return m;
}

bool mask_lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

ParseError::ParseError(const std::string& message, std::size_t byte_offset)
    : std::runtime_error(message + " (at byte " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

HoboPolynomial::HoboPolynomial(int var_count, std::vector<Term> terms)
    : n_(var_count), terms_(normalize_terms(std::move(terms))) {
    if (n_ < 0 || n_ > kMaxVars)
        throw std::invalid_argument("variable count out of range: " + std::to_string(n_));
    for (const Term& t : terms_) {
        if (t.monomial >> n_)
            throw std::invalid_argument("monomial references a variable beyond n=" +
                                        std::to_string(n_));
    }
}

int HoboPolynomial::degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, mask_degree(t.monomial));
    return d;
}

double HoboPolynomial::evaluate(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                    " does not match n=" + std::to_string(n_));
    Mask ones = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] != 0 && x[i] != 1) throw std::invalid_argument("assignment entries must be 0/1");
        if (x[i]) ones |= Mask{1} << i;
    }
    double total = 0.0;
    for (const Term& t : terms_)
        if ((t.monomial & ones) == t.monomial) total += t.coefficient;
    return total;
}

bool HoboPolynomial::operator==(const HoboPolynomial& other) const {
    if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].monomial != other.terms_[i].monomial) return false;
        if (std::fabs(terms_[i].coefficient - other.terms_[i].coefficient) > kMergeEps)
            return false;
    }
    return true;
}

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    // Unsigned integer.
    long parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000) throw ParseError("integer too large", start);
        }
        return value;
    }
    // Real starting with a digit, '.', or a sign glued to one.
    bool looks_like_number() {
        char c = peek();
        std::size_t at = pos;
        if (c == '+' || c == '-') {
            if (at + 1 >= text.size()) return false;
            c = text[at + 1];
        }
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }
    double parse_real() {
        skip_ws();
        std::size_t start = pos;
        const char* begin = text.data() + pos;
        char* end = nullptr;
        double value = std::strtod(begin, &end);
        if (end == begin) throw ParseError("expected number", start);
        pos += static_cast<std::size_t>(end - begin);
        return value;
    }
};

}  // namespace

HoboPolynomial HoboPolynomial::parse(std::string_view text) {
    Lexer lx{text};
    long declared_n = -1;
    if (lx.accept_word("vars")) {
        std::size_t at = lx.pos;
        declared_n = lx.parse_int();
        if (declared_n < 0 || declared_n > kMaxVars)
            throw ParseError("declared variable count out of range", at);
        if (!lx.accept(';')) throw ParseError("expected ';' after vars header", lx.pos);
    }

    std::vector<Term> terms;
    int max_index = 0;
    bool first = true;
    while (!lx.eof()) {
        double sign = 1.0;
        if (first) {
            if (lx.accept('-'))
                sign = -1.0;
            else
                lx.accept('+');
        } else {
            if (lx.accept('-'))
                sign = -1.0;
            else if (lx.accept('+'))
                sign = 1.0;
            else
                throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        first = false;

        double coef = 1.0;
        bool saw_coef = false;
        if (lx.looks_like_number()) {
            coef = lx.parse_real();
            saw_coef = true;
        }
        Mask monomial = 0;
        bool saw_factor = false;
        while (lx.peek() == 'x') {
            std::size_t at = lx.pos;
            lx.accept('x');
            if (!lx.looks_like_number()) throw ParseError("expected variable index after 'x'", lx.pos);
            std::size_t idx_at = lx.pos;
            long idx = lx.parse_int();
            if (lx.pos < text.size() && text[lx.pos] == '.')
                throw ParseError("variable index must be an integer", idx_at);
            if (idx == 0) throw ParseError("variable indices are 1-based; x0 is invalid", at);
            if (idx > kMaxVars) throw ParseError("variable index exceeds supported maximum", at);
            if (declared_n >= 0 && idx > declared_n)
                throw ParseError("variable index exceeds declared vars count", at);
            monomial |= Mask{1} << (idx - 1);  // x_i^2 = x_i: repeats collapse
            max_index = std::max(max_index, static_cast<int>(idx));
            saw_factor = true;
        }
        if (!saw_factor && !saw_coef)
            throw ParseError("expected a term", lx.pos);
        terms.push_back({monomial, sign * coef});
    }

    int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_index;
    return HoboPolynomial(n, std::move(terms));
}

std::string HoboPolynomial::str() const {
    std::ostringstream out;
    out << "vars " << n_ << ";";
    if (terms_.empty()) {
        out << " 0";
        return out.str();
    }
    bool first = true;
    for (const Term& t : terms_) {
        double c = t.coefficient;
        if (first) {
            out << (c < 0 ? " -" : " ");
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        double mag = std::fabs(c);
        if (mag != 1.0 || t.monomial == 0) {
            out.precision(17);
            out << mag;
            if (t.monomial) out << ' ';
        }
        bool first_var = true;
        for (int idx : mask_to_indices(t.monomial)) {
            if (!first_var) out << ' ';
            out << 'x' << idx;
            first_var = false;
        }
    }
    return out.str();
}

IsingPolynomial::IsingPolynomial(int var_count, std::vector<Term> terms, double constant)
    : n_(var_count), terms_(normalize_terms(std::move(terms))), constant_(constant) {
    if (n_ < 0 || n_ > kMaxVars)
        throw std::invalid_argument("variable count out of range: " + std::to_string(n_));
    for (const Term& t : terms_) {
        if (t.monomial == 0)
            throw std::invalid_argument("constant belongs in the dedicated field");
        if (t.monomial >> n_)
            throw std::invalid_argument("monomial references a variable beyond n");
    }
}

double IsingPolynomial::coefficient(Mask monomial) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                               [](const Term& t, Mask m) { return t.monomial < m; });
    if (it != terms_.end() && it->monomial == monomial) return it->coefficient;
    return 0.0;
}

double IsingPolynomial::evaluate(const std::vector<int>& z) const {
    if (static_cast<int>(z.size()) != n_)
        throw std::invalid_argument("assignment length does not match n");
    Mask minus = 0;
    for (int i = 0; i < n_; ++i) {
        if (z[i] != 1 && z[i] != -1)
            throw std::invalid_argument("spin assignment entries must be +1/-1");
        if (z[i] == -1) minus |= Mask{1} << i;
    }
    double total = constant_;
    for (const Term& t : terms_) {
        int negatives = std::popcount(t.monomial & minus);
        total += (negatives % 2 == 0) ? t.coefficient : -t.coefficient;
    }
    return total;
}

constexpr int kMaxExpansionDegree = 20;

IsingPolynomial expand_to_ising(const HoboPolynomial& f) {
    if (f.degree() > kMaxExpansionDegree)
        throw std::invalid_argument("monomial of degree " + std::to_string(f.degree()) +
                                    " would expand to over 2^" +
                                    std::to_string(kMaxExpansionDegree) + " terms");
    std::map<Mask, double> alpha;
    double constant = 0.0;
    for (const Term& t : f.terms()) {
        const int d = mask_degree(t.monomial);
        const double scale = std::ldexp(t.coefficient, -d);  // C / 2^d
        // Every subset I of the monomial contributes C * (-1)^|I| / 2^d.
        Mask sub = t.monomial;
        while (true) {
            double signed_value = (mask_degree(sub) % 2 == 0) ? scale : -scale;
            if (sub == 0)
                constant += signed_value;
            else
                alpha[sub] += signed_value;
            if (sub == 0) break;
            sub = (sub - 1) & t.monomial;
        }
    }
    std::vector<Term> terms;
    terms.reserve(alpha.size());
    for (const auto& [mask, coef] : alpha) terms.push_back({mask, coef});
    return IsingPolynomial(f.var_count(), std::move(terms), constant);
}

double evaluate_hobo(const HoboPolynomial& f, const std::vector<int>& x) {
    return f.evaluate(x);
}

double evaluate_ising(const IsingPolynomial& h, const std::vector<int>& z) {
    return h.evaluate(z);
}

}  // namespace hoboc
