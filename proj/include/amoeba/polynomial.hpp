#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "amoeba/errors.hpp"

namespace amoeba {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exponent vector of a Laurent monomial; length equals the variable count.
using Exponent = std::vector<int>;

/// Orders exponents by the last variable first. With variables (x, y) this
/// lists 1, x, y, xy, x^2y, y^2 -- the order used when printing polynomials.
struct ColexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

namespace detail {
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
}  // namespace detail

/// Sparse multivariate Laurent polynomial over an exact-rational or
/// complex-double coefficient domain. No stored coefficient is ever zero.
template <class Coeff>
class LaurentPolynomial {
public:
    using Terms = std::map<Exponent, Coeff, ColexLess>;

    explicit LaurentPolynomial(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw DomainError("polynomial needs at least one variable");
    }

    LaurentPolynomial(int nvars, const Terms& terms) : LaurentPolynomial(nvars) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static LaurentPolynomial constant(int nvars, const Coeff& c) {
        LaurentPolynomial p(nvars);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    static LaurentPolynomial monomial(const Exponent& e, const Coeff& c) {
        LaurentPolynomial p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    /// The monomial x_var.
    static LaurentPolynomial variable(int nvars, int var) {
        Exponent e(nvars, 0);
        e.at(var) = 1;
        return monomial(e, Coeff(1));
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Exponent& e, const Coeff& c) {
        if (static_cast<int>(e.size()) != nvars_) {
            throw DomainError("exponent length " + std::to_string(e.size()) +
                              " does not match variable count " + std::to_string(nvars_));
        }
        if (detail::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (detail::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::vector<Exponent> support() const {
        std::vector<Exponent> out;
        out.reserve(terms_.size());
        for (const auto& kv : terms_) out.push_back(kv.first);
        return out;
    }

    int degree(int var) const {
        int d = 0;
        bool first = true;
        for (const auto& kv : terms_) {
            if (first || kv.first[var] > d) d = kv.first[var];
            first = false;
        }
        return d;
    }

    int min_degree(int var) const {
        int d = 0;
        bool first = true;
        for (const auto& kv : terms_) {
            if (first || kv.first[var] < d) d = kv.first[var];
            first = false;
        }
        return d;
    }

    /// Multiplies by the monomial x^offset.
    LaurentPolynomial shifted(const Exponent& offset) const {
        LaurentPolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            for (int i = 0; i < nvars_; ++i) f[i] += offset.at(i);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// Partial derivative with respect to x_var.
    LaurentPolynomial derivative(int var) const {
        LaurentPolynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            f[var] -= 1;
            out.add_term(f, c * Coeff(e[var]));
        }
        return out;
    }

    /// Euler operator x_var * d/dx_var.
    LaurentPolynomial theta(int var) const {
        LaurentPolynomial out(nvars_);
        for (const auto& [e, c] : terms_) out.add_term(e, c * Coeff(e[var]));
        return out;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPolynomial& operator*=(const Coeff& s) {
        if (detail::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= s;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Coeff& s) { return a *= s; }
    friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= Coeff(-1); }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_same(b);
        LaurentPolynomial out(a.nvars_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const LaurentPolynomial& o) const {
        if (o.nvars_ != nvars_) throw DomainError("variable count mismatch in polynomial arithmetic");
    }

    int nvars_;
    Terms terms_;
};

using ExactPolynomial = LaurentPolynomial<Rational>;
using ComplexPolynomial = LaurentPolynomial<Complex>;

/// Explicit, one-way conversion exact -> complex double.
ComplexPolynomial to_complex(const ExactPolynomial& p);

Complex evaluate(const ComplexPolynomial& p, std::span<const Complex> point);
Complex evaluate(const ExactPolynomial& p, std::span<const Complex> point);
Rational evaluate(const ExactPolynomial& p, std::span<const Rational> point);

/// Sum of |c_a x^a| over all terms; the natural scale for residuals.
double magnitude_sum(const ComplexPolynomial& p, std::span<const Complex> point);

/// |p(x)| / sum |c_a x^a|. Zero when every term vanishes identically.
double relative_residual(const ComplexPolynomial& p, std::span<const Complex> point);

/// Substitutes x_var = value and drops that variable; the result has nvars-1
/// variables. Requires nvars >= 2.
ComplexPolynomial substitute(const ComplexPolynomial& p, int var, Complex value);

/// Moves x_a into x_b's slot and vice versa.
template <class Coeff>
LaurentPolynomial<Coeff> swap_variables(const LaurentPolynomial<Coeff>& p, int a, int b) {
    LaurentPolynomial<Coeff> out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        std::swap(f.at(a), f.at(b));
        out.add_term(f, c);
    }
    return out;
}

/// Shifts exponents so that every variable has minimum degree 0. The zero set
/// on the torus is unchanged.
template <class Coeff>
LaurentPolynomial<Coeff> normalize_to_polynomial(const LaurentPolynomial<Coeff>& p) {
    Exponent offset(p.nvars(), 0);
    for (int i = 0; i < p.nvars(); ++i) offset[i] = -p.min_degree(i);
    return p.shifted(offset);
}

/// Exact quotient num / den in the polynomial ring (nonnegative exponents).
/// Throws DomainError when den does not divide num.
ExactPolynomial divide_exact(const ExactPolynomial& num, const ExactPolynomial& den);

/// Coefficients of a polynomial viewed as univariate in one main variable.
template <class Coeff>
struct CoefficientList {
    int main_var = 0;
    /// entries[k] is the coefficient of main_var^(degree - k); entries keep the
    /// full variable count, with main_var's exponent always zero.
    std::vector<LaurentPolynomial<Coeff>> entries;

    int degree() const { return static_cast<int>(entries.size()) - 1; }
};

template <class Coeff>
CoefficientList<Coeff> coefficient_list(const LaurentPolynomial<Coeff>& p, int main_var) {
    if (main_var < 0 || main_var >= p.nvars()) throw DomainError("main variable out of range");
    if (p.is_zero()) throw DomainError("coefficient list of the zero polynomial");
    if (p.min_degree(main_var) < 0) {
        throw DomainError("negative exponent in the main variable; shift the polynomial first");
    }
    const int deg = p.degree(main_var);
    CoefficientList<Coeff> out;
    out.main_var = main_var;
    out.entries.assign(deg + 1, LaurentPolynomial<Coeff>(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[main_var] = 0;
        out.entries[deg - e[main_var]].add_term(f, c);
    }
    return out;
}

}  // namespace amoeba
