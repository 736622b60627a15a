#include "amoeba/polynomial.hpp"

#include <cmath>

namespace amoeba {

namespace {

Complex power(Complex x, int k) {
    if (k >= 0) {
        Complex r(1.0, 0.0);
        Complex b = x;
        for (unsigned e = static_cast<unsigned>(k); e; e >>= 1) {
            if (e & 1u) r *= b;
            b *= b;
        }
        return r;
    }
    return Complex(1.0, 0.0) / power(x, -k);
}

Rational power(const Rational& x, int k) {
    if (k < 0) {
        if (sgn(x) == 0) throw DomainError("zero coordinate under a negative exponent");
        return Rational(1) / power(x, -k);
    }
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void check_point(int nvars, std::size_t size) {
    if (static_cast<int>(size) != nvars) throw DomainError("evaluation point has wrong dimension");
}

Complex monomial_value(const Exponent& e, std::span<const Complex> point) {
    Complex v(1.0, 0.0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] < 0 && point[i] == Complex(0.0, 0.0)) {
            throw DomainError("zero coordinate under a negative exponent");
        }
        v *= power(point[i], e[i]);
    }
    return v;
}

}  // namespace

ComplexPolynomial to_complex(const ExactPolynomial& p) {
    ComplexPolynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, Complex(c.get_d(), 0.0));
    return out;
}

Complex evaluate(const ComplexPolynomial& p, std::span<const Complex> point) {
    check_point(p.nvars(), point.size());
    Complex sum(0.0, 0.0);
    for (const auto& [e, c] : p.terms()) sum += c * monomial_value(e, point);
    return sum;
}

Complex evaluate(const ExactPolynomial& p, std::span<const Complex> point) {
    check_point(p.nvars(), point.size());
    Complex sum(0.0, 0.0);
    for (const auto& [e, c] : p.terms()) sum += c.get_d() * monomial_value(e, point);
    return sum;
}

Rational evaluate(const ExactPolynomial& p, std::span<const Rational> point) {
    check_point(p.nvars(), point.size());
    Rational sum(0);
    for (const auto& [e, c] : p.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i) v *= power(point[i], e[i]);
        sum += v;
    }
    return sum;
}

double magnitude_sum(const ComplexPolynomial& p, std::span<const Complex> point) {
    check_point(p.nvars(), point.size());
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += std::abs(c * monomial_value(e, point));
    return s;
}

double relative_residual(const ComplexPolynomial& p, std::span<const Complex> point) {
    const double scale = magnitude_sum(p, point);
    if (scale == 0.0) return 0.0;
    return std::abs(evaluate(p, point)) / scale;
}

ComplexPolynomial substitute(const ComplexPolynomial& p, int var, Complex value) {
    if (p.nvars() < 2) throw DomainError("cannot substitute the only variable");
    if (var < 0 || var >= p.nvars()) throw DomainError("substitution variable out of range");
    ComplexPolynomial out(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[var] < 0 && value == Complex(0.0, 0.0)) {
            throw DomainError("zero coordinate under a negative exponent");
        }
        Exponent f;
        f.reserve(e.size() - 1);
        for (int i = 0; i < p.nvars(); ++i) {
            if (i != var) f.push_back(e[i]);
        }
        out.add_term(f, c * power(value, e[var]));
    }
    return out;
}

ExactPolynomial divide_exact(const ExactPolynomial& num, const ExactPolynomial& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    const int n = num.nvars();
    if (den.nvars() != n) throw DomainError("variable count mismatch in division");

    // Colex is a monomial order, so the largest term leads.
    const auto& [den_lead_exp, den_lead_coeff] = *den.terms().rbegin();
    ExactPolynomial quotient(n);
    ExactPolynomial rest = num;
    Exponent e(n);
    while (!rest.is_zero()) {
        const auto& [lead_exp, lead_coeff] = *rest.terms().rbegin();
        for (int i = 0; i < n; ++i) {
            e[i] = lead_exp[i] - den_lead_exp[i];
            if (e[i] < 0) throw DomainError("polynomial division is not exact");
        }
        ExactPolynomial step = ExactPolynomial::monomial(e, lead_coeff / den_lead_coeff);
        quotient += step;
        rest -= step * den;
    }
    return quotient;
}

}  // namespace amoeba
