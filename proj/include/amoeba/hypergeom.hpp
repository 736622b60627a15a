#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amoeba/newton_polytope.hpp"
#include "amoeba/polynomial.hpp"

namespace amoeba {

/// Variable names used when printing expressions in the index variables s.
inline constexpr std::string_view kIndexVariables = "str";

/// Affine form <coeffs, s> + constant.
struct LinearForm {
    Exponent coeffs;
    Rational constant;

    Rational evaluate(std::span<const Rational> s) const;
    ExactPolynomial to_polynomial() const;
    /// The form at s - e_var.
    LinearForm shifted_back(int var) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// "-s-2t+4" style rendering.
std::string to_string(const LinearForm& form, std::string_view variables = kIndexVariables);

/// Gamma(<A, s> + c)^sign with sign +1 (numerator) or -1 (denominator).
struct GammaFactor {
    Exponent direction;
    Rational shift;
    int sign = -1;

    LinearForm argument() const { return {direction, shift}; }
    friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

/// phi(s) = prod_i Gamma(<A_i, s> + c_i)^{eps_i}.
struct OreSatoCoefficient {
    int nvars = 0;
    std::vector<GammaFactor> factors;

    /// Throws DomainError on a zero direction, a bad sign or a dimension
    /// mismatch.
    void validate() const;
};

/// "1/(Gamma(s+1)*Gamma(t+1)*...)" style rendering.
std::string to_string(const OreSatoCoefficient& phi, std::string_view variables = kIndexVariables);

/// Parses products of Gamma factors in s, t, r, e.g.
/// "1/(Gamma(s+1)Gamma(t+1)Gamma(-s-2t+5)Gamma(-s+t+2))" or
/// "Gamma(s+t-4)*Gamma(-4s+t-16)". 'G' and the Greek capital gamma are
/// accepted as aliases; '/' and '^k' invert or repeat the following or
/// preceding factor or parenthesised group.
OreSatoCoefficient parse_ore_sato(std::string_view text, int nvars);

/// Constant times a product of linear forms, kept factored.
struct FactoredPolynomial {
    Rational scale{1};
    std::vector<LinearForm> factors;

    int degree() const { return static_cast<int>(factors.size()); }
    Rational evaluate(std::span<const Rational> s) const;
    ExactPolynomial expand(int nvars) const;
};

std::string to_string(const FactoredPolynomial& p, std::string_view variables = kIndexVariables);

/// phi(s + e_var) / phi(s) = numerator(s) / denominator(s).
struct CoefficientRatio {
    FactoredPolynomial numerator;
    FactoredPolynomial denominator;
};

/// Symbolic ratio through Gamma(u+k)/Gamma(u) = u(u+1)...(u+k-1). Common
/// linear factors are cancelled and both sides carry integer coefficients.
CoefficientRatio coefficient_ratio(const OreSatoCoefficient& phi, int var);

/// Operators of the Horn system x_j P_j(theta) f = Q_j(theta) f with
/// phi(s+e_j)/phi(s) = P_j(s)/Q_j(s+e_j).
struct HornOperatorPair {
    int var = 0;
    FactoredPolynomial P;
    FactoredPolynomial Q;
};

std::vector<HornOperatorPair> horn_operators(const OreSatoCoefficient& phi);

/// phi(s) = 1 / prod_j Gamma(1 - <B_j, s> + m_j) over the facets (B_j, m_j),
/// i.e. shift constants c_j = -m_j.
OreSatoCoefficient ore_sato_from_polytope(const NewtonPolytope& polytope);

/// Same, with explicit shifts: 1 / prod_j Gamma(1 - <B_j, s> - c_j).
OreSatoCoefficient ore_sato_from_polytope(const NewtonPolytope& polytope, std::span<const Rational> shifts);

/// The polynomial supported on every lattice point s of the polytope with
/// coefficient L / prod_j (m_j - <B_j, s>)!, L the lcm of the denominators.
ExactPolynomial hypergeometric_polynomial(const NewtonPolytope& polytope);

struct HornMembershipReport {
    bool ok = true;
    /// Largest |P_j(s-b) c_s - Q_j(s-b+e_j) c_{s+e_j}| seen.
    Rational max_residual{0};
    /// Monomial offset b: p = x^b f with f a formal Horn solution.
    Exponent offset;
    std::size_t checks = 0;

    /// First failing check, when !ok.
    int failed_var = -1;
    Exponent failed_point;
};

/// Checks the exact recurrence P_j(s-b) c_s = Q_j(s-b+e_j) c_{s+e_j} for every
/// j and every s in support(p) and support(p) - e_j.
HornMembershipReport verify_horn_membership(const ExactPolynomial& p, const OreSatoCoefficient& phi,
                                            const Exponent& offset = {});

/// Smallest offset b (by max-norm, then lexicographically) within
/// [-radius, radius]^n for which verification passes.
std::optional<HornMembershipReport> find_horn_offset(const ExactPolynomial& p, const OreSatoCoefficient& phi,
                                                     int radius);

}  // namespace amoeba
