#pragma once

#include <span>
#include <vector>

#include "amoeba/polynomial.hpp"

namespace amoeba {

inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr int kMaxAberthIterations = 200;

/// Roots of a univariate polynomial.
struct RootSet {
    /// Nonzero roots of the deflated polynomial.
    std::vector<Complex> roots;
    /// Multiplicity of the root at exactly zero (trailing zero coefficients).
    int zero_roots = 0;
    /// Number of exactly-zero leading coefficients trimmed.
    int leading_trimmed = 0;
    /// Effective degree 0: the input was a nonzero constant.
    bool constant = false;
    /// False when the iteration cap was hit; roots hold the best iterate.
    bool converged = true;
    /// max over roots of |p(r)| / (max_k |c_k| * max(1,|r|)^deg).
    double residual_bound = 0.0;

    int degree() const { return static_cast<int>(roots.size()) + zero_roots; }
};

/// All complex roots of sum_k coeffs[k] x^(n-k) (descending order) by
/// simultaneous Aberth-Ehrlich iteration. Exact-zero leading coefficients are
/// trimmed and exact-zero trailing coefficients become zero roots.
/// Throws DomainError for an all-zero vector.
RootSet roots(std::span<const Complex> coeffs, double tol = kDefaultRootTolerance);

/// Convenience evaluation of a descending coefficient vector (Horner).
Complex horner(std::span<const Complex> coeffs, Complex x);

}  // namespace amoeba
