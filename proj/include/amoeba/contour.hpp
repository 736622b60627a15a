#pragma once

#include <utility>
#include <vector>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/polynomial.hpp"

namespace amoeba {

/// Index of the slope parameter u in the (x, y, u) ring.
inline constexpr int kParamVar = 2;

/// The critical-point system p = 0, g = 0 with g = x p_x - u y p_y, plus the
/// reciprocal form y p_y - v x p_x used for slopes near infinity (v = 1/u).
struct ContourSystem {
    /// Bivariate, shifted to nonnegative exponents.
    ExactPolynomial p{2};
    /// In (x, y, u); coefficients are at most linear in u.
    ExactPolynomial g{3};
    /// In (x, y, v).
    ExactPolynomial g_reciprocal{3};
};

/// p is first divided by its monomial content, see normalize_to_polynomial.
ContourSystem build_contour_system(const ExactPolynomial& p);

/// Res_var(f, g) as the determinant of the Sylvester matrix, computed by
/// fraction-free (Bareiss) elimination over the exact polynomial ring.
/// The result keeps the variable count with var's exponent zero.
ExactPolynomial sylvester_resultant(const ExactPolynomial& f, const ExactPolynomial& g, int var);

/// Removes from f every factor that does not involve main_var (the content
/// over Q[param]) and the largest power of main_var dividing it; the result has
/// coprime integer coefficients and its colex-largest term is positive.
ExactPolynomial remove_content(const ExactPolynomial& f, int main_var, int param_var);

/// Eliminants of the contour system, all in the (x, y, u) ring.
struct EliminationResult {
    /// Res_x(p, g): polynomial in (y, u).
    ExactPolynomial s_poly{3};
    /// Res_y(p, g): polynomial in (x, u).
    ExactPolynomial t_poly{3};
    /// Same for the reciprocal system, in (y, v) and (x, v).
    ExactPolynomial s_reciprocal{3};
    ExactPolynomial t_reciprocal{3};
};

/// Throws DomainError when p has degree 0 in x or y, or when a resultant
/// vanishes identically (p and g share a factor).
EliminationResult eliminate(const ContourSystem& sys);

/// Coefficients of f in main_var, descending, each a polynomial in param_var
/// returned as an ascending dense vector.
std::vector<std::vector<Rational>> parameter_coefficients(const ExactPolynomial& f, int main_var, int param_var);

struct ContourParams {
    double u_min = -120.0;
    double u_max = 120.0;
    double u_step = 0.001;
    /// Relative residual bound applied to both equations of the system.
    double tol = 1e-6;
    /// Also sweep v = 1/u over [-1, 1] with step u_step.
    bool reciprocal_sweep = true;
    bool dedup = true;
    double dedup_cell = 1e-4;
    unsigned threads = 1;

    void validate() const;
};

/// Candidate zeros (x, y) at slope u before the residual filter: x runs over
/// the roots of t_poly(., u) and y over the roots of p(x, .).
std::vector<std::pair<Complex, Complex>> contour_candidates(const ContourSystem& sys, const EliminationResult& elim,
                                                            double u);

/// Contour cloud: for each u on the sweep the roots x of t_poly(., u) (and y
/// of s_poly(., u)) are completed through p to zeros (x, y), which are kept
/// only when both p and g have relative residual <= tol. Points carry the
/// slope u in `parameter` (u = 1/v for the reciprocal sweep, inf at v = 0)
/// and witnesses (x, y, u).
PointCloud contour2d(const ContourSystem& sys, const EliminationResult& elim, const ContourParams& params);

}  // namespace amoeba
