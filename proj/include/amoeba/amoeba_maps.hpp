#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "amoeba/newton_polytope.hpp"
#include "amoeba/polynomial.hpp"
#include "amoeba/rootfind.hpp"

namespace amoeba {

enum class Space { log, moment };

/// How the |x| samples are spaced between exp(a) and exp(b).
enum class RadiusSpacing {
    /// exp(a + k (b-a)/(n_r-1)): uniform in log|x|.
    logarithmic,
    /// exp(a) + k (exp(b)-exp(a))/(n_r-1): uniform in |x|.
    linear,
};

struct SamplingGrid {
    double a = -5.0;
    double b = 5.0;
    int n_r = 2000;
    int n_phi = 180;
    RadiusSpacing spacing = RadiusSpacing::logarithmic;

    /// Throws DomainError unless n_r >= 2, n_phi >= 2 and a < b.
    void validate() const;
    std::vector<double> radii() const;
    /// k * 2pi / (n_phi - 1), k = 0..n_phi-1; both 0 and 2pi are included.
    std::vector<double> angles() const;
};

/// Complex zero (x, y[, z]) behind a point, with its relative residual
/// |p| / sum |c_a x^a|.
struct Witness {
    std::array<Complex, 3> zero{};
    double residual = 0.0;
};

struct SkipReport {
    std::size_t samples = 0;
    /// Roots at exactly zero (Log is -inf there).
    std::size_t zero_roots = 0;
    /// Samples where the slice lost degree (leading coefficient vanished).
    std::size_t degree_drops = 0;
    /// Slices whose root iteration hit the cap.
    std::size_t nonconverged = 0;
    /// Candidate zeros discarded because their residual exceeded tol.
    std::size_t rejected = 0;

    SkipReport& operator+=(const SkipReport& o);
};

using Point2 = std::array<double, 2>;

struct PointCloud {
    Space space = Space::log;
    /// Number of coordinates stored in each witness (2 or 3).
    int witness_dim = 2;
    std::vector<Point2> points;
    /// Empty, or parallel to points.
    std::vector<Witness> witnesses;
    /// Empty, or parallel to points (contour sweep parameter u).
    std::vector<double> parameter;
    SkipReport skips;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
    bool has_witnesses() const { return !witnesses.empty(); }
    /// Appends other's points, witnesses, parameters and skip counts.
    void append(const PointCloud& other);
};

struct SweepOptions {
    double tol = kDefaultRootTolerance;
    /// Collapse points sharing a cell of side dedup_cell; off = raw output.
    bool dedup = true;
    double dedup_cell = 1e-4;
    bool keep_witnesses = true;
    unsigned threads = 1;
};

/// Sorts points lexicographically (carrying witnesses and parameters along)
/// and, when cell > 0, keeps the first point of every cell x cell square.
void sort_and_deduplicate(PointCloud& cloud, double cell);

/// Affine amoeba of a bivariate polynomial: for every sampled x = r e^{i phi}
/// the y-roots give points (log r, log|y|); the sweep is repeated with x and y
/// interchanged and the two clouds merged. Throws DomainError when p is not
/// bivariate or is a monomial.
PointCloud amoeba2d(const ComplexPolynomial& p, const SamplingGrid& grid, const SweepOptions& options = {});
PointCloud amoeba2d(const ExactPolynomial& p, const SamplingGrid& grid, const SweepOptions& options = {});

/// Moment map sum_a a |x^a| / sum_a |x^a| over the exponent set `support`.
std::vector<double> moment_map(std::span<const Complex> x, const std::vector<Exponent>& support);

/// Image of the sampled zero set under the moment map of support(p).
PointCloud compactified_amoeba(const ExactPolynomial& p, const SamplingGrid& grid, const SweepOptions& options = {});

/// Section of the amoeba of a trivariate polynomial by the plane
/// log|z| = log_abs_z: for every phi_z on a uniform n_phi_z-point grid over
/// [0, 2pi] (just phi_z = 0 when n_phi_z = 1) the bivariate restriction at
/// z = exp(log_abs_z) e^{i phi_z} is swept as in amoeba2d. Witnesses carry
/// (x, y, z) and residuals against the trivariate polynomial.
PointCloud amoeba3d_section(const ExactPolynomial& p, double log_abs_z, const SamplingGrid& grid, int n_phi_z,
                            const SweepOptions& options = {});

}  // namespace amoeba
