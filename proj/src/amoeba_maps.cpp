#include "amoeba/amoeba_maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

#include "amoeba/parallel.hpp"

namespace amoeba {

void SamplingGrid::validate() const {
    if (n_r < 2) throw DomainError("n_r must be at least 2");
    if (n_phi < 2) throw DomainError("n_phi must be at least 2");
    if (!(a < b)) throw DomainError("sampling bounds need a < b");
}

std::vector<double> SamplingGrid::radii() const {
    validate();
    std::vector<double> r(n_r);
    const double last = n_r - 1;
    if (spacing == RadiusSpacing::logarithmic) {
        for (int k = 0; k < n_r; ++k) r[k] = std::exp(a + (b - a) * k / last);
    } else {
        const double lo = std::exp(a), h = (std::exp(b) - lo) / last;
        for (int k = 0; k < n_r; ++k) r[k] = lo + h * k;
    }
    return r;
}

std::vector<double> SamplingGrid::angles() const {
    validate();
    std::vector<double> phi(n_phi);
    for (int k = 0; k < n_phi; ++k) phi[k] = 2.0 * std::numbers::pi * k / (n_phi - 1);
    return phi;
}

SkipReport& SkipReport::operator+=(const SkipReport& o) {
    samples += o.samples;
    zero_roots += o.zero_roots;
    degree_drops += o.degree_drops;
    nonconverged += o.nonconverged;
    rejected += o.rejected;
    return *this;
}

void PointCloud::append(const PointCloud& other) {
    points.insert(points.end(), other.points.begin(), other.points.end());
    witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    parameter.insert(parameter.end(), other.parameter.begin(), other.parameter.end());
    skips += other.skips;
}

void sort_and_deduplicate(PointCloud& cloud, double cell) {
    const std::size_t n = cloud.points.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key = [&](std::size_t i) {
        const Point2& p = cloud.points[i];
        if (cell > 0) {
            return std::make_tuple(std::llround(p[0] / cell), std::llround(p[1] / cell), p[0], p[1]);
        }
        return std::make_tuple(0LL, 0LL, p[0], p[1]);
    };
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return key(i) < key(j); });

    PointCloud out;
    out.space = cloud.space;
    out.witness_dim = cloud.witness_dim;
    out.skips = cloud.skips;
    const bool w = cloud.has_witnesses(), u = !cloud.parameter.empty();
    bool have_last = false;
    long long last_x = 0, last_y = 0;
    for (std::size_t i : order) {
        if (cell > 0) {
            const long long cx = std::llround(cloud.points[i][0] / cell);
            const long long cy = std::llround(cloud.points[i][1] / cell);
            if (have_last && cx == last_x && cy == last_y) continue;
            have_last = true;
            last_x = cx;
            last_y = cy;
        }
        out.points.push_back(cloud.points[i]);
        if (w) out.witnesses.push_back(cloud.witnesses[i]);
        if (u) out.parameter.push_back(cloud.parameter[i]);
    }
    cloud = std::move(out);
}

namespace {

Complex ipow(Complex x, int k) {
    if (k < 0) return 1.0 / ipow(x, -k);
    Complex r = 1.0;
    for (; k > 0; --k) r *= x;
    return r;
}

/// p viewed as a polynomial in the solved variable whose coefficients are
/// univariate in the sampled variable.
struct Slice {
    std::vector<std::vector<std::pair<int, Complex>>> entries;
    int max_power = 0;
};

Slice make_slice(const ComplexPolynomial& p, int sampled) {
    const int solved = 1 - sampled;
    const auto list = coefficient_list(p, solved);
    Slice s;
    for (const auto& entry : list.entries) {
        std::vector<std::pair<int, Complex>> terms;
        for (const auto& [e, c] : entry.terms()) {
            terms.emplace_back(e[sampled], c);
            s.max_power = std::max(s.max_power, e[sampled]);
        }
        s.entries.push_back(std::move(terms));
    }
    return s;
}

/// Relative residual of a bivariate polynomial, with a flat term list.
class BivariateResidual {
public:
    explicit BivariateResidual(const ComplexPolynomial& p) {
        for (const auto& [e, c] : p.terms()) terms_.push_back({e[0], e[1], c});
    }
    double operator()(Complex x, Complex y) const {
        Complex sum = 0.0;
        double scale = 0.0;
        for (const auto& t : terms_) {
            const Complex v = t.c * ipow(x, t.ex) * ipow(y, t.ey);
            sum += v;
            scale += std::abs(v);
        }
        return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
    }

private:
    struct Term {
        int ex, ey;
        Complex c;
    };
    std::vector<Term> terms_;
};

/// One directional sweep: sample variable `sampled` on the torus grid and
/// solve p for the other one. residual(x, y) measures the witness (x, y);
/// `z` is appended to witnesses when witness_dim is 3.
template <class ResidualFn>
PointCloud sweep(const ComplexPolynomial& p, int sampled, const std::vector<double>& radii,
                 const std::vector<double>& angles, const SweepOptions& opt, const ResidualFn& residual, Complex z,
                 int witness_dim) {
    const ComplexPolynomial normalized = normalize_to_polynomial(p);
    const Slice slice = make_slice(normalized, sampled);
    const unsigned threads = std::max(1u, opt.threads);
    std::vector<PointCloud> parts(threads);

    parallel_chunks(radii.size(), threads, [&](std::size_t part, std::size_t begin, std::size_t end) {
        PointCloud& out = parts[part];
        std::vector<Complex> powers(slice.max_power + 1);
        std::vector<Complex> coeffs(slice.entries.size());
        for (std::size_t ir = begin; ir < end; ++ir) {
            for (double phi : angles) {
                const Complex s = std::polar(radii[ir], phi);
                powers[0] = 1.0;
                for (int k = 1; k <= slice.max_power; ++k) powers[k] = powers[k - 1] * s;
                for (std::size_t k = 0; k < slice.entries.size(); ++k) {
                    Complex v = 0.0;
                    for (const auto& [e, c] : slice.entries[k]) v += c * powers[e];
                    coeffs[k] = v;
                }
                ++out.skips.samples;
                bool all_zero = true;
                for (const Complex& c : coeffs) all_zero = all_zero && c == Complex(0.0, 0.0);
                if (all_zero) continue;

                const RootSet rs = roots(coeffs, opt.tol);
                out.skips.zero_roots += static_cast<std::size_t>(rs.zero_roots);
                if (rs.leading_trimmed > 0) ++out.skips.degree_drops;
                if (!rs.converged) ++out.skips.nonconverged;
                for (const Complex& r : rs.roots) {
                    const Complex x = sampled == 0 ? s : r;
                    const Complex y = sampled == 0 ? r : s;
                    const double res = residual(x, y);
                    if (!(res <= opt.tol)) {
                        ++out.skips.rejected;
                        continue;
                    }
                    out.points.push_back({std::log(std::abs(x)), std::log(std::abs(y))});
                    if (opt.keep_witnesses) {
                        Witness w;
                        w.zero = {x, y, witness_dim == 3 ? z : Complex(0.0, 0.0)};
                        w.residual = res;
                        out.witnesses.push_back(w);
                    }
                }
            }
        }
    });

    PointCloud merged;
    merged.witness_dim = witness_dim;
    for (const auto& part : parts) merged.append(part);
    return merged;
}

void require_bivariate(const ComplexPolynomial& p) {
    if (p.nvars() != 2) throw DomainError("expected a bivariate polynomial");
    if (p.size() < 2) throw DomainError("a monomial has an empty amoeba");
}

PointCloud both_sweeps(const ComplexPolynomial& restricted, const SamplingGrid& grid, const SweepOptions& opt,
                       const auto& residual, Complex z, int witness_dim) {
    const auto radii = grid.radii();
    const auto angles = grid.angles();
    PointCloud cloud = sweep(restricted, 0, radii, angles, opt, residual, z, witness_dim);
    cloud.append(sweep(restricted, 1, radii, angles, opt, residual, z, witness_dim));
    cloud.witness_dim = witness_dim;
    return cloud;
}

}  // namespace

PointCloud amoeba2d(const ComplexPolynomial& p, const SamplingGrid& grid, const SweepOptions& options) {
    require_bivariate(p);
    grid.validate();
    const BivariateResidual residual(p);
    PointCloud cloud = both_sweeps(p, grid, options, residual, Complex(0.0, 0.0), 2);
    sort_and_deduplicate(cloud, options.dedup ? options.dedup_cell : 0.0);
    return cloud;
}

PointCloud amoeba2d(const ExactPolynomial& p, const SamplingGrid& grid, const SweepOptions& options) {
    return amoeba2d(to_complex(p), grid, options);
}

std::vector<double> moment_map(std::span<const Complex> x, const std::vector<Exponent>& support) {
    if (support.empty()) throw DomainError("moment map over an empty support");
    const std::size_t n = x.size();
    std::vector<double> logs(n);
    for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(std::abs(x[i]));

    // Weights |x^a| in log space; max-shifted so nothing overflows.
    std::vector<double> lw(support.size());
    double top = -INFINITY;
    for (std::size_t k = 0; k < support.size(); ++k) {
        if (support[k].size() != n) throw DomainError("support dimension does not match the point");
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int e = support[k][i];
            if (e == 0) continue;
            if (e < 0 && std::isinf(logs[i]) && logs[i] < 0) {
                throw DomainError("zero coordinate under a negative exponent");
            }
            s += e * logs[i];
        }
        lw[k] = s;
        top = std::max(top, s);
    }
    if (!std::isfinite(top)) throw DomainError("every monomial vanishes at this point");

    std::vector<double> num(n, 0.0);
    double den = 0.0;
    for (std::size_t k = 0; k < support.size(); ++k) {
        const double w = std::exp(lw[k] - top);
        den += w;
        for (std::size_t i = 0; i < n; ++i) num[i] += w * support[k][i];
    }
    for (double& v : num) v /= den;
    return num;
}

PointCloud compactified_amoeba(const ExactPolynomial& p, const SamplingGrid& grid, const SweepOptions& options) {
    const ComplexPolynomial pc = to_complex(p);
    require_bivariate(pc);
    grid.validate();
    const BivariateResidual residual(pc);
    SweepOptions raw = options;
    raw.keep_witnesses = true;
    PointCloud log_cloud = both_sweeps(pc, grid, raw, residual, Complex(0.0, 0.0), 2);

    const auto support = p.support();
    PointCloud cloud;
    cloud.space = Space::moment;
    cloud.skips = log_cloud.skips;
    cloud.points.reserve(log_cloud.size());
    for (const Witness& w : log_cloud.witnesses) {
        const auto mu = moment_map(std::span<const Complex>(w.zero.data(), 2), support);
        cloud.points.push_back({mu[0], mu[1]});
    }
    if (options.keep_witnesses) cloud.witnesses = std::move(log_cloud.witnesses);
    sort_and_deduplicate(cloud, options.dedup ? options.dedup_cell : 0.0);
    return cloud;
}

PointCloud amoeba3d_section(const ExactPolynomial& p, double log_abs_z, const SamplingGrid& grid, int n_phi_z,
                            const SweepOptions& options) {
    if (p.nvars() != 3) throw DomainError("expected a trivariate polynomial");
    if (n_phi_z < 1) throw DomainError("n_phi_z must be positive");
    grid.validate();
    const ComplexPolynomial pc = to_complex(p);
    const double radius = std::exp(log_abs_z);

    PointCloud cloud;
    cloud.witness_dim = 3;
    for (int k = 0; k < n_phi_z; ++k) {
        const double phi = n_phi_z == 1 ? 0.0 : 2.0 * std::numbers::pi * k / (n_phi_z - 1);
        const Complex z = std::polar(radius, phi);
        const ComplexPolynomial restricted = substitute(pc, 2, z);
        if (restricted.size() < 2) continue;
        auto residual = [&pc, z](Complex x, Complex y) {
            const std::array<Complex, 3> pt{x, y, z};
            return relative_residual(pc, pt);
        };
        cloud.append(both_sweeps(restricted, grid, options, residual, z, 3));
    }
    sort_and_deduplicate(cloud, options.dedup ? options.dedup_cell : 0.0);
    return cloud;
}

}  // namespace amoeba
