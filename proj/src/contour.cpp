#include "amoeba/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "amoeba/parallel.hpp"
#include "amoeba/rootfind.hpp"

namespace amoeba {

namespace {

/// Dense univariate polynomial over Q, ascending coefficients.
using Dense = std::vector<Rational>;

void trim(Dense& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Dense remainder(Dense a, const Dense& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

/// Monic gcd; empty when both inputs are zero.
Dense dense_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Exponent unit(int nvars, int var, int power) {
    Exponent e(nvars, 0);
    e[var] = power;
    return e;
}

/// Flat term table for fast relative residuals of (x, y, u) polynomials.
class TermTable {
public:
    explicit TermTable(const ExactPolynomial& f) {
        for (const auto& [e, c] : f.terms()) {
            Term t;
            for (int i = 0; i < f.nvars(); ++i) t.e[i] = e[i];
            t.c = c.get_d();
            terms_.push_back(t);
        }
    }

    double relative_residual(const std::array<Complex, 3>& pt) const {
        Complex sum = 0.0;
        double scale = 0.0;
        for (const Term& t : terms_) {
            Complex v = t.c;
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < t.e[i]; ++k) v *= pt[i];
            }
            sum += v;
            scale += std::abs(v);
        }
        return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
    }

private:
    struct Term {
        std::array<int, 3> e{};
        double c = 0.0;
    };
    std::vector<Term> terms_;
};

/// Polynomial in one main variable whose coefficients are polynomials in a
/// second (numeric) variable; evaluates to a dense descending vector.
class UnivariateFamily {
public:
    UnivariateFamily() = default;
    UnivariateFamily(const ExactPolynomial& f, int main_var, int param_var) {
        for (const auto& row : parameter_coefficients(f, main_var, param_var)) {
            std::vector<double> r;
            for (const auto& c : row) r.push_back(c.get_d());
            rows_.push_back(std::move(r));
        }
    }

    void at(Complex param, std::vector<Complex>& out) const {
        out.resize(rows_.size());
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Complex v = 0.0;
            for (std::size_t i = rows_[k].size(); i-- > 0;) v = v * param + rows_[k][i];
            out[k] = v;
        }
    }

private:
    std::vector<std::vector<double>> rows_;
};

bool all_zero(const std::vector<Complex>& c) {
    return std::all_of(c.begin(), c.end(), [](const Complex& v) { return v == Complex(0.0, 0.0); });
}

struct Sweeper {
    UnivariateFamily t_x;     // t(x, u), main x
    UnivariateFamily s_y;     // s(y, u), main y
    UnivariateFamily p_in_y;  // p(x, y) in y, coefficients in x
    UnivariateFamily p_in_x;  // p(x, y) in x, coefficients in y
    TermTable p_table;
    TermTable g_table;
    bool reciprocal = false;

    Sweeper(const ContourSystem& sys, const ExactPolynomial& s, const ExactPolynomial& t, bool recip)
        : t_x(t, 0, kParamVar),
          s_y(s, 1, kParamVar),
          p_in_y(lift(sys.p), 1, 0),
          p_in_x(lift(sys.p), 0, 1),
          p_table(lift(sys.p)),
          g_table(recip ? sys.g_reciprocal : sys.g),
          reciprocal(recip) {}

    static ExactPolynomial lift(const ExactPolynomial& p) {
        ExactPolynomial out(3);
        for (const auto& [e, c] : p.terms()) out.add_term({e[0], e[1], 0}, c);
        return out;
    }

    /// Candidate pairs through the x-roots of t (and, when both_ways, the
    /// y-roots of s).
    void candidates(double param, bool both_ways, std::vector<std::pair<Complex, Complex>>& out,
                    std::vector<Complex>& scratch) const {
        out.clear();
        const std::array<const UnivariateFamily*, 2> primary{&t_x, &s_y};
        const std::array<const UnivariateFamily*, 2> completion{&p_in_y, &p_in_x};
        for (int dir = 0; dir < (both_ways ? 2 : 1); ++dir) {
            primary[dir]->at(param, scratch);
            if (all_zero(scratch)) continue;
            const RootSet first = roots(scratch);
            for (const Complex& a : first.roots) {
                completion[dir]->at(a, scratch);
                if (all_zero(scratch)) continue;
                const RootSet second = roots(scratch);
                for (const Complex& b : second.roots) {
                    out.emplace_back(dir == 0 ? a : b, dir == 0 ? b : a);
                }
            }
        }
    }
};

}  // namespace

ContourSystem build_contour_system(const ExactPolynomial& p_in) {
    if (p_in.nvars() != 2) throw DomainError("contour needs a bivariate polynomial");
    ContourSystem sys;
    sys.p = normalize_to_polynomial(p_in);
    ExactPolynomial tx(3), ty(3);
    for (const auto& [e, c] : sys.p.terms()) {
        tx.add_term({e[0], e[1], 0}, c * e[0]);
        ty.add_term({e[0], e[1], 0}, c * e[1]);
    }
    const ExactPolynomial param = ExactPolynomial::variable(3, kParamVar);
    sys.g = tx - param * ty;
    sys.g_reciprocal = ty - param * tx;
    return sys;
}

ExactPolynomial sylvester_resultant(const ExactPolynomial& f, const ExactPolynomial& g, int var) {
    if (f.nvars() != g.nvars()) throw DomainError("resultant of polynomials in different rings");
    const int nv = f.nvars();
    const auto fl = coefficient_list(f, var);
    const auto gl = coefficient_list(g, var);
    const int m = fl.degree(), n = gl.degree();
    if (m < 1 || n < 1) throw DomainError("resultant needs positive degree in the eliminated variable");

    const int size = m + n;
    std::vector<std::vector<ExactPolynomial>> a(size, std::vector<ExactPolynomial>(size, ExactPolynomial(nv)));
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k <= m; ++k) a[row][row + k] = fl.entries[k];
    }
    for (int row = 0; row < m; ++row) {
        for (int k = 0; k <= n; ++k) a[n + row][row + k] = gl.entries[k];
    }

    // Bareiss: every division below is exact.
    ExactPolynomial prev = ExactPolynomial::constant(nv, Rational(1));
    bool negate = false;
    for (int k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size && swap_row < 0; ++i) {
                if (!a[i][k].is_zero()) swap_row = i;
            }
            if (swap_row < 0) return ExactPolynomial(nv);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = ExactPolynomial(nv);
        }
        prev = a[k][k];
    }
    ExactPolynomial det = a[size - 1][size - 1];
    if (negate) det = -det;
    return det;
}

std::vector<std::vector<Rational>> parameter_coefficients(const ExactPolynomial& f, int main_var, int param_var) {
    const auto list = coefficient_list(f, main_var);
    std::vector<std::vector<Rational>> out;
    for (const auto& entry : list.entries) {
        std::vector<Rational> row;
        for (const auto& [e, c] : entry.terms()) {
            for (int i = 0; i < f.nvars(); ++i) {
                if (i != param_var && i != main_var && e[i] != 0) {
                    throw DomainError("coefficient depends on a variable other than the parameter");
                }
            }
            if (e[param_var] < 0) throw DomainError("negative power of the parameter");
            const std::size_t k = static_cast<std::size_t>(e[param_var]);
            if (row.size() <= k) row.resize(k + 1, Rational(0));
            row[k] = c;
        }
        out.push_back(std::move(row));
    }
    return out;
}

ExactPolynomial remove_content(const ExactPolynomial& f_in, int main_var, int param_var) {
    if (f_in.is_zero()) throw DomainError("content of the zero polynomial");
    const int nv = f_in.nvars();
    ExactPolynomial f = f_in.shifted(unit(nv, main_var, -f_in.min_degree(main_var)));

    Dense g;
    for (auto row : parameter_coefficients(f, main_var, param_var)) g = dense_gcd(g, std::move(row));
    if (g.size() > 1) {
        ExactPolynomial divisor(nv);
        for (std::size_t k = 0; k < g.size(); ++k) divisor.add_term(unit(nv, param_var, static_cast<int>(k)), g[k]);
        f = divide_exact(f, divisor);
    }

    Integer den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : f.terms()) {
        den_lcm = lcm(den_lcm, Integer(c.get_den()));
        num_gcd = gcd(num_gcd, Integer(c.get_num()));
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(f.terms().rbegin()->second) < 0) scale = -scale;
    return f * scale;
}

EliminationResult eliminate(const ContourSystem& sys) {
    const ExactPolynomial p3 = Sweeper::lift(sys.p);
    if (p3.degree(0) < 1 || p3.degree(1) < 1) {
        throw DomainError("contour elimination needs positive degree in both x and y");
    }
    auto resultant = [&](const ExactPolynomial& g, int var, int main_var) {
        ExactPolynomial r = sylvester_resultant(p3, g, var);
        if (r.is_zero()) throw DomainError("resultant vanishes identically: p and g share a factor");
        return remove_content(r, main_var, kParamVar);
    };
    EliminationResult out;
    out.s_poly = resultant(sys.g, 0, 1);
    out.t_poly = resultant(sys.g, 1, 0);
    out.s_reciprocal = resultant(sys.g_reciprocal, 0, 1);
    out.t_reciprocal = resultant(sys.g_reciprocal, 1, 0);
    return out;
}

void ContourParams::validate() const {
    if (!(u_min < u_max)) throw DomainError("contour sweep needs u_min < u_max");
    if (!(u_step > 0)) throw DomainError("contour sweep needs a positive step");
    if (!(tol > 0)) throw DomainError("contour residual tolerance must be positive");
}

std::vector<std::pair<Complex, Complex>> contour_candidates(const ContourSystem& sys, const EliminationResult& elim,
                                                            double u) {
    const Sweeper sweeper(sys, elim.s_poly, elim.t_poly, false);
    std::vector<std::pair<Complex, Complex>> out;
    std::vector<Complex> scratch;
    sweeper.candidates(u, false, out, scratch);
    return out;
}

PointCloud contour2d(const ContourSystem& sys, const EliminationResult& elim, const ContourParams& params) {
    params.validate();
    const std::size_t steps = static_cast<std::size_t>(std::floor((params.u_max - params.u_min) / params.u_step + 1e-9)) + 1;
    const std::size_t v_steps = params.reciprocal_sweep ? static_cast<std::size_t>(std::floor(2.0 / params.u_step + 1e-9)) + 1 : 0;

    const Sweeper direct(sys, elim.s_poly, elim.t_poly, false);
    const Sweeper reciprocal(sys, elim.s_reciprocal, elim.t_reciprocal, true);

    const unsigned threads = std::max(1u, params.threads);
    std::vector<PointCloud> parts(threads);
    parallel_chunks(steps + v_steps, threads, [&](std::size_t part, std::size_t begin, std::size_t end) {
        PointCloud& out = parts[part];
        out.witness_dim = 3;
        std::vector<std::pair<Complex, Complex>> cands;
        std::vector<Complex> scratch;
        for (std::size_t k = begin; k < end; ++k) {
            const bool recip = k >= steps;
            const double param = recip ? -1.0 + params.u_step * static_cast<double>(k - steps)
                                       : params.u_min + params.u_step * static_cast<double>(k);
            const Sweeper& sw = recip ? reciprocal : direct;
            sw.candidates(param, true, cands, scratch);
            ++out.skips.samples;
            for (const auto& [x, y] : cands) {
                if (x == Complex(0.0, 0.0) || y == Complex(0.0, 0.0)) {
                    ++out.skips.zero_roots;
                    continue;
                }
                const double rp = sw.p_table.relative_residual({x, y, 0.0});
                const double rg = sw.g_table.relative_residual({x, y, param});
                if (!(rp <= params.tol && rg <= params.tol)) {
                    ++out.skips.rejected;
                    continue;
                }
                const double u = recip ? (param == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / param)
                                       : param;
                out.points.push_back({std::log(std::abs(x)), std::log(std::abs(y))});
                out.parameter.push_back(u);
                Witness w;
                w.zero = {x, y, Complex(u, 0.0)};
                w.residual = std::max(rp, rg);
                out.witnesses.push_back(w);
            }
        }
    });

    PointCloud cloud;
    cloud.witness_dim = 3;
    for (const auto& part : parts) cloud.append(part);
    sort_and_deduplicate(cloud, params.dedup ? params.dedup_cell : 0.0);
    return cloud;
}

}  // namespace amoeba
