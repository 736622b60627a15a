#include "amoeba/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace amoeba {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
    Complex value;
    /// Newton correction p(z)/p'(z); infinite when p'(z) = 0.
    Complex newton;
    /// sum_k |c_k| |z|^(n-k), the rounding scale of the evaluation.
    double magnitude;
};

Evaluation evaluate_with_derivative(std::span<const Complex> c, Complex z) {
    const std::size_t n = c.size() - 1;
    const double az = std::abs(z);
    if (az <= 1.0) {
        Complex p = c[0], dp = 0.0;
        double mag = std::abs(c[0]);
        for (std::size_t k = 1; k <= n; ++k) {
            dp = dp * z + p;
            p = p * z + c[k];
            mag = mag * az + std::abs(c[k]);
        }
        return {p, p / dp, mag};
    }
    // Outside the unit disk, evaluate the reversed polynomial q(w) = w^n p(1/w)
    // so that no power of z overflows; then p/p' = z / (n - w q'(w)/q(w)).
    const Complex w = 1.0 / z;
    const double aw = 1.0 / az;
    Complex q = c[n], dq = 0.0;
    double mag = std::abs(c[n]);
    for (std::size_t k = n; k-- > 0;) {
        dq = dq * w + q;
        q = q * w + c[k];
        mag = mag * aw + std::abs(c[k]);
    }
    const Complex zn = std::pow(z, static_cast<int>(n));
    const Complex newton = z / (static_cast<double>(n) - w * dq / q);
    return {q * zn, newton, mag * std::pow(az, static_cast<double>(n))};
}

double fujiwara_bound(std::span<const Complex> c) {
    const std::size_t n = c.size() - 1;
    const double lead = std::abs(c[0]);
    double bound = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double ratio = std::abs(c[k]) / lead;
        if (k == n) ratio /= 2.0;
        bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
    }
    return 2.0 * bound;
}

void solve_quadratic(std::span<const Complex> c, std::vector<Complex>& out) {
    const Complex a = c[0], b = c[1], cc = c[2];
    const Complex disc = std::sqrt(b * b - 4.0 * a * cc);
    // Pick the sign that avoids cancellation.
    const Complex q = std::abs(b + disc) >= std::abs(b - disc) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    out.push_back(q / a);
    out.push_back(cc / q);
}

bool aberth(std::span<const Complex> c, std::vector<Complex>& z) {
    const std::size_t n = c.size() - 1;
    const double radius = fujiwara_bound(c);
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Offset angle breaks the symmetry of real-coefficient inputs.
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, theta);
    }
    std::vector<bool> done(n, false);
    for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const Evaluation ev = evaluate_with_derivative(c, z[i]);
            if (std::abs(ev.value) <= 4.0 * static_cast<double>(n) * kEps * ev.magnitude) {
                done[i] = true;
                continue;
            }
            all_done = false;
            Complex sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            }
            const Complex step = ev.newton / (1.0 - ev.newton * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                z[i] += Complex(kEps, kEps) * (1.0 + std::abs(z[i]));
                continue;
            }
            z[i] -= step;
            if (std::abs(step) <= kEps * std::abs(z[i])) done[i] = true;
        }
        if (all_done) return true;
    }
    return std::all_of(done.begin(), done.end(), [](bool d) { return d; });
}

}  // namespace

Complex horner(std::span<const Complex> coeffs, Complex x) {
    Complex p = 0.0;
    for (const Complex& c : coeffs) p = p * x + c;
    return p;
}

RootSet roots(std::span<const Complex> coeffs, double tol) {
    const Complex zero(0.0, 0.0);
    std::size_t first = 0;
    while (first < coeffs.size() && coeffs[first] == zero) ++first;
    if (first == coeffs.size()) throw DomainError("all-zero coefficient vector");

    RootSet out;
    out.leading_trimmed = static_cast<int>(first);
    std::size_t last = coeffs.size();
    while (coeffs[last - 1] == zero) --last;
    out.zero_roots = static_cast<int>(coeffs.size() - last);

    const std::span<const Complex> c = coeffs.subspan(first, last - first);
    const std::size_t n = c.size() - 1;
    if (n == 0) {
        out.constant = out.zero_roots == 0;
        return out;
    }
    if (n == 1) {
        out.roots.push_back(-c[1] / c[0]);
    } else if (n == 2) {
        solve_quadratic(c, out.roots);
    } else {
        out.converged = aberth(c, out.roots);
    }

    double cmax = 0.0;
    for (const Complex& ck : c) cmax = std::max(cmax, std::abs(ck));
    for (const Complex& r : out.roots) {
        const double scale = cmax * std::pow(std::max(1.0, std::abs(r)), static_cast<double>(n));
        out.residual_bound = std::max(out.residual_bound, std::abs(evaluate_with_derivative(c, r).value) / scale);
    }
    if (out.residual_bound > tol) out.converged = false;
    return out;
}

}  // namespace amoeba
