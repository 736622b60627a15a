#include "amoeba/newton_polytope.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace amoeba {

namespace {

using Vec3 = std::array<long long, 3>;

long long dot(const Exponent& a, const Exponent& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

Exponent primitive(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    Exponent out;
    for (long long x : v) out.push_back(static_cast<int>(g ? x / g : x));
    return out;
}

long long cross2(const Exponent& o, const Exponent& a, const Exponent& b) {
    return static_cast<long long>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<long long>(a[1] - o[1]) * (b[0] - o[0]);
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 diff3(const Exponent& a, const Exponent& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

long long det3(const Exponent& a, const Exponent& b, const Exponent& c) {
    const Vec3 x = cross3({b[0], b[1], b[2]}, {c[0], c[1], c[2]});
    return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

void hull_1d(const std::vector<Exponent>& pts, NewtonPolytope& out) {
    const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    if ((*lo)[0] == (*hi)[0]) throw DomainError("degenerate support: a single point");
    out.vertices = {*lo, *hi};
    out.facets = {{{-1}, -(*lo)[0]}, {{1}, (*hi)[0]}};
}

void hull_2d(std::vector<Exponent> pts, NewtonPolytope& out) {
    std::sort(pts.begin(), pts.end());
    // Andrew's monotone chain; collinear points are dropped.
    std::vector<Exponent> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 0 ? k - 1 : 0);
    if (hull.size() < 3) throw DomainError("degenerate support: all points are collinear");

    const auto start = std::min_element(hull.begin(), hull.end(), [](const Exponent& a, const Exponent& b) {
        return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
    });
    std::rotate(hull.begin(), start, hull.end());

    out.vertices = hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Exponent& a = hull[i];
        const Exponent& b = hull[(i + 1) % hull.size()];
        // Counterclockwise traversal: the outward normal of edge a->b is (dy, -dx).
        Exponent n = primitive({static_cast<long long>(b[1] - a[1]), -static_cast<long long>(b[0] - a[0])});
        out.facets.push_back({n, static_cast<long>(dot(n, a))});
    }
}

void hull_3d(const std::vector<Exponent>& pts, NewtonPolytope& out) {
    const std::size_t n = pts.size();
    bool full = false;
    for (std::size_t i = 1; i < n && !full; ++i) {
        for (std::size_t j = i + 1; j < n && !full; ++j) {
            for (std::size_t k = j + 1; k < n && !full; ++k) {
                Exponent a{pts[i][0] - pts[0][0], pts[i][1] - pts[0][1], pts[i][2] - pts[0][2]};
                Exponent b{pts[j][0] - pts[0][0], pts[j][1] - pts[0][1], pts[j][2] - pts[0][2]};
                Exponent c{pts[k][0] - pts[0][0], pts[k][1] - pts[0][1], pts[k][2] - pts[0][2]};
                full = det3(a, b, c) != 0;
            }
        }
    }
    if (!full) throw DomainError("degenerate support: all points are coplanar");

    // Brute force over point triples; input sets are small.
    std::set<Exponent> normals;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec3 c = cross3(diff3(pts[j], pts[i]), diff3(pts[k], pts[i]));
                if (c == Vec3{0, 0, 0}) continue;
                const Exponent nrm = primitive({c[0], c[1], c[2]});
                const long long level = dot(nrm, pts[i]);
                bool below = true, above = true;
                for (const auto& p : pts) {
                    const long long d = dot(nrm, p);
                    below = below && d <= level;
                    above = above && d >= level;
                }
                if (below) normals.insert(nrm);
                if (above) normals.insert(primitive({-c[0], -c[1], -c[2]}));
            }
        }
    }
    for (const auto& nrm : normals) {
        long long m = dot(nrm, pts[0]);
        for (const auto& p : pts) m = std::max(m, dot(nrm, p));
        out.facets.push_back({nrm, static_cast<long>(m)});
    }

    // A point is a vertex iff the normals of the facets through it span R^3.
    for (const auto& p : pts) {
        std::vector<const Exponent*> active;
        for (const auto& f : out.facets) {
            if (dot(f.normal, p) == f.support) active.push_back(&f.normal);
        }
        bool vertex = false;
        for (std::size_t i = 0; i < active.size() && !vertex; ++i) {
            for (std::size_t j = i + 1; j < active.size() && !vertex; ++j) {
                for (std::size_t k = j + 1; k < active.size() && !vertex; ++k) {
                    vertex = det3(*active[i], *active[j], *active[k]) != 0;
                }
            }
        }
        if (vertex) out.vertices.push_back(p);
    }
}

void enumerate_lattice_points(NewtonPolytope& out) {
    const int d = out.dim;
    Exponent lo = out.vertices.front(), hi = out.vertices.front();
    for (const auto& v : out.vertices) {
        for (int i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    Exponent s = lo;
    while (true) {
        if (out.contains(s)) out.lattice_points.push_back(s);
        int i = 0;
        while (i < d && s[i] == hi[i]) {
            s[i] = lo[i];
            ++i;
        }
        if (i == d) break;
        ++s[i];
    }
    std::sort(out.lattice_points.begin(), out.lattice_points.end(), ColexLess{});
}

}  // namespace

bool NewtonPolytope::contains(const Exponent& s) const {
    for (const auto& f : facets) {
        if (dot(f.normal, s) > f.support) return false;
    }
    return true;
}

double NewtonPolytope::facet_violation(const std::vector<double>& s) const {
    double worst = -1e300;
    for (const auto& f : facets) {
        double v = -static_cast<double>(f.support);
        for (int i = 0; i < dim; ++i) v += f.normal[i] * s.at(i);
        worst = std::max(worst, v);
    }
    return worst;
}

NewtonPolytope convex_hull(const std::vector<Exponent>& input) {
    if (input.empty()) throw DomainError("convex hull of an empty point set");
    const std::size_t d = input.front().size();
    if (d < 1 || d > 3) throw DomainError("only dimensions 1, 2 and 3 are supported");
    for (const auto& p : input) {
        if (p.size() != d) throw DomainError("points of mixed dimension");
    }
    std::vector<Exponent> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    NewtonPolytope out;
    out.dim = static_cast<int>(d);
    if (d == 1) {
        hull_1d(pts, out);
    } else if (d == 2) {
        hull_2d(pts, out);
    } else {
        hull_3d(pts, out);
    }
    enumerate_lattice_points(out);
    return out;
}

}  // namespace amoeba
