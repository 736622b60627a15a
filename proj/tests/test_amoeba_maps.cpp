#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/parse.hpp"
#include "fixtures.hpp"

using namespace amoeba;

namespace {

SamplingGrid small_grid(int n_r = 40, int n_phi = 24) {
    SamplingGrid g;
    g.n_r = n_r;
    g.n_phi = n_phi;
    return g;
}

SweepOptions raw() {
    SweepOptions o;
    o.dedup = false;
    return o;
}

}  // namespace

TEST_CASE("grid: validation and spacing") {
    SamplingGrid g;
    CHECK_NOTHROW(g.validate());
    g.n_r = 1;
    CHECK_THROWS_AS(g.validate(), DomainError);
    g = SamplingGrid{};
    g.a = 1;
    g.b = 1;
    CHECK_THROWS_AS(g.validate(), DomainError);

    g = small_grid(5, 5);
    const auto log_r = g.radii();
    REQUIRE(log_r.size() == 5);
    CHECK(log_r.front() == doctest::Approx(std::exp(-5.0)));
    CHECK(log_r[2] == doctest::Approx(1.0));
    CHECK(log_r.back() == doctest::Approx(std::exp(5.0)));
    g.spacing = RadiusSpacing::linear;
    const auto lin = g.radii();
    CHECK(lin[1] - lin[0] == doctest::Approx(lin[4] - lin[3]));
    CHECK(lin.back() == doctest::Approx(std::exp(5.0)));
    const auto phi = g.angles();
    CHECK(phi.front() == 0.0);
    CHECK(phi.back() == doctest::Approx(2 * std::numbers::pi));
}

TEST_CASE("amoeba2d: constant root") {
    const PointCloud c = amoeba2d(parse_polynomial("y-2", 2), small_grid());
    REQUIRE(!c.empty());
    for (const auto& p : c.points) CHECK(p[1] == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("amoeba2d: linear solve at x = 1") {
    SamplingGrid g;
    g.a = -1;
    g.b = 1;
    g.n_r = 3;
    g.n_phi = 2;
    const PointCloud c = amoeba2d(parse_polynomial("1+x+y", 2), g, raw());
    bool found = false;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (std::abs(c.points[k][0]) < 1e-15 && std::abs(c.witnesses[k].zero[0] - Complex(1.0)) < 1e-15) {
            CHECK(std::abs(c.witnesses[k].zero[1] - Complex(-2.0)) < 1e-14);
            CHECK(c.points[k][1] == doctest::Approx(std::log(2.0)));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("amoeba2d: errors") {
    CHECK_THROWS_AS(amoeba2d(parse_polynomial("x^2y", 2), small_grid()), DomainError);
    CHECK_THROWS_AS(amoeba2d(parse_polynomial("1+x+z", 3), small_grid()), DomainError);
}

TEST_CASE("property: witness soundness and Log consistency") {
    for (const char* text : fixtures::kQuadFixtures) {
        const ExactPolynomial p = parse_polynomial(text, 2);
        const ComplexPolynomial pc = to_complex(p);
        const PointCloud c = amoeba2d(p, small_grid(60, 30));
        REQUIRE(c.witnesses.size() == c.points.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Witness& w = c.witnesses[k];
            const std::array<Complex, 2> pt{w.zero[0], w.zero[1]};
            CHECK(relative_residual(pc, pt) <= 1e-10);
            CHECK(w.residual <= 1e-10);
            CHECK(c.points[k][0] == std::log(std::abs(w.zero[0])));
            CHECK(c.points[k][1] == std::log(std::abs(w.zero[1])));
        }
    }
}

TEST_CASE("property: swap symmetry") {
    for (const char* text : fixtures::kQuadFixtures) {
        const ExactPolynomial p = parse_polynomial(text, 2);
        PointCloud a = amoeba2d(p, small_grid(), raw());
        PointCloud b = amoeba2d(swap_variables(p, 0, 1), small_grid(), raw());
        for (auto& pt : b.points) std::swap(pt[0], pt[1]);
        std::sort(a.points.begin(), a.points.end());
        std::sort(b.points.begin(), b.points.end());
        REQUIRE(a.size() == b.size());
        double worst = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            worst = std::max({worst, std::abs(a.points[k][0] - b.points[k][0]), std::abs(a.points[k][1] - b.points[k][1])});
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("property: real coefficients give conjugate witness pairs") {
    const ExactPolynomial p = parse_polynomial(fixtures::kQuadFixtures[3], 2);
    // An even angle count keeps phi = pi off the grid: p(-1, y) = y^2 there, and
    // rounding in e^{i pi} splits the double root into an unpaired couple.
    const PointCloud c = amoeba2d(p, small_grid(15, 14), raw());
    for (const Witness& w : c.witnesses) {
        const Complex cx = std::conj(w.zero[0]), cy = std::conj(w.zero[1]);
        const bool paired = std::any_of(c.witnesses.begin(), c.witnesses.end(), [&](const Witness& o) {
            return std::abs(o.zero[0] - cx) <= 1e-8 * std::max(1.0, std::abs(cx)) &&
                   std::abs(o.zero[1] - cy) <= 1e-8 * std::max(1.0, std::abs(cy));
        });
        CHECK(paired);
    }
}

TEST_CASE("deduplication") {
    PointCloud c;
    c.points = {{0.5, 0.5}, {0.50000001, 0.5}, {-1, 2}, {0.5, 0.6}};
    sort_and_deduplicate(c, 1e-4);
    CHECK(c.size() == 3);
    CHECK(c.points.front() == Point2{-1, 2});
    PointCloud r;
    r.points = {{0.5, 0.5}, {0.50000001, 0.5}};
    sort_and_deduplicate(r, 0.0);
    CHECK(r.size() == 2);
}

TEST_CASE("moment map") {
    const ExactPolynomial p1 = parse_polynomial(fixtures::kQuadFixtures[0], 2);
    const std::array<Complex, 2> unit{Complex(1.0), std::polar(1.0, 0.7)};
    const auto mu = moment_map(unit, p1.support());
    CHECK(mu[0] == doctest::Approx(2.0 / 3.0));
    CHECK(mu[1] == doctest::Approx(5.0 / 6.0));

    const std::array<Complex, 2> tiny{1e-9, 1e-9};
    const auto corner = moment_map(tiny, p1.support());
    CHECK(corner[0] < 1e-8);
    CHECK(corner[1] < 1e-8);

    const std::array<Complex, 2> huge{1e300, 1e-300};
    const auto far = moment_map(huge, p1.support());
    CHECK(std::isfinite(far[0]));
    CHECK(std::isfinite(far[1]));

    const std::array<Complex, 2> one{Complex(1.0), Complex(1.0)};
    const auto seg = moment_map(one, {{0, 0}, {1, 0}});
    CHECK(seg[0] == doctest::Approx(0.5));
    CHECK(seg[1] == doctest::Approx(0.0));
}

TEST_CASE("compactified amoeba of the line fills the simplex") {
    const ExactPolynomial p = parse_polynomial("1+x+y", 2);
    SamplingGrid g = small_grid(400, 60);
    g.a = -12;
    g.b = 12;
    const PointCloud c = compactified_amoeba(p, g);
    CHECK(c.space == Space::moment);
    REQUIRE(!c.empty());
    double min_x = 1, min_y = 1, min_diag = 1;
    for (const auto& pt : c.points) {
        CHECK(pt[0] >= -1e-12);
        CHECK(pt[1] >= -1e-12);
        CHECK(pt[0] + pt[1] <= 1 + 1e-12);
        min_x = std::min(min_x, pt[0]);
        min_y = std::min(min_y, pt[1]);
        min_diag = std::min(min_diag, 1 - pt[0] - pt[1]);
    }
    CHECK(min_x < 0.05);
    CHECK(min_y < 0.05);
    CHECK(min_diag < 0.05);
}

TEST_CASE("compactified amoeba stays inside the Newton polygon") {
    for (const char* text : fixtures::kQuadFixtures) {
        const ExactPolynomial p = parse_polynomial(text, 2);
        const NewtonPolytope n = newton_polytope(p);
        const PointCloud c = compactified_amoeba(p, small_grid());
        for (const auto& pt : c.points) CHECK(n.facet_violation({pt[0], pt[1]}) <= 1e-12);
    }
}

TEST_CASE("section: z - xy") {
    const ExactPolynomial p = parse_polynomial("z-xy", 3);
    const PointCloud c = amoeba3d_section(p, 2.0, small_grid(), 5);
    REQUIRE(!c.empty());
    CHECK(c.witness_dim == 3);
    for (const auto& pt : c.points) CHECK(std::abs(pt[0] + pt[1] - 2.0) <= 1e-9);
    for (const auto& w : c.witnesses) CHECK(std::log(std::abs(w.zero[2])) == doctest::Approx(2.0));
}

TEST_CASE("section: z-independent polynomial reduces to amoeba2d") {
    const SamplingGrid g = small_grid();
    const PointCloud s = amoeba3d_section(parse_polynomial("1+x+3y+4xy+y^2+x^2y", 3), 1.5, g, 1);
    const PointCloud a = amoeba2d(parse_polynomial("1+x+3y+4xy+y^2+x^2y", 2), g);
    CHECK(s.points == a.points);
}

TEST_CASE("section: errors") {
    CHECK_THROWS_AS(amoeba3d_section(parse_polynomial("1+x+y", 2), 0.0, small_grid(), 1), DomainError);
    CHECK_THROWS_AS(amoeba3d_section(parse_polynomial("1+x+z", 3), 0.0, small_grid(), 0), DomainError);
}
