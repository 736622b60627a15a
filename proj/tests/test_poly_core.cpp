#include <doctest.h>

#include <random>

#include "amoeba/errors.hpp"
#include "amoeba/newton_polytope.hpp"
#include "amoeba/parse.hpp"
#include "amoeba/polynomial.hpp"
#include "fixtures.hpp"

using namespace amoeba;

namespace {

using fixtures::kP1;
using fixtures::kP4;

ExactPolynomial random_polynomial(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> exp(-2, 4), coeff(-9, 9), den(1, 5), count(1, 7);
    ExactPolynomial p(nvars);
    while (p.is_zero()) {
        for (int k = count(rng); k > 0; --k) {
            Exponent e(nvars);
            for (auto& v : e) v = exp(rng);
            Rational c(coeff(rng), den(rng));
            c.canonicalize();
            p.add_term(e, c);
        }
    }
    return p;
}

}  // namespace

TEST_CASE("parse: fixture polynomial") {
    const ExactPolynomial p = parse_polynomial(kP1, 2);
    CHECK(p.size() == 6);
    CHECK(p.coefficient({2, 1}) == 1);
    CHECK(p.coefficient({1, 1}) == 1);
    CHECK(p.coefficient({3, 3}) == 0);
}

TEST_CASE("parse: single monomial") {
    const ExactPolynomial p = parse_polynomial("2*x^2*y^6", 2);
    REQUIRE(p.size() == 1);
    CHECK(p.terms().begin()->first == Exponent{2, 6});
    CHECK(p.terms().begin()->second == 2);
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_polynomial("x-x", 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1+y", 1), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1+w", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1+*x", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", 2), ParseError);
    try {
        parse_polynomial("1+x+?", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("parse: rationals, decimals, negative powers") {
    const ExactPolynomial p = parse_polynomial("3/4x - 0.25 y^-1 + x^(-2)y", 2);
    CHECK(p.coefficient({1, 0}) == Rational(3, 4));
    CHECK(p.coefficient({0, -1}) == Rational(-1, 4));
    CHECK(p.coefficient({-2, 1}) == 1);
    CHECK(parse_polynomial("2x + 3x - 5x + 1", 1).size() == 1);
}

TEST_CASE("print: canonical form") {
    CHECK(to_string(parse_polynomial("2y^2+12x^2y+24xy+6y+4x+1", 2)) == "1+4*x+6*y+24*x*y+12*x^2*y+2*y^2");
    CHECK(to_string(parse_polynomial("-x^-1 + 1/2", 2)) == "-x^-1+1/2");
}

TEST_CASE("property: parse -> print -> parse round-trips") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const int nvars = 1 + trial % 3;
        const ExactPolynomial p = random_polynomial(rng, nvars);
        const ExactPolynomial q = parse_polynomial(to_string(p), nvars);
        CHECK(p == q);
    }
}

TEST_CASE("arithmetic") {
    const ExactPolynomial x = ExactPolynomial::variable(2, 0), y = ExactPolynomial::variable(2, 1);
    const ExactPolynomial one = ExactPolynomial::constant(2, Rational(1));
    const ExactPolynomial p = (one + x) * (one + y);
    CHECK(p == parse_polynomial("1+x+y+xy", 2));
    CHECK((p - p).is_zero());
    CHECK(divide_exact(p, one + x) == one + y);
    CHECK_THROWS_AS(divide_exact(p, one + x + y), DomainError);
    CHECK(parse_polynomial("x^2y+3x", 2).derivative(0) == parse_polynomial("2xy+3", 2));
    CHECK(parse_polynomial("x^2y+3x", 2).theta(0) == parse_polynomial("2x^2y+3x", 2));
}

TEST_CASE("evaluate") {
    const ExactPolynomial p1 = parse_polynomial(kP1, 2);
    const Complex one1[] = {1.0, 1.0};
    CHECK(std::abs(evaluate(p1, one1) - Complex(6.0)) < 1e-15);
    const Complex pm[] = {1.0, -1.0};
    CHECK(std::abs(evaluate(p1, pm)) < 1e-15);
    const Complex pt[] = {2.0, 3.0};
    CHECK(std::abs(evaluate(parse_polynomial("x^2y", 2), pt) - Complex(12.0)) < 1e-15);
    const Rational q[] = {Rational(1, 2), Rational(-1)};
    CHECK(evaluate(p1, q) == Rational(1) + Rational(1, 2) - 1 - Rational(1, 2) + 1 - Rational(1, 4));
    const Complex zero[] = {0.0, 1.0};
    CHECK_THROWS_AS(evaluate(parse_polynomial("x^-1+y", 2), zero), DomainError);
}

TEST_CASE("newton polytope: fixture polygon") {
    const NewtonPolytope n = newton_polytope(parse_polynomial(kP1, 2));
    CHECK(n.dim == 2);
    CHECK(n.vertices == std::vector<Exponent>{{0, 0}, {1, 0}, {2, 1}, {0, 2}});
    CHECK(n.lattice_points.size() == 6);
}

TEST_CASE("newton polytope: outer normals and supports") {
    const NewtonPolytope n = convex_hull({{0, 0}, {1, 0}, {2, 1}, {0, 2}});
    REQUIRE(n.facets.size() == 4);
    CHECK(n.facets[0] == Facet{{0, -1}, 0});
    CHECK(n.facets[1] == Facet{{1, -1}, 1});
    CHECK(n.facets[2] == Facet{{1, 2}, 4});
    CHECK(n.facets[3] == Facet{{-1, 0}, 0});
}

TEST_CASE("newton polytope: unit simplex") {
    const NewtonPolytope n = convex_hull({{0, 0}, {1, 0}, {0, 1}});
    CHECK(n.vertices.size() == 3);
    CHECK(n.lattice_points.size() == 3);
    std::vector<Exponent> normals;
    for (const auto& f : n.facets) normals.push_back(f.normal);
    std::sort(normals.begin(), normals.end());
    CHECK(normals == std::vector<Exponent>{{-1, 0}, {0, -1}, {1, 1}});
}

TEST_CASE("newton polytope: octahedron and segment") {
    const NewtonPolytope oct = convex_hull({{2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {4, 2, 2}, {2, 4, 2}, {2, 2, 4}});
    CHECK(oct.dim == 3);
    CHECK(oct.vertices.size() == 6);
    CHECK(oct.facets.size() == 8);
    CHECK(oct.lattice_points.size() == 25);
    const NewtonPolytope seg = convex_hull({{0}, {2}});
    CHECK(seg.lattice_points.size() == 3);
    CHECK(seg.facets.size() == 2);
}

TEST_CASE("newton polytope: degenerate input") {
    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}}), DomainError);
    CHECK_THROWS_AS(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), DomainError);
    CHECK_THROWS_AS(newton_polytope(parse_polynomial("x", 2)), DomainError);
}

TEST_CASE("property: polytope invariants on random supports") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coord(-3, 4), count(3, 9);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int dim = trial % 2 == 0 ? 2 : 3;
        std::vector<Exponent> pts(count(rng) + (dim == 3 ? 1 : 0));
        for (auto& p : pts) {
            p.resize(dim);
            for (auto& v : p) v = coord(rng);
        }
        NewtonPolytope n;
        try {
            n = convex_hull(pts);
        } catch (const DomainError&) {
            continue;
        }
        ++tested;
        CHECK(n.vertices.size() <= n.lattice_points.size());
        for (const auto& f : n.facets) {
            int g = 0;
            for (int v : f.normal) g = std::gcd(g, std::abs(v));
            CHECK(g == 1);
            int tight = 0;
            for (const auto& v : n.vertices) {
                long dot = 0;
                for (int i = 0; i < dim; ++i) dot += long(f.normal[i]) * v[i];
                CHECK(dot <= f.support);
                tight += dot == f.support;
            }
            CHECK(tight >= dim);
        }
        for (const auto& p : pts) CHECK(n.contains(p));
        for (const auto& p : pts) {
            CHECK(std::find(n.lattice_points.begin(), n.lattice_points.end(), p) != n.lattice_points.end());
        }
        if (dim == 2) {
            // Counterclockwise: positive signed area.
            long area2 = 0;
            for (std::size_t k = 0; k < n.vertices.size(); ++k) {
                const auto& a = n.vertices[k];
                const auto& b = n.vertices[(k + 1) % n.vertices.size()];
                area2 += long(a[0]) * b[1] - long(a[1]) * b[0];
            }
            CHECK(area2 > 0);
        }
    }
    CHECK(tested > 300);
}

TEST_CASE("coefficient lists") {
    const ExactPolynomial p4 = parse_polynomial(kP4, 2);
    const auto in_y = coefficient_list(p4, 1);
    REQUIRE(in_y.degree() == 2);
    CHECK(in_y.entries[0] == parse_polynomial("1", 2));
    CHECK(in_y.entries[1] == parse_polynomial("3+4x+x^2", 2));
    CHECK(in_y.entries[2] == parse_polynomial("1+x", 2));
    const auto in_x = coefficient_list(p4, 0);
    REQUIRE(in_x.degree() == 2);
    CHECK(in_x.entries[0] == parse_polynomial("y", 2));
    CHECK(in_x.entries[1] == parse_polynomial("1+4y", 2));
    CHECK(in_x.entries[2] == parse_polynomial("1+3y+y^2", 2));

    const auto mono = coefficient_list(parse_polynomial("y", 2), 1);
    REQUIRE(mono.degree() == 1);
    CHECK(mono.entries[0] == parse_polynomial("1", 2));
    CHECK(mono.entries[1].is_zero());
    CHECK_THROWS_AS(coefficient_list(parse_polynomial("y^-1+x", 2), 1), DomainError);
}

TEST_CASE("point lists") {
    CHECK(parse_point_list("(0,0),(1,0),(2,1),(0,2)") == std::vector<Exponent>{{0, 0}, {1, 0}, {2, 1}, {0, 2}});
    CHECK(parse_point_list(" ( -1 , 2 ) ") == std::vector<Exponent>{{-1, 2}});
    CHECK_THROWS_AS(parse_point_list("(0,0),(1)"), ParseError);
    CHECK_THROWS_AS(parse_point_list("(0,0"), ParseError);
}
