#include <doctest.h>

#include <sstream>

#include "amoeba/errors.hpp"
#include "amoeba/io.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/parse.hpp"
#include "amoeba/svg.hpp"
#include "fixtures.hpp"

using namespace amoeba;

namespace {

PointCloud sample_cloud() {
    PointCloud c;
    c.points = {{-1.25, 0.5}, {0.1, 1.0 / 3.0}, {2.0, -4.5}};
    c.witnesses = {{{Complex(1, 2), Complex(3, 4)}, 1e-16}, {{Complex(0.5, 0), Complex(-1, 0)}, 0.0},
                   {{Complex(1, 0), Complex(0, 1)}, 2e-17}};
    return c;
}

}  // namespace

TEST_CASE("csv: format and round trip") {
    const PointCloud c = sample_cloud();
    std::ostringstream out;
    write_cloud_csv(out, c);
    CHECK(out.str() == "log_abs_x,log_abs_y\n-1.25,0.5\n0.1,0.333333333333333\n2,-4.5\n");
    std::istringstream in(out.str());
    const PointCloud back = read_cloud_csv(in);
    REQUIRE(back.size() == 3);
    CHECK(back.points[1][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(back.space == Space::log);

    PointCloud m = c;
    m.space = Space::moment;
    m.parameter = {1.0, -2.0, std::numeric_limits<double>::infinity()};
    std::ostringstream mo;
    write_cloud_csv(mo, m);
    CHECK(mo.str().rfind("mu_1,mu_2,u\n", 0) == 0);
    CHECK(mo.str().find(",inf\n") != std::string::npos);
    std::istringstream mi(mo.str());
    const PointCloud mb = read_cloud_csv(mi);
    CHECK(mb.space == Space::moment);
    CHECK(std::isinf(mb.parameter[2]));
}

TEST_CASE("csv: malformed input") {
    std::istringstream bad_header("a,b\n1,2\n");
    CHECK_THROWS_AS(read_cloud_csv(bad_header), ParseError);
    std::istringstream bad_row("log_abs_x,log_abs_y\n1,2,3\n");
    CHECK_THROWS_AS(read_cloud_csv(bad_row), ParseError);
    std::istringstream bad_num("log_abs_x,log_abs_y\n1,zz\n");
    CHECK_THROWS_AS(read_cloud_csv(bad_num), ParseError);
}

TEST_CASE("witness sidecar") {
    std::ostringstream out;
    write_witness_csv(out, sample_cloud());
    CHECK(out.str().rfind("re_x,im_x,re_y,im_y,residual\n1,2,3,4,1e-16\n", 0) == 0);
    PointCloud c = sample_cloud();
    c.witness_dim = 3;
    std::ostringstream z;
    write_witness_csv(z, c);
    CHECK(z.str().rfind("re_x,im_x,re_y,im_y,re_z,im_z,residual\n", 0) == 0);
}

TEST_CASE("json polynomial input") {
    const ExactPolynomial p =
        parse_polynomial_json(R"([{"exp":[0,0],"num":1},{"exp":[2,1],"num":3,"den":4},{"exp":[0,1],"num":"1/2"}])", 2);
    CHECK(p == parse_polynomial("1+3/4x^2y+1/2y", 2));
    CHECK(parse_polynomial_any("  [{\"exp\":[1,0],\"num\":1}]", 2) == parse_polynomial("x", 2));
    CHECK(parse_polynomial_any(fixtures::kP1, 2).size() == 6);
    CHECK_THROWS_AS(parse_polynomial_json("[{\"exp\":[1],\"num\":1}]", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial_json("[{\"exp\":[1,0],\"num\":1,\"den\":0}]", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial_json("[{\"exp\":[1,0],\"num\":1},{\"exp\":[1,0],\"num\":-1}]", 2), ParseError);
    CHECK_THROWS_AS(parse_polynomial_json("{", 2), ParseError);
}

TEST_CASE("reports") {
    const NewtonPolytope n = convex_hull(parse_point_list(fixtures::kPolygon));
    const OreSatoCoefficient phi = ore_sato_from_polytope(n);
    const ExactPolynomial p = hypergeometric_polynomial(n);
    const auto j = hyperpoly_report(n, phi, p, verify_horn_membership(p, phi));
    CHECK(j["verified"] == true);
    CHECK(j["normals"].size() == 4);
    CHECK(j["m"] == nlohmann::json::array({0, 1, 4, 0}));
    CHECK(j["phi_factors"].size() == 4);
    CHECK(j["horn_operators"].size() == 2);
    CHECK(j["polynomial"] == fixtures::kPolygonHyperpoly);

    TopologyReport r = classify(6, n);
    r.bounded = 1;
    r.unbounded = 5;
    const auto t = topology_report(r, {});
    CHECK(t["count"] == 6);
    CHECK(t["classification"] == "optimal");
    CHECK(t["vertices"] == 4);
    CHECK(t["lattice_points"] == 6);
    CHECK(t["sampling"]["resolution"] == nlohmann::json::array({800, 800}));
}

TEST_CASE("pgm dump") {
    GridRaster r(Box{}, 16, 16);
    r.set(3, 3);
    std::ostringstream out;
    write_label_pgm(out, r, complement_components(r));
    const std::string s = out.str();
    CHECK(s.rfind("P5\n16 16\n255\n", 0) == 0);
    CHECK(s.size() == 13 + 256);
}

TEST_CASE("svg rendering") {
    CHECK_THROWS_AS(render_svg(PointCloud{}), DomainError);
    const std::string svg = render_svg(sample_cloud());
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("viewBox=\"0 0 600 600\"") != std::string::npos);
    CHECK(svg.find("log|x|") != std::string::npos);
    std::size_t circles = 0;
    for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
    CHECK(circles == 3);
    // Balanced tags: every opened element is closed.
    CHECK(svg.find("</svg>") != std::string::npos);

    PointCloud m = sample_cloud();
    m.space = Space::moment;
    SvgStyle style;
    style.overlay = {{0, 0}, {1, 0}, {2, 1}, {0, 2}};
    style.title = "a < b & c";
    const std::string ms = render_svg(m, style);
    CHECK(ms.find("<polygon") != std::string::npos);
    CHECK(ms.find("μ₁") != std::string::npos);
    CHECK(ms.find("a &lt; b &amp; c") != std::string::npos);

    style = SvgStyle{};
    style.clip = Box{-1, 1, -1, 1};
    const std::string clipped = render_svg(sample_cloud(), style);
    std::size_t inside = 0;
    for (auto pos = clipped.find("<circle"); pos != std::string::npos; pos = clipped.find("<circle", pos + 1)) ++inside;
    CHECK(inside == 1);
}

TEST_CASE("thread count falls back to the environment") {
    setenv("AMOEBA_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    setenv("AMOEBA_THREADS", "junk", 1);
    CHECK(default_thread_count() >= 1);
    unsetenv("AMOEBA_THREADS");
}
