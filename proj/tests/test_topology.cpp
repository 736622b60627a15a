#include <doctest.h>

#include <numeric>
#include <random>

#include "amoeba/errors.hpp"
#include "amoeba/parse.hpp"
#include "amoeba/topology.hpp"
#include "fixtures.hpp"

using namespace amoeba;

namespace {

const Box kUnit{0.0, 32.0, 0.0, 32.0};

/// Union-find count of 4-connected free cells.
int union_find_count(const GridRaster& r) {
    std::vector<int> parent(r.occupied.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int j = 0; j < r.ny; ++j) {
        for (int i = 0; i < r.nx; ++i) {
            if (r.at(i, j)) continue;
            const int c = j * r.nx + i;
            if (i + 1 < r.nx && !r.at(i + 1, j)) parent[find(c)] = find(c + 1);
            if (j + 1 < r.ny && !r.at(i, j + 1)) parent[find(c)] = find(c + r.nx);
        }
    }
    int count = 0;
    for (int c = 0; c < static_cast<int>(parent.size()); ++c) {
        if (!r.occupied[c] && find(c) == c) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("raster validation") {
    CHECK_THROWS_AS(GridRaster(kUnit, 15, 32), DomainError);
    CHECK_THROWS_AS(GridRaster(Box{0, 0, 0, 1}, 32, 32), DomainError);
    CHECK_NOTHROW(GridRaster(kUnit, 16, 16));
}

TEST_CASE("rasterize: empty cloud and single point") {
    PointCloud cloud;
    const GridRaster empty = rasterize(cloud, kUnit, 32, 32, 1);
    CHECK(empty.occupied_count() == 0);

    cloud.points = {{10.5, 20.5}};
    const GridRaster r = rasterize(cloud, kUnit, 32, 32, 1);
    CHECK(r.occupied_count() == 9);
    for (int j = 19; j <= 21; ++j) {
        for (int i = 9; i <= 11; ++i) CHECK(r.at(i, j));
    }
    CHECK(rasterize(cloud, kUnit, 32, 32, 0).occupied_count() == 1);

    cloud.points = {{0.1, 0.1}, {100.0, 5.0}};
    CHECK(rasterize(cloud, kUnit, 32, 32, 1).occupied_count() == 4);
}

TEST_CASE("components: all free, annulus, diagonal walls") {
    const GridRaster free(kUnit, 32, 32);
    const ComponentLabels all = complement_components(free);
    CHECK(all.count == 1);
    CHECK(all.unbounded == 1);
    CHECK(all.bounded == 0);

    GridRaster ring(kUnit, 32, 32);
    for (int j = 0; j < 32; ++j) {
        for (int i = 0; i < 32; ++i) {
            const double d = std::hypot(i - 15.5, j - 15.5);
            if (d >= 6 && d <= 8) ring.set(i, j);
        }
    }
    const ComponentLabels annulus = complement_components(ring);
    CHECK(annulus.count == 2);
    CHECK(annulus.bounded == 1);
    CHECK(annulus.unbounded == 1);
    CHECK(annulus.labels[16 * 32 + 16] >= 0);
    CHECK(annulus.labels[16 * 32 + 16] != annulus.labels[0]);

    // A one-cell diagonal wall separates under 4-connectivity.
    GridRaster diag(kUnit, 32, 32);
    for (int k = 0; k < 32; ++k) diag.set(k, k);
    CHECK(complement_components(diag).count == 2);
}

TEST_CASE("property: flood fill agrees with union-find on random rasters") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        std::bernoulli_distribution fill(0.2 + 0.5 * (trial % 7) / 7.0);
        GridRaster r(kUnit, 32, 32);
        for (auto& c : r.occupied) c = fill(rng);
        const ComponentLabels l = complement_components(r);
        CHECK(l.count == union_find_count(r));
        CHECK(l.bounded + l.unbounded == l.count);
        for (std::size_t c = 0; c < r.occupied.size(); ++c) CHECK((l.labels[c] < 0) == (r.occupied[c] != 0));
    }
}

TEST_CASE("classification") {
    const NewtonPolytope n = convex_hull(parse_point_list(fixtures::kPolygon));
    CHECK(classify(4, n).classification == Classification::solid);
    CHECK(classify(5, n).classification == Classification::intermediate);
    CHECK(classify(6, n).classification == Classification::optimal);
    CHECK(classify(3, n).classification == Classification::out_of_bounds);
    CHECK(classify(7, n).classification == Classification::out_of_bounds);
    CHECK(classify(6, n).vertices == 4);
    CHECK(classify(6, n).lattice_points == 6);

    const NewtonPolytope simplex = convex_hull({{0, 0}, {1, 0}, {0, 1}});
    CHECK(classify(3, simplex).classification == Classification::optimal);
    CHECK(to_string(Classification::out_of_bounds) == "out-of-bounds");
}

TEST_CASE("topology of the line amoeba") {
    // Three tentacles: the complement has three unbounded components.
    const ExactPolynomial p = parse_polynomial("1+x+y", 2);
    SamplingGrid g;
    g.n_r = 600;
    g.n_phi = 120;
    const PointCloud cloud = amoeba2d(p, g);
    TopologyOptions opt;
    opt.nx = opt.ny = 200;
    const TopologyReport r = analyze_topology(cloud, newton_polytope(p), opt);
    CHECK(r.count == 3);
    CHECK(r.unbounded == 3);
    CHECK(r.classification == Classification::optimal);
}
