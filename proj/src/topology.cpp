#include "amoeba/topology.hpp"

#include <algorithm>
#include <cmath>

#include "amoeba/errors.hpp"
#include "amoeba/parallel.hpp"

namespace amoeba {

GridRaster::GridRaster(const Box& b, int nx_, int ny_) : box(b), nx(nx_), ny(ny_) {
    if (box.degenerate()) throw DomainError("raster box is degenerate");
    if (nx < 16 || ny < 16) throw DomainError("raster resolution must be at least 16x16");
    occupied.assign(static_cast<std::size_t>(nx) * ny, 0);
}

std::size_t GridRaster::occupied_count() const {
    return static_cast<std::size_t>(std::count(occupied.begin(), occupied.end(), std::uint8_t{1}));
}

GridRaster rasterize(const PointCloud& cloud, const Box& box, int nx, int ny, int dilation, unsigned threads) {
    if (dilation < 0) throw DomainError("dilation must be nonnegative");
    GridRaster raster(box, nx, ny);
    const double sx = nx / (box.x_max - box.x_min);
    const double sy = ny / (box.y_max - box.y_min);

    // Workers write 0 -> 1 only, into disjoint per-thread seed lists first.
    threads = std::max(1u, threads);
    std::vector<std::vector<std::size_t>> seeds(threads);
    parallel_chunks(cloud.points.size(), threads, [&](std::size_t part, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto& [x, y] = cloud.points[k];
            if (!(x >= box.x_min && x <= box.x_max && y >= box.y_min && y <= box.y_max)) continue;
            const int i = std::min(nx - 1, static_cast<int>(std::floor((x - box.x_min) * sx)));
            const int j = std::min(ny - 1, static_cast<int>(std::floor((y - box.y_min) * sy)));
            seeds[part].push_back(static_cast<std::size_t>(j) * nx + i);
        }
    });

    std::vector<std::uint8_t> seeded(raster.occupied.size(), 0);
    for (const auto& list : seeds) {
        for (std::size_t cell : list) seeded[cell] = 1;
    }
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (!seeded[static_cast<std::size_t>(j) * nx + i]) continue;
            for (int dj = -dilation; dj <= dilation; ++dj) {
                const int jj = j + dj;
                if (jj < 0 || jj >= ny) continue;
                for (int di = -dilation; di <= dilation; ++di) {
                    const int ii = i + di;
                    if (ii >= 0 && ii < nx) raster.set(ii, jj);
                }
            }
        }
    }
    return raster;
}

ComponentLabels complement_components(const GridRaster& raster) {
    const int nx = raster.nx, ny = raster.ny;
    ComponentLabels out;
    out.labels.assign(raster.occupied.size(), -1);
    std::vector<int> stack;
    constexpr int kUnseen = -2;
    for (std::size_t c = 0; c < raster.occupied.size(); ++c) {
        if (!raster.occupied[c]) out.labels[c] = kUnseen;
    }

    for (std::size_t start = 0; start < out.labels.size(); ++start) {
        if (out.labels[start] != kUnseen) continue;
        const int id = out.count++;
        bool boundary = false;
        out.labels[start] = id;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            const int i = c % nx, j = c / nx;
            if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1) boundary = true;
            auto visit = [&](int ii, int jj) {
                if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) return;
                const int n = jj * nx + ii;
                if (out.labels[n] != kUnseen) return;
                out.labels[n] = id;
                stack.push_back(n);
            };
            visit(i - 1, j);
            visit(i + 1, j);
            visit(i, j - 1);
            visit(i, j + 1);
        }
        out.touches_boundary.push_back(boundary);
        ++(boundary ? out.unbounded : out.bounded);
    }
    return out;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::solid: return "solid";
        case Classification::optimal: return "optimal";
        case Classification::intermediate: return "intermediate";
        case Classification::out_of_bounds: return "out-of-bounds";
    }
    return "out-of-bounds";
}

TopologyReport classify(int count, const NewtonPolytope& polygon) {
    TopologyReport r;
    r.count = count;
    r.vertices = polygon.vertices.size();
    r.lattice_points = polygon.lattice_points.size();
    const auto n = static_cast<std::size_t>(std::max(count, 0));
    if (count >= 0 && n == r.lattice_points) {
        r.classification = Classification::optimal;
    } else if (count >= 0 && n == r.vertices) {
        r.classification = Classification::solid;
    } else if (count >= 0 && n > r.vertices && n < r.lattice_points) {
        r.classification = Classification::intermediate;
    } else {
        r.classification = Classification::out_of_bounds;
    }
    return r;
}

TopologyReport analyze_topology(const PointCloud& cloud, const NewtonPolytope& polygon,
                                const TopologyOptions& options) {
    const GridRaster raster = rasterize(cloud, options.box, options.nx, options.ny, options.dilation, options.threads);
    const ComponentLabels labels = complement_components(raster);
    TopologyReport r = classify(labels.count, polygon);
    r.bounded = labels.bounded;
    r.unbounded = labels.unbounded;
    return r;
}

}  // namespace amoeba
