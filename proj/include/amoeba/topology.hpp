#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/newton_polytope.hpp"

namespace amoeba {

struct Box {
    double x_min = -5.0;
    double x_max = 5.0;
    double y_min = -5.0;
    double y_max = 5.0;

    bool degenerate() const { return !(x_min < x_max && y_min < y_max); }
};

/// Occupancy grid; cell (i, j) covers column i (x) and row j (y), stored
/// row-major.
struct GridRaster {
    Box box;
    int nx = 0;
    int ny = 0;
    std::vector<std::uint8_t> occupied;

    GridRaster() = default;
    /// Throws DomainError for a degenerate box or nx, ny < 16.
    GridRaster(const Box& box, int nx, int ny);

    bool at(int i, int j) const { return occupied[static_cast<std::size_t>(j) * nx + i] != 0; }
    void set(int i, int j) { occupied[static_cast<std::size_t>(j) * nx + i] = 1; }
    std::size_t occupied_count() const;
};

/// Marks the cell of every point inside the box plus all cells within
/// `dilation` cells of it (Chebyshev distance). Points outside are ignored.
GridRaster rasterize(const PointCloud& cloud, const Box& box, int nx, int ny, int dilation, unsigned threads = 1);

struct ComponentLabels {
    /// Per cell: -1 when occupied, else the component index (row-major).
    std::vector<int> labels;
    int count = 0;
    int bounded = 0;
    int unbounded = 0;
    /// Per component: touches the raster boundary.
    std::vector<bool> touches_boundary;
};

/// 4-connected components of the free cells.
ComponentLabels complement_components(const GridRaster& raster);

enum class Classification { solid, optimal, intermediate, out_of_bounds };

std::string to_string(Classification c);

struct TopologyReport {
    int count = 0;
    int bounded = 0;
    int unbounded = 0;
    std::size_t vertices = 0;
    std::size_t lattice_points = 0;
    Classification classification = Classification::out_of_bounds;
};

/// Compares count with the vertex and lattice-point counts of the polygon.
/// When the two bounds coincide, a matching count is reported as optimal.
TopologyReport classify(int count, const NewtonPolytope& polygon);

struct TopologyOptions {
    Box box;
    int nx = 800;
    int ny = 800;
    int dilation = 1;
    unsigned threads = 1;
};

/// rasterize + complement_components + classify.
TopologyReport analyze_topology(const PointCloud& cloud, const NewtonPolytope& polygon,
                                const TopologyOptions& options = {});

}  // namespace amoeba
