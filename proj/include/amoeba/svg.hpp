#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amoeba/amoeba_maps.hpp"
#include "amoeba/topology.hpp"

namespace amoeba {

struct SvgStyle {
    int width = 600;
    int height = 600;
    double marker_radius = 0.6;
    std::string marker_color = "#1f4e9c";
    /// Draw only points inside this box and use it as the plot window;
    /// without it the window is the bounding box of the cloud.
    std::optional<Box> clip;
    /// Polygon outline (e.g. Newton polygon vertices for moment clouds).
    std::vector<std::array<double, 2>> overlay;
    std::string title;
};

/// Scatter plot of the cloud with labelled axes (log|x|, log|y| or mu_1,
/// mu_2). Throws DomainError for an empty cloud.
std::string render_svg(const PointCloud& cloud, const SvgStyle& style = {});

}  // namespace amoeba
