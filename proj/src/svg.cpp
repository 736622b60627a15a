#include "amoeba/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const PointCloud& cloud, const SvgStyle& style) {
    if (cloud.empty()) throw DomainError("cannot render an empty point cloud");

    Box window;
    if (style.clip) {
        window = *style.clip;
        if (window.degenerate()) throw DomainError("degenerate clip box");
    } else {
        window = {cloud.points[0][0], cloud.points[0][0], cloud.points[0][1], cloud.points[0][1]};
        auto grow = [&](double x, double y) {
            if (!std::isfinite(x) || !std::isfinite(y)) return;
            window.x_min = std::min(window.x_min, x);
            window.x_max = std::max(window.x_max, x);
            window.y_min = std::min(window.y_min, y);
            window.y_max = std::max(window.y_max, y);
        };
        for (const auto& p : cloud.points) grow(p[0], p[1]);
        for (const auto& v : style.overlay) grow(v[0], v[1]);
        const double pad_x = std::max(1e-9, 0.02 * (window.x_max - window.x_min));
        const double pad_y = std::max(1e-9, 0.02 * (window.y_max - window.y_min));
        window.x_min -= pad_x;
        window.x_max += pad_x;
        window.y_min -= pad_y;
        window.y_max += pad_y;
    }

    // Plot area inside margins; y grows upwards in data space.
    const double margin = 50.0;
    const double w = style.width, h = style.height;
    const double pw = w - 2 * margin, ph = h - 2 * margin;
    auto sx = [&](double x) { return margin + (x - window.x_min) / (window.x_max - window.x_min) * pw; };
    auto sy = [&](double y) { return h - margin - (y - window.y_min) / (window.y_max - window.y_min) * ph; };

    const bool moment = cloud.space == Space::moment;
    const std::string xlabel = moment ? "μ₁" : "log|x|";
    const std::string ylabel = moment ? "μ₂" : "log|y|";

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
        << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty()) {
        out << "<text x=\"" << num(w / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
            << escape(style.title) << "</text>\n";
    }
    out << "<rect x=\"" << num(margin) << "\" y=\"" << num(margin) << "\" width=\"" << num(pw) << "\" height=\""
        << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int k = 0; k <= 4; ++k) {
        const double xv = window.x_min + k * (window.x_max - window.x_min) / 4;
        const double yv = window.y_min + k * (window.y_max - window.y_min) / 4;
        out << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(h - margin + 16)
            << "\" text-anchor=\"middle\" font-size=\"10\">" << num(xv) << "</text>\n";
        out << "<text x=\"" << num(margin - 4) << "\" y=\"" << num(sy(yv) + 3)
            << "\" text-anchor=\"end\" font-size=\"10\">" << num(yv) << "</text>\n";
    }
    out << "<text x=\"" << num(w / 2) << "\" y=\"" << num(h - 10) << "\" text-anchor=\"middle\" font-size=\"12\">"
        << escape(xlabel) << "</text>\n";
    out << "<text x=\"14\" y=\"" << num(h / 2) << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 14 "
        << num(h / 2) << ")\">" << escape(ylabel) << "</text>\n";

    if (!style.overlay.empty()) {
        out << "<polygon fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
        for (const auto& v : style.overlay) out << num(sx(v[0])) << ',' << num(sy(v[1])) << ' ';
        out << "\"/>\n";
    }

    out << "<g fill=\"" << escape(style.marker_color) << "\">\n";
    for (const auto& p : cloud.points) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1])) continue;
        if (p[0] < window.x_min || p[0] > window.x_max || p[1] < window.y_min || p[1] > window.y_max) continue;
        out << "<circle cx=\"" << num(sx(p[0])) << "\" cy=\"" << num(sy(p[1])) << "\" r=\""
            << num(style.marker_radius) << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace amoeba
