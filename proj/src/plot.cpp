#include "tpoly/plot.hpp"

#include <algorithm>
#include <sstream>

#include "tpoly/error.hpp"

namespace tpoly {

namespace {

constexpr int kUnit = 40;    // pixels per unit
constexpr int kMargin = 30;  // pixels around the lattice
constexpr int kLegend = 22;  // pixels per legend line

// Pixel coordinate of twice-scaled value relative to the box minimum.
std::string px(std::int64_t twice, std::int64_t twice_min) {
    const std::int64_t scaled = (twice - twice_min) * kUnit;  // twice the pixel offset
    std::ostringstream os;
    os << kMargin + scaled / 2;
    if (scaled % 2) os << ".5";
    return os.str();
}

std::int64_t floor_half(Half h) {
    const std::int64_t t = h.twice();
    return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

}  // namespace

std::string render_polytopes(const std::vector<PlotLayer>& layers) {
    if (layers.empty()) fail_validation("nothing to plot");
    std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;  // integer bounding box, always containing the origin
    for (const auto& l : layers) {
        x0 = std::min(x0, floor_half(l.polytope.min_x()) - 1);
        y0 = std::min(y0, floor_half(l.polytope.min_y()) - 1);
        x1 = std::max(x1, -floor_half(-l.polytope.max_x()) + 1);
        y1 = std::max(y1, -floor_half(-l.polytope.max_y()) + 1);
    }
    const std::int64_t width = (x1 - x0) * kUnit + 2 * kMargin;
    const std::int64_t plot_height = (y1 - y0) * kUnit + 2 * kMargin;
    const std::int64_t height = plot_height + kLegend * static_cast<std::int64_t>(layers.size()) + kMargin / 2;
    // SVG y grows downward: map y to (y1 - y).
    auto sx = [&](Half x) { return px(x.twice(), 2 * x0); };
    auto sy = [&](Half y) { return px(2 * y1 - y.twice(), 0); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g class=\"lattice\" fill=\"#bbbbbb\">\n";
    for (std::int64_t x = x0; x <= x1; ++x)
        for (std::int64_t y = y0; y <= y1; ++y)
            os << "<circle cx=\"" << sx(Half(x)) << "\" cy=\"" << sy(Half(y)) << "\" r=\"2\"/>\n";
    os << "</g>\n";
    os << "<g class=\"axes\" stroke=\"#555555\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << sx(Half(x0)) << "\" y1=\"" << sy(Half(0)) << "\" x2=\"" << sx(Half(x1)) << "\" y2=\""
       << sy(Half(0)) << "\"/>\n";
    os << "<line x1=\"" << sx(Half(0)) << "\" y1=\"" << sy(Half(y0)) << "\" x2=\"" << sx(Half(0)) << "\" y2=\""
       << sy(Half(y1)) << "\"/>\n";
    os << "</g>\n";
    for (const auto& l : layers) {
        os << "<g class=\"polytope\" data-name=\"" << l.name << "\">\n";
        const auto& vs = l.polytope.vertices();
        if (vs.size() >= 2) {
            os << "<polygon fill=\"" << l.color << "\" fill-opacity=\"0.2\" stroke=\"" << l.color
               << "\" stroke-width=\"2\" points=\"";
            for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << sx(vs[i].x) << ',' << sy(vs[i].y);
            os << "\"/>\n";
        }
        for (const auto& v : vs)
            os << "<circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"4\" fill=\"" << l.color << "\"/>\n";
        os << "</g>\n";
    }
    os << "<g class=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const std::int64_t y = plot_height + kLegend * static_cast<std::int64_t>(i) + kLegend / 2;
        os << "<rect x=\"" << kMargin << "\" y=\"" << y - 9 << "\" width=\"12\" height=\"12\" fill=\""
           << layers[i].color << "\"/>\n";
        os << "<text x=\"" << kMargin + 18 << "\" y=\"" << y + 2 << "\">" << layers[i].name << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace tpoly
