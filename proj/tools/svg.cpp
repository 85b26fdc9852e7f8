#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace strichartz::tool {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Mapper {
    double scale;
    double margin;
    double size;
    double px(double x) const { return margin + x * scale; }
    double py(double y) const { return size - margin - y * scale; }
};

void polyline(std::ostringstream& os, const Mapper& map,
              const std::vector<std::pair<double, double>>& points,
              const char* style, bool close) {
    os << "  <path d=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        os << (i == 0 ? "M" : "L") << num(map.px(points[i].first)) << " "
           << num(map.py(points[i].second));
    }
    if (close) os << "Z";
    os << "\" " << style << "/>\n";
}

}  // namespace

std::string region_diagram_svg(int n) {
    const auto vertices = region_vertices(n);
    auto vertex = [&](VertexLabel label) {
        for (const auto& v : vertices)
            if (v.label == label)
                return std::make_pair(v.x.get_d(), v.y.get_d());
        throw std::logic_error("missing vertex");
    };
    const auto o = vertex(VertexLabel::O);
    const auto a = vertex(VertexLabel::A);
    const auto b = vertex(VertexLabel::B);
    const auto bp = vertex(VertexLabel::Bp);
    const auto c = vertex(VertexLabel::C);
    const auto cp = vertex(VertexLabel::Cp);
    const auto p = vertex(VertexLabel::P);
    const auto pp = vertex(VertexLabel::Pp);

    const double size = 540;
    const Mapper map{760, 60, size};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
       << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
       << "\">\n";
    os << "  <rect width=\"" << size << "\" height=\"" << size
       << "\" fill=\"white\"/>\n";

    // axes with ticks at 0, 1/4, 1/2
    os << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    os << "    <line x1=\"" << num(map.px(0)) << "\" y1=\"" << num(map.py(0))
       << "\" x2=\"" << num(map.px(0.58)) << "\" y2=\"" << num(map.py(0))
       << "\"/>\n";
    os << "    <line x1=\"" << num(map.px(0)) << "\" y1=\"" << num(map.py(0))
       << "\" x2=\"" << num(map.px(0)) << "\" y2=\"" << num(map.py(0.58))
       << "\"/>\n";
    for (double tick : {0.25, 0.5}) {
        os << "    <line x1=\"" << num(map.px(tick)) << "\" y1=\""
           << num(map.py(0) - 4) << "\" x2=\"" << num(map.px(tick))
           << "\" y2=\"" << num(map.py(0) + 4) << "\"/>\n";
        os << "    <line x1=\"" << num(map.px(0) - 4) << "\" y1=\""
           << num(map.py(tick)) << "\" x2=\"" << num(map.px(0) + 4)
           << "\" y2=\"" << num(map.py(tick)) << "\"/>\n";
    }
    os << "  </g>\n";
    os << "  <text x=\"" << num(map.px(0.56)) << "\" y=\""
       << num(map.py(0) + 24) << "\" font-size=\"15\">1/r</text>\n";
    os << "  <text x=\"" << num(map.px(0) - 44) << "\" y=\""
       << num(map.py(0.56)) << "\" font-size=\"15\">1/r~</text>\n";
    os << "  <text x=\"" << num(map.px(0.25) - 10) << "\" y=\""
       << num(map.py(0) + 24) << "\" font-size=\"12\">1/4</text>\n";
    os << "  <text x=\"" << num(map.px(0.5) - 10) << "\" y=\""
       << num(map.py(0) + 24) << "\" font-size=\"12\">1/2</text>\n";

    // regime triangles OB'C', OAB', OAB, OBC
    const char* tri_style =
        "fill=\"none\" stroke=\"#9db7d4\" stroke-width=\"1\" "
        "stroke-dasharray=\"4 3\"";
    polyline(os, map, {o, bp, cp}, tri_style, true);
    polyline(os, map, {o, a, bp}, tri_style, true);
    polyline(os, map, {o, a, b}, tri_style, true);
    polyline(os, map, {o, b, c}, tri_style, true);

    // admissible pentagon A B P P' B'
    polyline(os, map, {a, b, p, pp, bp},
             "fill=\"#d8e8d8\" fill-opacity=\"0.5\" stroke=\"#2f6f2f\" "
             "stroke-width=\"2\"",
             true);

    // diagonal for orientation
    polyline(os, map, {o, a},
             "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"", false);

    struct Labeled {
        std::pair<double, double> at;
        const char* name;
        double dx, dy;
    };
    const std::vector<Labeled> labels = {
        {o, "O", -16, 16},  {a, "A", 8, -6},   {b, "B", 10, 4},
        {bp, "B'", -4, -10}, {c, "C", 6, 16},   {cp, "C'", -24, -2},
        {p, "P", 10, 6},    {pp, "P'", -24, -4},
    };
    for (const auto& l : labels) {
        os << "  <circle cx=\"" << num(map.px(l.at.first)) << "\" cy=\""
           << num(map.py(l.at.second)) << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << num(map.px(l.at.first) + l.dx) << "\" y=\""
           << num(map.py(l.at.second) + l.dy)
           << "\" font-size=\"14\">" << l.name << "</text>\n";
    }
    os << "  <text x=\"" << num(map.px(0.02)) << "\" y=\""
       << num(map.py(0.56)) << "\" font-size=\"14\">n = " << n
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string loglog_plot_svg(const std::string& title,
                            const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<std::pair<double, double>>& pts,
                            const SlopeFit& fit) {
    if (pts.empty()) throw std::invalid_argument("loglog plot: no points");
    double lx_min = 0, lx_max = 0, ly_min = 0, ly_max = 0;
    bool first = true;
    for (const auto& [x, y] : pts) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument("loglog plot: nonpositive value");
        const double lx = std::log(x), ly = std::log(y);
        if (first) {
            lx_min = lx_max = lx;
            ly_min = ly_max = ly;
            first = false;
        }
        lx_min = std::min(lx_min, lx);
        lx_max = std::max(lx_max, lx);
        ly_min = std::min(ly_min, ly);
        ly_max = std::max(ly_max, ly);
    }
    const double pad_x = 0.1 * std::max(1e-9, lx_max - lx_min);
    const double pad_y = 0.1 * std::max(1e-9, ly_max - ly_min);
    lx_min -= pad_x;
    lx_max += pad_x;
    ly_min -= pad_y;
    ly_max += pad_y;

    const double width = 560, height = 420, margin = 56;
    auto px = [&](double lx) {
        return margin + (lx - lx_min) / (lx_max - lx_min) *
                            (width - 2 * margin);
    };
    auto py = [&](double ly) {
        return height - margin -
               (ly - ly_min) / (ly_max - ly_min) * (height - 2 * margin);
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
       << height << "\">\n";
    os << "  <rect width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n";
    os << "  <text x=\"" << num(margin) << "\" y=\"24\" font-size=\"15\">"
       << title << " (slope " << num(fit.slope) << ")</text>\n";
    os << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    os << "    <line x1=\"" << num(margin) << "\" y1=\""
       << num(height - margin) << "\" x2=\"" << num(width - margin)
       << "\" y2=\"" << num(height - margin) << "\"/>\n";
    os << "    <line x1=\"" << num(margin) << "\" y1=\""
       << num(height - margin) << "\" x2=\"" << num(margin) << "\" y2=\""
       << num(margin) << "\"/>\n";
    os << "  </g>\n";
    os << "  <text x=\"" << num(width - margin - 60) << "\" y=\""
       << num(height - margin + 30) << "\" font-size=\"13\">" << x_label
       << " (log)</text>\n";
    os << "  <text x=\"8\" y=\"" << num(margin - 10)
       << "\" font-size=\"13\">" << y_label << " (log)</text>\n";

    // fitted line across the x-range
    const double fy0 = fit.intercept + fit.slope * lx_min;
    const double fy1 = fit.intercept + fit.slope * lx_max;
    os << "  <line x1=\"" << num(px(lx_min)) << "\" y1=\"" << num(py(fy0))
       << "\" x2=\"" << num(px(lx_max)) << "\" y2=\"" << num(py(fy1))
       << "\" stroke=\"#b03030\" stroke-width=\"1.5\"/>\n";

    for (const auto& [x, y] : pts)
        os << "  <circle cx=\"" << num(px(std::log(x))) << "\" cy=\""
           << num(py(std::log(y)))
           << "\" r=\"4\" fill=\"#2040a0\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace strichartz::tool
