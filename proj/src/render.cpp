#include "simplexcolor/render.hpp"

#include "simplexcolor/dual_graph.hpp"
#include "simplexcolor/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace simplexcolor {
namespace {

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Frame {
    double min_x, min_y, scale, offset_x, offset_y;
    int height;

    std::pair<double, double> map(double x, double y) const
    {
        return {offset_x + (x - min_x) * scale, height - (offset_y + (y - min_y) * scale)};
    }
};

Frame frame_for(const Complex& c, const RenderOptions& o)
{
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& s : c.simplices()) {
        for (VertexId id : s) {
            const double x = c.vertex(id)[0].get_d(), y = c.vertex(id)[1].get_d();
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            }
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    const double span_x = std::max(max_x - min_x, 1e-12), span_y = std::max(max_y - min_y, 1e-12);
    const double avail_w = o.width - 2.0 * o.margin, avail_h = o.height - 2.0 * o.margin;
    const double scale = std::min(avail_w / span_x, avail_h / span_y);
    return {min_x, min_y, scale, o.margin + (avail_w - span_x * scale) / 2,
            o.margin + (avail_h - span_y * scale) / 2, o.height};
}

}  // namespace

std::string render_svg(const Complex& c, const std::optional<Coloring>& coloring, const RenderOptions& o)
{
    if (c.dimension() != 2)
        throw UnsupportedDimensionError("rendering supports d=2 only (got d=" + std::to_string(c.dimension()) + ")");
    if (o.width <= 0 || o.height <= 0 || o.margin < 0 || 2 * o.margin >= std::min(o.width, o.height))
        throw InputError("invalid render size");
    if (coloring) {
        if (coloring->colors.size() != c.size())
            throw InputError("coloring has " + std::to_string(coloring->colors.size()) + " entries for " +
                             std::to_string(c.size()) + " simplices");
        for (int k : coloring->colors) {
            if (k < 0) throw InputError("negative color in coloring");
            if (static_cast<std::size_t>(k) >= o.palette.size())
                throw InputError("palette has " + std::to_string(o.palette.size()) +
                                 " entries but the coloring uses color " + std::to_string(k));
        }
    }

    const Frame f = frame_for(c, o);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width << "\" height=\""
        << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n<g stroke=\"#222222\" stroke-width=\"1\" "
           "stroke-linejoin=\"round\">\n";

    std::vector<std::pair<double, double>> centroids(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string fill =
            coloring ? o.palette[static_cast<std::size_t>(coloring->colors[i])] : o.uncolored_fill;
        out << "<polygon data-simplex=\"" << i << "\" fill=\"" << fill << "\" points=\"";
        double cx = 0, cy = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            const Point& p = c.vertex(c.simplex(i)[k]);
            const auto [x, y] = f.map(p[0].get_d(), p[1].get_d());
            out << (k ? " " : "") << fixed(x) << ',' << fixed(y);
            cx += x / 3;
            cy += y / 3;
        }
        out << "\"/>\n";
        centroids[i] = {cx, cy};
    }
    out << "</g>\n";

    if (o.show_dual) {
        const DualGraph g = build_dual(c);
        out << "<g stroke=\"#000000\" stroke-width=\"1.5\" fill=\"none\">\n";
        for (std::size_t i = 0; i < g.node_count(); ++i) {
            for (const auto& e : g.neighbors(i)) {
                if (e.neighbor < i) continue;
                const Point& a = c.vertex(e.facet[0]);
                const Point& b = c.vertex(e.facet[1]);
                const auto [mx, my] = f.map((a[0].get_d() + b[0].get_d()) / 2, (a[1].get_d() + b[1].get_d()) / 2);
                out << "<polyline points=\"" << fixed(centroids[i].first) << ',' << fixed(centroids[i].second)
                    << ' ' << fixed(mx) << ',' << fixed(my) << ' ' << fixed(centroids[e.neighbor].first) << ','
                    << fixed(centroids[e.neighbor].second) << "\"/>\n";
            }
        }
        out << "</g>\n<g fill=\"#000000\">\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << "<circle cx=\"" << fixed(centroids[i].first) << "\" cy=\"" << fixed(centroids[i].second)
                << "\" r=\"3\"/>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace simplexcolor
