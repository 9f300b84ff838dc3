#include "cfgeom/svg.hpp"

#include "cfgeom/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace cfgeom {

namespace {

constexpr double kWidth = 800.0;
constexpr double kPad = 20.0;
constexpr double kLegendRow = 18.0;
constexpr double kBarHeight = 10.0;
constexpr double kBarGap = 4.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

// Row for each interval: the first row whose last bar ends before this one starts.
std::vector<int> interval_rows(const Scene& scene) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < scene.size(); ++i) {
        if (std::holds_alternative<Interval>(scene[i])) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ia = std::get<Interval>(scene[a]);
        const auto& ib = std::get<Interval>(scene[b]);
        return ia.lo < ib.lo || (ia.lo == ib.lo && a < b);
    });
    std::vector<int> row(scene.size(), 0);
    std::vector<double> row_end;
    for (std::size_t i : order) {
        const auto& iv = std::get<Interval>(scene[i]);
        std::size_t r = 0;
        while (r < row_end.size() && row_end[r] >= iv.lo) ++r;
        if (r == row_end.size()) row_end.push_back(iv.hi);
        row_end[r] = iv.hi;
        row[i] = static_cast<int>(r);
    }
    return row;
}

}  // namespace

std::string color_fill(Color id) {
    const double hue = std::fmod(static_cast<double>(id) * 137.508, 360.0);
    return "hsl(" + num(hue < 0 ? hue + 360.0 : hue) + ",65%,55%)";
}

std::string render_svg(const Scene& scene, const Coloring& coloring) {
    if (coloring.size() != scene.size()) throw InvalidArgument("coloring does not cover the scene");

    Box world{0.0, 1.0, 0.0, 1.0};
    if (!scene.empty()) {
        world = bounding_box(scene[0]);
        for (const auto& s : scene.shapes) {
            const Box b = bounding_box(s);
            world = {std::min(world.xmin, b.xmin), std::max(world.xmax, b.xmax), std::min(world.ymin, b.ymin),
                     std::max(world.ymax, b.ymax)};
        }
    }
    const std::vector<int> rows = interval_rows(scene);
    const int row_count = scene.empty() ? 0 : *std::max_element(rows.begin(), rows.end()) + 1;
    const double span_x = std::max(world.width(), 1e-12);
    const double scale = (kWidth - 2 * kPad) / span_x;
    const bool only_intervals = !scene.empty() && scene.kind == SceneKind::Intervals;
    const double drawing_height = only_intervals ? row_count * (kBarHeight + kBarGap)
                                                 : std::max(world.height(), 1e-12) * scale;
    const std::set<Color> palette(coloring.colors.begin(), coloring.colors.end());
    const double height = 2 * kPad + drawing_height + kPad + kLegendRow * static_cast<double>(palette.size());

    auto sx = [&](double x) { return kPad + (x - world.xmin) * scale; };
    // SVG y grows downwards; flip so the drawing keeps its orientation.
    auto sy = [&](double y) { return kPad + (world.ymax - y) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    out += "<g id=\"shapes\" stroke=\"black\" stroke-width=\"0.5\" fill-opacity=\"0.55\">\n";
    for (std::size_t i = 0; i < scene.size(); ++i) {
        const std::string attrs = " fill=\"" + color_fill(coloring[i]) + "\" data-id=\"" + std::to_string(i) +
                                  "\" data-color=\"" + std::to_string(coloring[i]) + "\"";
        const Shape& s = scene[i];
        if (const auto* d = std::get_if<Disc>(&s)) {
            out += "<circle cx=\"" + num(sx(d->center.x())) + "\" cy=\"" + num(sy(d->center.y())) + "\" r=\"" +
                   num(d->radius * scale) + "\"" + attrs + "/>\n";
        } else if (const auto* iv = std::get_if<Interval>(&s)) {
            const double y = kPad + rows[i] * (kBarHeight + kBarGap);
            out += "<rect x=\"" + num(sx(iv->lo)) + "\" y=\"" + num(y) + "\" width=\"" +
                   num((iv->hi - iv->lo) * scale) + "\" height=\"" + num(kBarHeight) + "\"" + attrs + "/>\n";
        } else if (const auto* r = std::get_if<AARect>(&s)) {
            out += "<rect x=\"" + num(sx(r->xmin)) + "\" y=\"" + num(sy(r->ymax)) + "\" width=\"" +
                   num((r->xmax - r->xmin) * scale) + "\" height=\"" + num((r->ymax - r->ymin) * scale) + "\"" +
                   attrs + "/>\n";
        } else if (const auto* f = std::get_if<ConvexFatObject>(&s)) {
            std::string pts;
            for (const auto& v : f->vertices) {
                if (!pts.empty()) pts += ' ';
                pts += num(sx(v.x())) + "," + num(sy(v.y()));
            }
            out += "<polygon points=\"" + pts + "\"" + attrs + "/>\n";
        }
    }
    out += "</g>\n<g id=\"legend\" font-family=\"monospace\" font-size=\"12\">\n";
    double y = 2 * kPad + drawing_height;
    for (Color c : palette) {
        out += "<rect x=\"" + num(kPad) + "\" y=\"" + num(y) + "\" width=\"12\" height=\"12\" fill=\"" +
               color_fill(c) + "\"/>\n";
        out += "<text x=\"" + num(kPad + 18) + "\" y=\"" + num(y + 10) + "\">color " + std::to_string(c) + "</text>\n";
        y += kLegendRow;
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace cfgeom
