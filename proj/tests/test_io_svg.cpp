#include "cfgeom/error.hpp"
#include "cfgeom/generate.hpp"
#include "cfgeom/interval_cf.hpp"
#include "cfgeom/io.hpp"
#include "cfgeom/svg.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

using namespace cfgeom;

namespace {

std::size_t count(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST(Json, SceneRoundTrip) {
    for (GenKind kind : {GenKind::Discs, GenKind::Intervals, GenKind::Rects, GenKind::Fat, GenKind::Pentagons}) {
        const Scene s = generate_scene(kind, 25, GenParams{}, 5);
        const Json j = to_json(s);
        const Scene back = scene_from_json(Json::parse(j.dump()));
        EXPECT_EQ(back.kind, s.kind);
        EXPECT_EQ(to_json(back), j);
    }
}

TEST(Json, ShapeFields) {
    const Json d = to_json(Shape{Disc{{1, 2}, 3}});
    EXPECT_EQ(d["type"], "disc");
    EXPECT_EQ(d["cx"], 1.0);
    EXPECT_EQ(d["r"], 3.0);
    const Json r = to_json(Shape{AARect{0, 1, 2, 3}});
    EXPECT_EQ(r["ymin"], 2.0);
}

TEST(Json, ColoringRoundTrip) {
    Coloring c({0, 1, 1, 4});
    c.palette_map[4] = {3, 1};
    const Json j = to_json(c);
    EXPECT_EQ(j["palette_size"], 3);
    const Coloring back = coloring_from_json(j);
    EXPECT_EQ(back.colors, c.colors);
    EXPECT_EQ(back.palette_map, c.palette_map);
}

TEST(Json, ProbeSystemRoundTrip) {
    const ProbeSystem ps{generate_scene(GenKind::Discs, 5, GenParams{}, 1), generate_probe_discs(7, 0, 1, 0.01, 0.1, 2),
                         ProbeMode::PseudoDisc};
    const ProbeSystem back = probe_system_from_json(to_json(ps));
    EXPECT_EQ(back.mode, ProbeMode::PseudoDisc);
    EXPECT_EQ(back.probes.size(), 7u);
}

TEST(Json, MalformedInputs) {
    EXPECT_THROW(scene_from_json(Json::parse(R"({"shapes":[{"type":"blob"}]})")), InvalidArgument);
    EXPECT_THROW(scene_from_json(Json::parse(R"({"shapes":[{"type":"disc","cx":0}]})")), InvalidArgument);
    EXPECT_THROW(scene_from_json(Json::parse(R"({"shapes":[{"type":"interval","lo":2,"hi":1}]})")), InvalidArgument);
    EXPECT_THROW(scene_from_json(Json::parse(R"({"kind":"rects","shapes":[{"type":"interval","lo":0,"hi":1}]})")),
                 InvalidArgument);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"colors":[1,2],"palette_size":1})")), InvalidArgument);
    EXPECT_THROW(read_json("/nonexistent/scene.json"), InvalidArgument);
}

TEST(Svg, EmptySceneIsAValidCanvas) {
    const std::string svg = render_svg(Scene{}, Coloring{});
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(svg, "data-id"), 0u);
}

TEST(Svg, ThreeIntervalsAsBars) {
    std::vector<Shape> shapes{Interval{0, 2}, Interval{1, 4}, Interval{3, 6}};
    const Scene s = Scene::from_shapes(shapes);
    const std::string svg = render_svg(s, closed_cf_color_intervals(s).coloring);
    // Everything but the background and the legend swatches is a bar.
    EXPECT_EQ(count(svg, "<rect x") - 1 - count(svg, "width=\"12\""), 3u);
    const std::regex fill("fill=\"(hsl\\([^\"]*\\))\" data-id");
    std::set<std::string> fills;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), fill); it != std::sregex_iterator(); ++it) {
        fills.insert((*it)[1]);
    }
    EXPECT_EQ(fills.size(), 2u);
}

TEST(Svg, OneCirclePerDisc) {
    const Scene s = generate_scene(GenKind::Discs, 50, GenParams{}, 3);
    const Coloring c(std::vector<Color>(50, 1));
    const std::string svg = render_svg(s, c);
    EXPECT_EQ(count(svg, "<circle"), 50u);
    EXPECT_EQ(svg, render_svg(s, c));
}

TEST(Svg, PolygonsAndLegend) {
    const Scene s = generate_scene(GenKind::Pentagons, 10, GenParams{}, 3);
    std::vector<Color> colors(10);
    for (std::size_t i = 0; i < 10; ++i) colors[i] = static_cast<Color>(i % 4);
    const std::string svg = render_svg(s, Coloring(colors));
    EXPECT_EQ(count(svg, "<polygon"), 10u);
    EXPECT_EQ(count(svg, ">color "), 4u);
    EXPECT_THROW(render_svg(s, Coloring({1})), InvalidArgument);
}

TEST(Svg, HueIsDeterministic) {
    EXPECT_EQ(color_fill(0), "hsl(0.000,65%,55%)");
    EXPECT_EQ(color_fill(1), "hsl(137.508,65%,55%)");
    EXPECT_EQ(color_fill(3), "hsl(52.524,65%,55%)");
}
