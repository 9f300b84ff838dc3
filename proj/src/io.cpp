#include "cfgeom/io.hpp"

#include "cfgeom/error.hpp"

#include <fstream>

namespace cfgeom {

namespace {

Json point_json(const Point& p) { return Json::array({p.x(), p.y()}); }

Point point_from(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidArgument("point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

template <class F>
auto guarded(const char* what, F f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json to_json(const Shape& s) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return {{"type", "disc"}, {"cx", x.center.x()}, {"cy", x.center.y()}, {"r", x.radius}};
            } else if constexpr (std::is_same_v<T, Interval>) {
                return {{"type", "interval"}, {"lo", x.lo}, {"hi", x.hi}};
            } else if constexpr (std::is_same_v<T, AARect>) {
                return {{"type", "rect"}, {"xmin", x.xmin}, {"xmax", x.xmax}, {"ymin", x.ymin}, {"ymax", x.ymax}};
            } else {
                Json vs = Json::array();
                for (const auto& v : x.vertices) vs.push_back(point_json(v));
                return {{"type", "fat"},
                        {"vertices", vs},
                        {"anchor", point_json(x.anchor)},
                        {"r_inner", x.r_inner},
                        {"r_outer", x.r_outer}};
            }
        },
        s);
}

Json to_json(const Scene& scene) {
    Json shapes = Json::array();
    for (const auto& s : scene.shapes) shapes.push_back(to_json(s));
    return {{"kind", std::string(to_string(scene.kind))}, {"shapes", shapes}};
}

Json to_json(const Coloring& c) {
    Json j = {{"colors", c.colors}, {"palette_size", c.palette_size()}};
    if (!c.palette_map.empty()) {
        Json map = Json::object();
        for (const auto& [color, pair] : c.palette_map) map[std::to_string(color)] = {pair.first, pair.second};
        j["palette_map"] = map;
    }
    return j;
}

Json to_json(const ProbeSystem& ps) {
    return {{"vertices", to_json(ps.vertices)},
            {"probes", to_json(ps.probes)},
            {"mode", ps.mode == ProbeMode::Disc ? "disc" : "pseudodisc"}};
}

Shape shape_from_json(const Json& j) {
    return guarded("shape", [&]() -> Shape {
        const std::string type = j.at("type").get<std::string>();
        if (type == "disc") {
            const double r = j.at("r").get<double>();
            if (!(r >= 0.0)) throw InvalidArgument("disc radius must be non-negative");
            return Disc{{j.at("cx").get<double>(), j.at("cy").get<double>()}, r};
        }
        if (type == "interval") {
            Interval iv{j.at("lo").get<double>(), j.at("hi").get<double>()};
            if (!(iv.lo <= iv.hi)) throw InvalidArgument("interval with lo > hi");
            return iv;
        }
        if (type == "rect") {
            AARect r{j.at("xmin").get<double>(), j.at("xmax").get<double>(), j.at("ymin").get<double>(),
                     j.at("ymax").get<double>()};
            if (!(r.xmin <= r.xmax && r.ymin <= r.ymax)) throw InvalidArgument("rectangle with min > max");
            return r;
        }
        if (type == "fat") {
            ConvexFatObject f;
            for (const auto& v : j.at("vertices")) f.vertices.push_back(point_from(v));
            f.anchor = point_from(j.at("anchor"));
            f.r_inner = j.at("r_inner").get<double>();
            f.r_outer = j.at("r_outer").get<double>();
            return f;
        }
        throw InvalidArgument("unknown shape type '" + type + "'");
    });
}

Scene scene_from_json(const Json& j) {
    return guarded("scene", [&] {
        std::vector<Shape> shapes;
        for (const auto& s : j.at("shapes")) shapes.push_back(shape_from_json(s));
        const SceneKind declared =
            j.contains("kind") ? scene_kind_from_string(j.at("kind").get<std::string>()) : SceneKind::Mixed;
        Scene scene = Scene::from_shapes(std::move(shapes), declared);
        if (declared != SceneKind::Mixed && !scene.empty() && scene.kind != declared)
            throw InvalidArgument("scene kind does not match its shapes");
        return scene;
    });
}

Coloring coloring_from_json(const Json& j) {
    return guarded("coloring", [&] {
        Coloring c(j.at("colors").get<std::vector<Color>>());
        if (j.contains("palette_map")) {
            for (const auto& [key, value] : j.at("palette_map").items())
                c.palette_map[std::stoi(key)] = {value.at(0).get<int>(), value.at(1).get<int>()};
        }
        if (j.contains("palette_size") && j.at("palette_size").get<std::size_t>() != c.palette_size())
            throw InvalidArgument("palette_size does not match the colors");
        return c;
    });
}

ProbeSystem probe_system_from_json(const Json& j) {
    return guarded("probe system", [&] {
        ProbeSystem ps;
        ps.vertices = scene_from_json(j.at("vertices"));
        ps.probes = scene_from_json(j.at("probes"));
        const std::string mode = j.value("mode", "disc");
        if (mode == "disc") {
            ps.mode = ProbeMode::Disc;
        } else if (mode == "pseudodisc") {
            ps.mode = ProbeMode::PseudoDisc;
        } else {
            throw InvalidArgument("unknown probe mode '" + mode + "'");
        }
        return ps;
    });
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

void write_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << j.dump(2) << '\n';
}

Scene read_scene(const std::string& path) { return scene_from_json(read_json(path)); }
void write_scene(const std::string& path, const Scene& scene) { write_json(path, to_json(scene)); }
Coloring read_coloring(const std::string& path) { return coloring_from_json(read_json(path)); }
void write_coloring(const std::string& path, const Coloring& c) { write_json(path, to_json(c)); }

}  // namespace cfgeom
