#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"
#include "cfgeom/probe_cf.hpp"

#include <json.hpp>

#include <string>

namespace cfgeom {

using Json = nlohmann::json;

Json to_json(const Shape& s);
Json to_json(const Scene& scene);
Json to_json(const Coloring& c);
Json to_json(const ProbeSystem& ps);

/// Parsers throw InvalidArgument on malformed documents.
Shape shape_from_json(const Json& j);
Scene scene_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);
ProbeSystem probe_system_from_json(const Json& j);

Json read_json(const std::string& path);
void write_json(const std::string& path, const Json& j);

Scene read_scene(const std::string& path);
void write_scene(const std::string& path, const Scene& scene);
Coloring read_coloring(const std::string& path);
void write_coloring(const std::string& path, const Coloring& c);

}  // namespace cfgeom
