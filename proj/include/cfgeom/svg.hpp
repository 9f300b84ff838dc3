#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <string>

namespace cfgeom {

/// Fill color for a color id: hsl with hue (id * 137.508) mod 360.
std::string color_fill(Color id);

/// SVG document with one element per shape and a legend of the colors in use.
/// Intervals are drawn as bars, packed into rows. Output depends only on the
/// inputs. Throws InvalidArgument when the coloring does not cover the scene.
std::string render_svg(const Scene& scene, const Coloring& coloring);

}  // namespace cfgeom
