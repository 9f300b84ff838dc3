#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <string>
#include <vector>

namespace cfgeom {

struct RectColoringResult {
    Coloring coloring;
    std::vector<int> depth;  // recursion depth whose palette colored each rectangle
    std::vector<int> node;   // recursion node (preorder id) whose line stabbed it
    int max_depth = 0;       // deepest level used, counting from 0
};

/// Closed CF coloring of axis-parallel rectangles by recursive splitting.
///
/// Each node draws the vertical line through the x-center of the median
/// rectangle (by x-center, ties by index), colors the rectangles meeting the
/// line through their y-intervals with colors 3d+1..3d+3, and recurses on the
/// rectangles strictly left and strictly right of the line.
/// Throws InvalidArgument on an empty family or a scene holding other shapes.
RectColoringResult closed_cf_color_rects(const Scene& rects);

/// ⌊log₂ n⌋ + 1 levels of three colors each.
int rect_palette_bound(std::size_t n);

/// Structural checks on a result: same-depth rectangles from different nodes
/// are disjoint, the depth stays within ⌊log₂ n⌋, and every node's stabbed
/// family has the same intersection graph as its y-intervals. One message per failure.
std::vector<std::string> check_rect_structure(const Scene& rects, const RectColoringResult& result);

}  // namespace cfgeom
