#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <string>
#include <vector>

namespace cfgeom {

struct IntervalChainResult {
    Coloring coloring;
    std::vector<Index> chain;  // s_1, s_2, ... in selection order
};

/// Closed CF coloring of an interval family with at most 3 colors.
///
/// S_1 holds the intervals with the smallest left endpoint and s_1 is the one
/// reaching furthest right. S_{i+1} holds the intervals that start inside s_i
/// and end after it; when there are none, the intervals with the smallest left
/// endpoint beyond r(s_i). s_{i+1} again reaches furthest right, ties to the
/// smallest index. Chain members alternate colors 1 and 2, everything else is 3.
/// Throws InvalidArgument on an empty family or a scene holding other shapes.
IntervalChainResult closed_cf_color_intervals(const Scene& intervals);
IntervalChainResult closed_cf_color_intervals(const std::vector<Interval>& intervals);

/// Checks the structural claims about a chain and returns one message per
/// failure (empty when all hold):
///   - chain members two or more steps apart are disjoint;
///   - right endpoints strictly increase;
///   - the chain covers the union of the family;
///   - an interval meeting s_i and s_{i+2} also meets s_{i+1};
///   - no color-3 interval meets two intervals of color 1 and two of color 2.
std::vector<std::string> check_interval_chain(const std::vector<Interval>& intervals,
                                              const IntervalChainResult& result);

std::vector<Interval> intervals_of(const Scene& scene);

}  // namespace cfgeom
