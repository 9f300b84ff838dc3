#pragma once

#include "cfgeom/error.hpp"
#include "cfgeom/hypergraph.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cfgeom {

/// A hereditary proper colorer with at most `k` colors.
///
/// `color` receives an induced sub-hypergraph together with the ids its
/// vertices carry in the root hypergraph, so geometric colorers can find
/// their shapes again.
struct ProperColorer {
    std::function<Coloring(const Hypergraph& sub, std::span<const Index> origin)> color;
    int k = 0;
    std::string name;
};

/// Raised when a ProperColorer breaks its contract; carries the offending sub-hypergraph.
class ColorerContractError : public Error {
public:
    ColorerContractError(const std::string& what, Hypergraph sub)
        : Error(what), sub_(std::move(sub)) {}
    const Hypergraph& sub_hypergraph() const { return sub_; }

private:
    Hypergraph sub_;
};

/// Raised by the list variant when a vertex runs out of admissible colors.
class ListExhausted : public Error {
public:
    ListExhausted(const std::string& what, Index vertex) : Error(what), vertex_(vertex) {}
    Index vertex() const { return vertex_; }

private:
    Index vertex_;
};

/// ⌈1 + log_{1 + 1/(k-1)} n⌉, the palette ceiling for a hereditary k-colorable
/// hypergraph on n vertices. Zero for n == 0; one for k == 1.
int cf_palette_bound(std::size_t n, int k);

/// Upper bound on the number of rounds proper_to_cf may take.
int cf_round_bound(std::size_t n, int k);

/// Proper-to-CF iteration. Each round properly colors the hypergraph induced
/// on the still-uncolored vertices, freezes a largest class (ties go to the
/// class holding the smallest vertex) with the round number as its color,
/// and removes it. The result is verified before it is returned.
Coloring proper_to_cf(const Hypergraph& h, const ProperColorer& pc);

using ColorLists = std::vector<std::vector<Color>>;

/// List variant: every vertex ends with a color from its own list.
///
/// Each step takes the color held by the most uncolored vertices (ties to the
/// smaller id), properly colors the holders, freezes the class with the most
/// weight, and strikes that color from every list. A vertex with j colors left
/// weighs (k / (k - 1))^-j, so vertices close to exhaustion are preferred;
/// with equal list sizes this is just the largest class.
Coloring proper_to_cf_list(const Hypergraph& h, const ColorLists& lists, const ProperColorer& pc);

/// Splits each color class of a pointed-CF coloring into two so that the
/// result is CF for closed neighborhoods. Colors come out as encode_pair(i, l)
/// where i is the rank of the input color, with palette_map holding
/// (input color, l).
Coloring pointed_to_closed(const Graph& g, const Coloring& pointed);

/// Colorer for hypergraphs without edges of size >= 2: everything gets color 1.
ProperColorer trivial_colorer();

}  // namespace cfgeom
