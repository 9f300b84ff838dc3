#pragma once

#include "cfgeom/geom.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cfgeom {

using Index = int;
using Color = int;

/// Strictly increasing list of vertex indices.
using VertexSet = std::vector<Index>;

/// Simple undirected graph with adjacency lists kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }

    /// Adds {u, v}; ignores duplicates. Self-loops and out-of-range ids throw.
    void add_edge(Index u, Index v);
    bool has_edge(Index u, Index v) const;
    std::span<const Index> neighbors(Index v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Index v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Index, Index>> edges() const;

private:
    std::vector<std::vector<Index>> adj_;
    std::size_t edges_ = 0;
};

/// A hyperedge with the id of whatever produced it (a probe, a vertex, ...).
struct Hyperedge {
    VertexSet members;
    Index source = -1;
};

struct Hypergraph {
    std::size_t n = 0;
    std::vector<Hyperedge> edges;

    Hypergraph() = default;
    explicit Hypergraph(std::size_t vertex_count) : n(vertex_count) {}

    /// Sorts and deduplicates `members` before storing it.
    void add_edge(std::vector<Index> members, Index source = -1);
};

/// Total map vertex -> color id. Pair-valued colors are flattened to ints and
/// their meaning recorded in `palette_map`.
struct Coloring {
    std::vector<Color> colors;
    std::map<Color, std::pair<int, int>> palette_map;

    Coloring() = default;
    explicit Coloring(std::vector<Color> c) : colors(std::move(c)) {}

    std::size_t size() const { return colors.size(); }
    Color operator[](std::size_t v) const { return colors[v]; }
    Color& operator[](std::size_t v) { return colors[v]; }

    /// Number of distinct ids in use.
    std::size_t palette_size() const;
};

/// Stable flattening of a structured color (i, l), l in {1, 2}.
constexpr Color encode_pair(int i, int l) { return 2 * (i - 1) + (l - 1); }

enum class Neighborhood { Pointed, Closed };

struct Verdict {
    std::vector<std::size_t> violations;  // offending edge positions, ascending

    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
};

Graph intersection_graph(const Scene& scene);

/// One hyperedge per vertex: N(v) (empty ones omitted) or N[v]. Source is v.
Hypergraph neighborhood_hypergraph(const Graph& g, Neighborhood mode);

/// Sub-hypergraph on `keep` (reindexed 0..|keep|-1); every edge becomes e ∩ keep.
Hypergraph induced(const Hypergraph& h, std::span<const Index> keep);

/// Edges of size >= 2 that are monochromatic.
Verdict verify_proper(const Hypergraph& h, const Coloring& c);

/// Nonempty edges without a uniquely colored member.
Verdict verify_cf(const Hypergraph& h, const Coloring& c);

/// True iff `members` has a vertex whose color occurs once among them.
bool has_unique_color(std::span<const Index> members, const Coloring& c);

struct OracleResult {
    std::optional<int> min_colors;  // empty when no CF coloring within max_colors exists
    Coloring witness;
};

/// Exhaustive CF chromatic number for n <= 16. Colors are introduced in
/// first-use order, and an edge is checked as soon as its last vertex is set.
OracleResult min_cf_colors_bruteforce(const Hypergraph& h, int max_colors);

/// Greedy maximal independent set scanning vertices in `order`.
VertexSet greedy_maximal_independent_set(const Graph& g, std::span<const Index> order);

/// Identity order 0..n-1.
std::vector<Index> identity_order(std::size_t n);

/// Complement of a sorted set within 0..n-1.
VertexSet complement(std::size_t n, std::span<const Index> set);

}  // namespace cfgeom
