#pragma once

#include "cfgeom/framework.hpp"
#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cfgeom {

enum class ProbeMode { Disc, PseudoDisc };

/// Vertex shapes plus probe shapes; probe b yields the hyperedge {d : d ∩ b ≠ ∅}.
struct ProbeSystem {
    Scene vertices;
    Scene probes;
    ProbeMode mode = ProbeMode::Disc;
};

/// Throws InvalidArgument unless the system satisfies its mode's invariants.
/// Disc mode: all shapes are discs. Pseudo-disc mode: vertices and probes form
/// a pseudo-disc family and at least one side is pairwise disjoint.
void validate(const ProbeSystem& ps);

Hypergraph probe_hypergraph(const ProbeSystem& ps);

/// Exactly-two graph over `active`: {i, j} is an edge iff some hyperedge meets
/// `active` in exactly {i, j}. Vertex ids stay those of `h`.
Graph auxiliary_graph(const Hypergraph& h, std::span<const Index> active);
Graph auxiliary_graph(const ProbeSystem& ps, std::span<const Index> active);

/// Removal sequence of a peel: order[0] is removed first (and colored last).
struct PeelOrder {
    std::vector<Index> order;
    std::vector<int> degree;  // auxiliary-graph degree at removal, <= 5
};

/// Counters accumulated over one or more peels.
struct PeelStats {
    std::size_t peels = 0;
    std::size_t steps = 0;
    int max_degree = 0;
    std::size_t euler_checks = 0;
    std::size_t euler_violations = 0;  // auxiliary graphs with |E| > 3|V| - 6

    void merge(const PeelStats& other);
};

struct PeelResult {
    Coloring coloring;
    PeelOrder order;
    PeelStats stats;
};

/// Degree-<=5 peel of the exactly-two graph followed by greedy coloring in
/// reverse peel order. Ties go to the smallest vertex and the smallest color.
/// Throws PlanarityViolation when no vertex of degree <= 5 is left.
PeelResult peel_and_color(const Hypergraph& h);
PeelResult peel_and_color(const ProbeSystem& ps);

/// peel_and_color as a hereditary 6-color ProperColorer. When `stats` is
/// given, each invocation is merged into it.
ProperColorer peel_colorer(PeelStats* stats = nullptr);

/// Outcome of pruning: every kept shape owns a point covered by no other kept shape.
struct PruneResult {
    VertexSet kept;
    VertexSet removed;
    std::vector<Point> witnesses;  // parallel to kept
};

/// Default sample spacing for pruning, as a fraction of each shape's bounding-box diagonal.
inline constexpr double kDefaultPruneResolution = 1.0 / 96.0;

/// Scans shapes in index order and drops those without a depth-1 point in the
/// current surviving family. Witness search, in order: uncovered boundary
/// arcs or edge pieces computed from pairwise intersections, boundary points
/// pushed inward by half a step, then an interior grid. `resolution` is the
/// sample spacing relative to the shape's bounding-box diagonal. Accepts
/// discs and convex polygons.
PruneResult prune_depth_one(const Scene& shapes, double resolution);

/// Sample points (same sampling as pruning) of removed shapes that no kept shape covers.
std::size_t prune_coverage_gaps(const Scene& shapes, const PruneResult& pruned, double resolution);

struct ProbeCfResult {
    Coloring coloring;
    PeelStats peel;
    VertexSet pruned;       // vertices given the reserved extra color
    int palette_bound = 0;  // ⌈1 + log_{6/5} n⌉, plus one when pruning was applied
};

/// CF coloring of the vertices against every probe, verified exactly.
///
/// Disc mode, or pseudo-disc mode with pairwise disjoint vertices: proper_to_cf
/// with the peel colorer. Pseudo-disc mode with pairwise disjoint probes: the
/// vertices are pruned first, the kept ones are colored as above, and the
/// pruned ones share one extra color.
ProbeCfResult cf_color_vs_probes(const ProbeSystem& ps, double prune_resolution = kDefaultPruneResolution);

struct PseudoDiscResult {
    Coloring coloring;
    VertexSet independent;  // B, greedy maximal independent set
    VertexSet rest;         // V \ B
    std::size_t palette_independent = 0;
    std::size_t palette_rest = 0;
    PeelStats peel;
    VertexSet pruned;  // ids in the scene
    int palette_bound = 0;
};

/// ⌈1 + log_{6/5} b⌉ + ⌈1 + log_{6/5} r⌉ + 1.
int pseudodisc_palette_bound(std::size_t independent, std::size_t rest);

/// Pointed-CF coloring of the intersection graph of a disc or pseudo-disc
/// family. B is colored against the probes V \ B, then V \ B against the
/// probes B with a disjoint palette. The result is verified exactly.
PseudoDiscResult pointed_cf_pseudodiscs(const Scene& scene,
                                        double prune_resolution = kDefaultPruneResolution);

/// Shapes at the given positions, in order.
Scene subscene(const Scene& scene, std::span<const Index> ids);

}  // namespace cfgeom
