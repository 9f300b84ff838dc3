#include "cfgeom/probe_cf.hpp"

#include "cfgeom/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

namespace cfgeom {

// ---------------------------------------------------------------------------
// Probe hypergraphs and auxiliary graphs

namespace {

bool all_discs(const Scene& s) {
    return std::all_of(s.shapes.begin(), s.shapes.end(), [](const Shape& x) { return std::holds_alternative<Disc>(x); });
}

bool all_polygons(const Scene& s) {
    return std::all_of(s.shapes.begin(), s.shapes.end(),
                       [](const Shape& x) { return std::holds_alternative<ConvexFatObject>(x); });
}

Scene concatenated(const Scene& a, const Scene& b) {
    std::vector<Shape> shapes = a.shapes;
    shapes.insert(shapes.end(), b.shapes.begin(), b.shapes.end());
    return Scene::from_shapes(std::move(shapes));
}

}  // namespace

void validate(const ProbeSystem& ps) {
    if (ps.mode == ProbeMode::Disc) {
        if (!all_discs(ps.vertices) || !all_discs(ps.probes))
            throw InvalidArgument("disc mode needs disc vertices and disc probes");
        return;
    }
    const Scene all = concatenated(ps.vertices, ps.probes);
    if (!all_discs(all) && !all_polygons(all))
        throw InvalidArgument("pseudo-disc mode needs all discs or all convex polygons");
    if (!is_pseudodisc_family(all)) throw InvalidArgument("vertices and probes do not form a pseudo-disc family");
    if (!pairwise_disjoint(ps.vertices) && !pairwise_disjoint(ps.probes))
        throw InvalidArgument("pseudo-disc mode needs pairwise disjoint vertices or pairwise disjoint probes");
}

Hypergraph probe_hypergraph(const ProbeSystem& ps) {
    const std::size_t n = ps.vertices.size();
    Hypergraph h(n);
    std::vector<Box> boxes;
    boxes.reserve(n);
    for (const auto& s : ps.vertices.shapes) boxes.push_back(bounding_box(s));
    h.edges.reserve(ps.probes.size());
    for (std::size_t p = 0; p < ps.probes.size(); ++p) {
        const Shape& probe = ps.probes[p];
        const Box pb = bounding_box(probe);
        std::vector<Index> members;
        for (std::size_t v = 0; v < n; ++v) {
            if (boxes[v].overlaps(pb) && intersects(ps.vertices[v], probe)) members.push_back(static_cast<Index>(v));
        }
        h.edges.push_back({std::move(members), static_cast<Index>(p)});
    }
    return h;
}

Graph auxiliary_graph(const Hypergraph& h, std::span<const Index> active) {
    std::vector<char> on(h.n, 0);
    for (Index v : active) on[static_cast<std::size_t>(v)] = 1;
    Graph g(h.n);
    for (const auto& e : h.edges) {
        Index pair[2];
        int count = 0;
        for (Index v : e.members) {
            if (!on[static_cast<std::size_t>(v)]) continue;
            if (count < 2) pair[count] = v;
            if (++count > 2) break;
        }
        if (count == 2) g.add_edge(pair[0], pair[1]);
    }
    return g;
}

Graph auxiliary_graph(const ProbeSystem& ps, std::span<const Index> active) {
    return auxiliary_graph(probe_hypergraph(ps), active);
}

// ---------------------------------------------------------------------------
// Peel and color

void PeelStats::merge(const PeelStats& other) {
    peels += other.peels;
    steps += other.steps;
    max_degree = std::max(max_degree, other.max_degree);
    euler_checks += other.euler_checks;
    euler_violations += other.euler_violations;
}

namespace {

// Exactly-two graph maintained under vertex deletion. Each pair carries the
// number of hyperedges currently witnessing it.
class ExactlyTwoGraph {
public:
    explicit ExactlyTwoGraph(const Hypergraph& h)
        : h_(h), alive_(h.n, 1), alive_count_(h.edges.size()), incidence_(h.n), witnesses_(h.n) {
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            const auto& members = h.edges[e].members;
            alive_count_[e] = members.size();
            if (members.size() < 2) continue;
            for (Index v : members) incidence_[static_cast<std::size_t>(v)].push_back(e);
            if (members.size() == 2) add_pair(members[0], members[1]);
        }
        for (std::size_t v = 0; v < h.n; ++v) refresh(static_cast<Index>(v));
        active_ = h.n;
    }

    std::size_t active() const { return active_; }
    std::size_t edge_count() const { return edges_; }
    bool has_candidate() const { return !low_degree_.empty(); }
    Index candidate() const { return *low_degree_.begin(); }
    int degree(Index v) const { return static_cast<int>(witnesses_[static_cast<std::size_t>(v)].size()); }

    std::vector<Index> neighbors(Index v) const {
        std::vector<Index> out;
        for (const auto& [u, count] : witnesses_[static_cast<std::size_t>(v)]) out.push_back(u);
        std::sort(out.begin(), out.end());
        return out;
    }

    void remove(Index v) {
        alive_[static_cast<std::size_t>(v)] = 0;
        low_degree_.erase(v);
        --active_;
        for (std::size_t e : incidence_[static_cast<std::size_t>(v)]) {
            if (alive_count_[e] == 2) {
                const auto pair = alive_members(e);  // v is already dead: only the partner is left
                remove_pair(v, pair[0]);
            }
            --alive_count_[e];
            if (alive_count_[e] == 2) {
                const auto pair = alive_members(e);
                add_pair(pair[0], pair[1]);
            }
        }
    }

private:
    std::array<Index, 2> alive_members(std::size_t e) const {
        std::array<Index, 2> out{-1, -1};
        int k = 0;
        for (Index u : h_.edges[e].members) {
            if (alive_[static_cast<std::size_t>(u)]) {
                out[static_cast<std::size_t>(k++)] = u;
                if (k == 2) break;
            }
        }
        return out;
    }

    void add_pair(Index a, Index b) {
        auto& wa = witnesses_[static_cast<std::size_t>(a)];
        if (wa[b]++ == 0) {
            witnesses_[static_cast<std::size_t>(b)][a] = 1;
            ++edges_;
            refresh(a);
            refresh(b);
        } else {
            ++witnesses_[static_cast<std::size_t>(b)][a];
        }
    }

    void remove_pair(Index a, Index b) {
        auto& wa = witnesses_[static_cast<std::size_t>(a)];
        auto& wb = witnesses_[static_cast<std::size_t>(b)];
        if (--wa[b] == 0) {
            wa.erase(b);
            wb.erase(a);
            --edges_;
            refresh(a);
            refresh(b);
        } else {
            --wb[a];
        }
    }

    void refresh(Index v) {
        if (!alive_[static_cast<std::size_t>(v)]) return;
        if (witnesses_[static_cast<std::size_t>(v)].size() <= 5) {
            low_degree_.insert(v);
        } else {
            low_degree_.erase(v);
        }
    }

    const Hypergraph& h_;
    std::vector<char> alive_;
    std::vector<std::size_t> alive_count_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<std::unordered_map<Index, int>> witnesses_;
    std::set<Index> low_degree_;
    std::size_t active_ = 0;
    std::size_t edges_ = 0;
};

}  // namespace

PeelResult peel_and_color(const Hypergraph& h) {
    PeelResult result;
    result.stats.peels = 1;
    ExactlyTwoGraph aux(h);
    std::vector<std::vector<Index>> later_neighbors;
    later_neighbors.reserve(h.n);
    bool warned = false;
    while (aux.active() > 0) {
        if (aux.active() >= 3) {
            ++result.stats.euler_checks;
            if (aux.edge_count() > 3 * aux.active() - 6) {
                ++result.stats.euler_violations;
                if (!warned) {
                    std::clog << "cfgeom: auxiliary graph with " << aux.active() << " vertices has "
                              << aux.edge_count() << " edges, above the planar bound\n";
                    warned = true;
                }
            }
        }
        if (!aux.has_candidate()) {
            throw PlanarityViolation("planarity violation: no vertex of degree <= 5 among " +
                                     std::to_string(aux.active()) + " active vertices");
        }
        const Index v = aux.candidate();
        const int degree = aux.degree(v);
        result.order.order.push_back(v);
        result.order.degree.push_back(degree);
        result.stats.max_degree = std::max(result.stats.max_degree, degree);
        later_neighbors.push_back(aux.neighbors(v));
        aux.remove(v);
    }
    result.stats.steps = result.order.order.size();

    result.coloring = Coloring(std::vector<Color>(h.n, 0));
    for (std::size_t i = result.order.order.size(); i-- > 0;) {
        std::array<bool, 8> used{};
        for (Index u : later_neighbors[i]) {
            const Color c = result.coloring[static_cast<std::size_t>(u)];
            if (c > 0 && c < static_cast<Color>(used.size())) used[static_cast<std::size_t>(c)] = true;
        }
        Color c = 1;
        while (used[static_cast<std::size_t>(c)]) ++c;
        result.coloring[static_cast<std::size_t>(result.order.order[i])] = c;
    }
    return result;
}

PeelResult peel_and_color(const ProbeSystem& ps) {
    validate(ps);
    PeelResult result = peel_and_color(probe_hypergraph(ps));
    if (!verify_proper(probe_hypergraph(ps), result.coloring))
        throw VerificationFailure("peel coloring is not proper for the probe hypergraph");
    return result;
}

ProperColorer peel_colorer(PeelStats* stats) {
    return {[stats](const Hypergraph& sub, std::span<const Index>) {
                PeelResult r = peel_and_color(sub);
                if (stats) stats->merge(r.stats);
                return std::move(r.coloring);
            },
            6, "peel"};
}

// ---------------------------------------------------------------------------
// Depth-1 pruning

namespace {

double diagonal(const Shape& s) {
    const Box b = bounding_box(s);
    return std::hypot(b.width(), b.height());
}

bool covered_by_any(const Point& p, const Scene& shapes, std::span<const Index> others) {
    return std::any_of(others.begin(), others.end(),
                       [&](Index j) { return contains(shapes[static_cast<std::size_t>(j)], p); });
}

struct Arc {
    double from;
    double to;
};

// Midpoints of the gaps left by closed intervals on [lo, hi] (or on the circle when `periodic`).
std::vector<double> gap_midpoints(std::vector<Arc> covered, double lo, double hi, bool periodic) {
    std::sort(covered.begin(), covered.end(), [](const Arc& a, const Arc& b) { return a.from < b.from; });
    std::vector<double> mids;
    if (covered.empty()) {
        mids.push_back((lo + hi) / 2.0);
        return mids;
    }
    double reach = covered.front().from;
    const double start = covered.front().from;
    if (!periodic && start > lo) mids.push_back((lo + start) / 2.0);
    reach = covered.front().to;
    for (std::size_t i = 1; i < covered.size(); ++i) {
        if (covered[i].from > reach) mids.push_back((reach + covered[i].from) / 2.0);
        reach = std::max(reach, covered[i].to);
    }
    if (periodic) {
        const double wrap_end = start + (hi - lo);
        if (reach < wrap_end) mids.push_back((reach + wrap_end) / 2.0);
    } else if (reach < hi) {
        mids.push_back((reach + hi) / 2.0);
    }
    return mids;
}

std::vector<Point> disc_arc_candidates(const Disc& d, const Scene& shapes, std::span<const Index> others) {
    if (d.radius == 0.0) return {d.center};
    constexpr double two_pi = 2.0 * M_PI;
    std::vector<Arc> arcs;
    for (Index j : others) {
        const auto* o = std::get_if<Disc>(&shapes[static_cast<std::size_t>(j)]);
        if (!o) return {};
        const double dist = (o->center - d.center).norm();
        if (dist + d.radius <= o->radius) return {};  // whole circle covered
        if (dist >= d.radius + o->radius || dist + o->radius <= d.radius) continue;
        const double cos_half = (d.radius * d.radius + dist * dist - o->radius * o->radius) / (2.0 * d.radius * dist);
        const double half = std::acos(std::clamp(cos_half, -1.0, 1.0));
        double mid = std::atan2(o->center.y() - d.center.y(), o->center.x() - d.center.x());
        double from = mid - half;
        double to = mid + half;
        from = std::fmod(from + 4.0 * M_PI, two_pi);
        to = from + 2.0 * half;
        if (to > two_pi) {
            arcs.push_back({from, two_pi});
            arcs.push_back({0.0, to - two_pi});
        } else {
            arcs.push_back({from, to});
        }
    }
    std::vector<Point> out;
    for (double theta : gap_midpoints(arcs, 0.0, two_pi, true)) {
        out.emplace_back(d.center + d.radius * Point(std::cos(theta), std::sin(theta)));
    }
    return out;
}

// Parameter range of segment a + t(b - a), t in [0, 1], inside a closed convex polygon.
std::optional<Arc> clip_segment(const Point& a, const Point& b, const std::vector<Point>& poly) {
    double t0 = 0.0;
    double t1 = 1.0;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % m];
        const Point e = q - p;
        const double fa = e.x() * (a.y() - p.y()) - e.y() * (a.x() - p.x());
        const double fb = e.x() * (b.y() - p.y()) - e.y() * (b.x() - p.x());
        if (fa < 0.0 && fb < 0.0) return std::nullopt;
        if (fa >= 0.0 && fb >= 0.0) continue;
        const double t = fa / (fa - fb);
        if (fa < 0.0) {
            t0 = std::max(t0, t);
        } else {
            t1 = std::min(t1, t);
        }
        if (t0 > t1) return std::nullopt;
    }
    return Arc{t0, t1};
}

std::vector<Point> polygon_edge_candidates(const ConvexFatObject& f, const Scene& shapes, std::span<const Index> others) {
    std::vector<Point> out;
    const std::size_t m = f.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = f.vertices[i];
        const Point& b = f.vertices[(i + 1) % m];
        std::vector<Arc> covered;
        for (Index j : others) {
            const auto* o = std::get_if<ConvexFatObject>(&shapes[static_cast<std::size_t>(j)]);
            if (!o) return {};
            if (auto piece = clip_segment(a, b, o->vertices)) covered.push_back(*piece);
        }
        for (double t : gap_midpoints(covered, 0.0, 1.0, false)) out.emplace_back(a + t * (b - a));
    }
    return out;
}

// Boundary points pushed inward by half a step, then an interior grid.
template <class Visit>
bool for_each_sample(const Shape& s, double resolution, Visit visit) {
    const double step = std::max(resolution * diagonal(s), 1e-12);
    if (const auto* d = std::get_if<Disc>(&s)) {
        const double r = std::max(0.0, d->radius - step / 2.0);
        const int count = std::max(8, static_cast<int>(std::ceil(2.0 * M_PI * d->radius / step)));
        for (int i = 0; i < count; ++i) {
            const double theta = 2.0 * M_PI * i / count;
            if (visit(Point(d->center + r * Point(std::cos(theta), std::sin(theta))))) return true;
        }
    } else if (const auto* f = std::get_if<ConvexFatObject>(&s)) {
        const std::size_t m = f->vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = f->vertices[i];
            const Point& b = f->vertices[(i + 1) % m];
            const Point e = b - a;
            const double len = e.norm();
            const Point inward = Point(-e.y(), e.x()) / len;
            const int count = std::max(1, static_cast<int>(std::ceil(len / step)));
            for (int k = 0; k < count; ++k) {
                const Point p = a + ((k + 0.5) / count) * e + (step / 2.0) * inward;
                if (contains(s, p) && visit(p)) return true;
            }
        }
    } else {
        throw InvalidArgument("pruning supports discs and convex polygons only");
    }
    const Box box = bounding_box(s);
    for (double x = box.xmin + step / 2.0; x < box.xmax; x += step) {
        for (double y = box.ymin + step / 2.0; y < box.ymax; y += step) {
            const Point p(x, y);
            if (contains(s, p) && visit(p)) return true;
        }
    }
    return false;
}

std::optional<Point> depth_one_witness(const Scene& shapes, Index i, std::span<const Index> others, double resolution) {
    const Shape& s = shapes[static_cast<std::size_t>(i)];
    std::vector<Point> exact;
    if (const auto* d = std::get_if<Disc>(&s)) {
        exact = disc_arc_candidates(*d, shapes, others);
    } else if (const auto* f = std::get_if<ConvexFatObject>(&s)) {
        exact = polygon_edge_candidates(*f, shapes, others);
    }
    for (const auto& p : exact) {
        if (contains(s, p) && !covered_by_any(p, shapes, others)) return p;
    }
    std::optional<Point> found;
    for_each_sample(s, resolution, [&](const Point& p) {
        if (covered_by_any(p, shapes, others)) return false;
        found = p;
        return true;
    });
    return found;
}

}  // namespace

PruneResult prune_depth_one(const Scene& shapes, double resolution) {
    if (!(resolution > 0.0)) throw InvalidArgument("resolution must be positive");
    if (!all_discs(shapes) && !all_polygons(shapes))
        throw InvalidArgument("pruning needs a homogeneous family of discs or convex polygons");
    const std::size_t n = shapes.size();
    std::vector<Box> boxes;
    for (const auto& s : shapes.shapes) boxes.push_back(bounding_box(s));
    std::vector<char> alive(n, 1);
    PruneResult result;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Index> others;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && alive[j] && boxes[i].overlaps(boxes[j])) others.push_back(static_cast<Index>(j));
        }
        if (auto w = depth_one_witness(shapes, static_cast<Index>(i), others, resolution)) {
            result.kept.push_back(static_cast<Index>(i));
            result.witnesses.push_back(*w);
        } else {
            alive[i] = 0;
            result.removed.push_back(static_cast<Index>(i));
        }
    }
    return result;
}

std::size_t prune_coverage_gaps(const Scene& shapes, const PruneResult& pruned, double resolution) {
    std::size_t gaps = 0;
    for (Index r : pruned.removed) {
        const Shape& s = shapes[static_cast<std::size_t>(r)];
        const Box b = bounding_box(s);
        std::vector<Index> cover;
        for (Index k : pruned.kept) {
            if (b.overlaps(bounding_box(shapes[static_cast<std::size_t>(k)]))) cover.push_back(k);
        }
        for_each_sample(s, resolution, [&](const Point& p) {
            if (!covered_by_any(p, shapes, cover)) ++gaps;
            return false;
        });
    }
    return gaps;
}

// ---------------------------------------------------------------------------
// Pipelines

Scene subscene(const Scene& scene, std::span<const Index> ids) {
    std::vector<Shape> shapes;
    shapes.reserve(ids.size());
    for (Index i : ids) shapes.push_back(scene[static_cast<std::size_t>(i)]);
    return Scene::from_shapes(std::move(shapes), scene.kind);
}

ProbeCfResult cf_color_vs_probes(const ProbeSystem& ps, double prune_resolution) {
    validate(ps);
    ProbeCfResult result;
    const std::size_t n = ps.vertices.size();
    const Hypergraph h = probe_hypergraph(ps);
    const bool prune = ps.mode == ProbeMode::PseudoDisc && !pairwise_disjoint(ps.vertices);
    if (!prune) {
        result.coloring = proper_to_cf(h, peel_colorer(&result.peel));
        result.palette_bound = cf_palette_bound(n, 6);
    } else {
        const PruneResult pr = prune_depth_one(ps.vertices, prune_resolution);
        const ProbeSystem kept{subscene(ps.vertices, pr.kept), ps.probes, ps.mode};
        const Coloring kept_colors = proper_to_cf(probe_hypergraph(kept), peel_colorer(&result.peel));
        Color top = 0;
        for (Color c : kept_colors.colors) top = std::max(top, c);
        result.coloring = Coloring(std::vector<Color>(n, top + 1));
        for (std::size_t i = 0; i < pr.kept.size(); ++i)
            result.coloring[static_cast<std::size_t>(pr.kept[i])] = kept_colors[i];
        result.pruned = pr.removed;
        result.palette_bound = cf_palette_bound(n, 6) + 1;
    }
    if (const Verdict v = verify_cf(h, result.coloring); !v) {
        throw VerificationFailure("coloring is not CF against " + std::to_string(v.violations.size()) + " probes");
    }
    return result;
}

int pseudodisc_palette_bound(std::size_t independent, std::size_t rest) {
    return cf_palette_bound(independent, 6) + cf_palette_bound(rest, 6) + 1;
}

PseudoDiscResult pointed_cf_pseudodiscs(const Scene& scene, double prune_resolution) {
    ProbeMode mode;
    if (all_discs(scene)) {
        mode = ProbeMode::Disc;
    } else if (all_polygons(scene)) {
        mode = ProbeMode::PseudoDisc;
        if (!is_pseudodisc_family(scene)) throw InvalidArgument("scene is not a pseudo-disc family");
    } else {
        throw InvalidArgument("pseudo-disc coloring needs all discs or all convex polygons");
    }

    PseudoDiscResult result;
    const Graph g = intersection_graph(scene);
    result.independent = greedy_maximal_independent_set(g, identity_order(scene.size()));
    result.rest = complement(scene.size(), result.independent);
    result.coloring = Coloring(std::vector<Color>(scene.size(), 0));

    const ProbeSystem for_independent{subscene(scene, result.independent), subscene(scene, result.rest), mode};
    const ProbeCfResult first = cf_color_vs_probes(for_independent, prune_resolution);
    result.peel.merge(first.peel);
    Color top = 0;
    for (std::size_t i = 0; i < result.independent.size(); ++i) {
        result.coloring[static_cast<std::size_t>(result.independent[i])] = first.coloring[i];
        top = std::max(top, first.coloring[i]);
    }
    result.palette_independent = first.coloring.palette_size();

    if (!result.rest.empty()) {
        const ProbeSystem for_rest{subscene(scene, result.rest), subscene(scene, result.independent), mode};
        const ProbeCfResult second = cf_color_vs_probes(for_rest, prune_resolution);
        result.peel.merge(second.peel);
        for (std::size_t i = 0; i < result.rest.size(); ++i)
            result.coloring[static_cast<std::size_t>(result.rest[i])] = top + second.coloring[i];
        for (Index p : second.pruned) result.pruned.push_back(result.rest[static_cast<std::size_t>(p)]);
        result.palette_rest = second.coloring.palette_size();
    }
    result.palette_bound = pseudodisc_palette_bound(result.independent.size(), result.rest.size());

    if (const Verdict v = verify_cf(neighborhood_hypergraph(g, Neighborhood::Pointed), result.coloring); !v) {
        throw VerificationFailure("pseudo-disc coloring is not pointed-CF at " + std::to_string(v.violations.size()) +
                                  " vertices");
    }
    return result;
}

}  // namespace cfgeom
