#include "cfgeom/hypergraph.hpp"

#include "cfgeom/error.hpp"
#include "cfgeom/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace cfgeom {

void Graph::add_edge(Index u, Index v) {
    const auto n = static_cast<Index>(adj_.size());
    if (u == v) throw InvalidArgument("self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::has_edge(Index u, Index v) const {
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<Index, Index>> Graph::edges() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (Index v : adj_[u]) {
            if (static_cast<Index>(u) < v) out.emplace_back(static_cast<Index>(u), v);
        }
    }
    return out;
}

void Hypergraph::add_edge(std::vector<Index> members, Index source) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && (members.front() < 0 || members.back() >= static_cast<Index>(n)))
        throw InvalidArgument("hyperedge member out of range");
    edges.push_back({std::move(members), source});
}

std::size_t Coloring::palette_size() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Graph intersection_graph(const Scene& scene) {
    const std::size_t n = scene.size();
    Graph g(n);
    std::vector<Box> boxes;
    boxes.reserve(n);
    for (const auto& s : scene.shapes) boxes.push_back(bounding_box(s));
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return boxes[a].xmin < boxes[b].xmin || (boxes[a].xmin == boxes[b].xmin && a < b);
    });
    for (std::size_t p = 0; p < n; ++p) {
        const Index i = order[p];
        for (std::size_t q = p + 1; q < n && boxes[order[q]].xmin <= boxes[i].xmax; ++q) {
            const Index j = order[q];
            if (boxes[i].overlaps(boxes[j]) && intersects(scene[i], scene[j])) g.add_edge(i, j);
        }
    }
    return g;
}

Hypergraph neighborhood_hypergraph(const Graph& g, Neighborhood mode) {
    Hypergraph h(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(static_cast<Index>(v));
        std::vector<Index> members(nb.begin(), nb.end());
        if (mode == Neighborhood::Closed) {
            members.push_back(static_cast<Index>(v));
        } else if (members.empty()) {
            continue;
        }
        h.add_edge(std::move(members), static_cast<Index>(v));
    }
    return h;
}

Hypergraph induced(const Hypergraph& h, std::span<const Index> keep) {
    std::vector<Index> position(h.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Index v = keep[i];
        if (v < 0 || static_cast<std::size_t>(v) >= h.n) throw InvalidArgument("keep index out of range");
        if (i > 0 && keep[i - 1] >= v) throw InvalidArgument("keep set must be strictly increasing");
        position[static_cast<std::size_t>(v)] = static_cast<Index>(i);
    }
    Hypergraph out(keep.size());
    out.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        Hyperedge sub;
        sub.source = e.source;
        for (Index v : e.members) {
            if (const Index p = position[static_cast<std::size_t>(v)]; p >= 0) sub.members.push_back(p);
        }
        out.edges.push_back(std::move(sub));
    }
    return out;
}

namespace {

bool unique_in(std::span<const Index> members, std::span<const Color> colors) {
    if (members.size() == 1) return true;
    std::vector<Color> cs;
    cs.reserve(members.size());
    for (Index v : members) cs.push_back(colors[static_cast<std::size_t>(v)]);
    std::sort(cs.begin(), cs.end());
    for (std::size_t i = 0; i < cs.size();) {
        std::size_t j = i + 1;
        while (j < cs.size() && cs[j] == cs[i]) ++j;
        if (j - i == 1) return true;
        i = j;
    }
    return false;
}

}  // namespace

bool has_unique_color(std::span<const Index> members, const Coloring& c) { return unique_in(members, c.colors); }

namespace {

void check_total(const Hypergraph& h, const Coloring& c) {
    if (c.size() != h.n) {
        throw InvalidArgument("coloring covers " + std::to_string(c.size()) + " vertices, hypergraph has " +
                              std::to_string(h.n));
    }
}

template <class Bad>
Verdict scan_edges(const Hypergraph& h, Bad bad) {
    Verdict verdict;
    std::mutex guard;
    parallel_for(h.edges.size(), 4096, [&](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> local;
        for (std::size_t i = begin; i < end; ++i) {
            if (bad(h.edges[i].members)) local.push_back(i);
        }
        const std::lock_guard lock(guard);
        verdict.violations.insert(verdict.violations.end(), local.begin(), local.end());
    });
    std::sort(verdict.violations.begin(), verdict.violations.end());
    return verdict;
}

}  // namespace

Verdict verify_proper(const Hypergraph& h, const Coloring& c) {
    check_total(h, c);
    return scan_edges(h, [&](const VertexSet& e) {
        if (e.size() < 2) return false;
        const Color first = c[static_cast<std::size_t>(e.front())];
        return std::all_of(e.begin(), e.end(), [&](Index v) { return c[static_cast<std::size_t>(v)] == first; });
    });
}

Verdict verify_cf(const Hypergraph& h, const Coloring& c) {
    check_total(h, c);
    return scan_edges(h, [&](const VertexSet& e) { return !e.empty() && !has_unique_color(e, c); });
}

namespace {

class CfSearch {
public:
    CfSearch(const Hypergraph& h, int colors) : n_(h.n), colors_(colors), assignment_(h.n, 0), closing_(h.n) {
        for (const auto& e : h.edges) {
            if (!e.members.empty()) closing_[static_cast<std::size_t>(e.members.back())].push_back(&e.members);
        }
    }

    bool run() { return assign(0, 0); }
    const std::vector<Color>& assignment() const { return assignment_; }

private:
    bool assign(std::size_t v, int used) {
        if (v == n_) return true;
        const int limit = std::min(used + 1, colors_);
        for (int color = 1; color <= limit; ++color) {
            assignment_[v] = color;
            if (closed_edges_ok(v) && assign(v + 1, std::max(used, color))) return true;
        }
        return false;
    }

    bool closed_edges_ok(std::size_t v) const {
        return std::all_of(closing_[v].begin(), closing_[v].end(),
                           [&](const VertexSet* e) { return unique_in(*e, assignment_); });
    }

    std::size_t n_;
    int colors_;
    std::vector<Color> assignment_;
    std::vector<std::vector<const VertexSet*>> closing_;
};

}  // namespace

OracleResult min_cf_colors_bruteforce(const Hypergraph& h, int max_colors) {
    if (h.n > 16) throw InvalidArgument("exhaustive CF oracle is limited to 16 vertices");
    if (h.n == 0) return {0, Coloring{}};
    for (int t = 1; t <= max_colors; ++t) {
        CfSearch search(h, t);
        if (search.run()) return {t, Coloring(search.assignment())};
    }
    return {std::nullopt, Coloring{}};
}

std::vector<Index> identity_order(std::size_t n) {
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

VertexSet greedy_maximal_independent_set(const Graph& g, std::span<const Index> order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw InvalidArgument("order must be a permutation of the vertices");
    std::vector<char> seen(n, 0);
    std::vector<char> blocked(n, 0);
    VertexSet chosen;
    for (Index v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            throw InvalidArgument("order must be a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
        if (blocked[static_cast<std::size_t>(v)]) continue;
        chosen.push_back(v);
        for (Index u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

VertexSet complement(std::size_t n, std::span<const Index> set) {
    VertexSet out;
    std::size_t p = 0;
    for (Index v = 0; static_cast<std::size_t>(v) < n; ++v) {
        if (p < set.size() && set[p] == v) {
            ++p;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace cfgeom
