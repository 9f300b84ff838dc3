#pragma once

// Test-side oracles. These deliberately avoid the library's own predicates and
// verifiers so that they can catch mistakes in them.

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <vector>

namespace cfgeom::oracle {

using Matrix = std::vector<std::vector<char>>;

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

inline bool inside_convex(const std::vector<Point>& poly, const Point& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    }
    return true;
}

inline bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double d1 = cross(c, d, a);
    const double d2 = cross(c, d, b);
    const double d3 = cross(a, b, c);
    const double d4 = cross(a, b, d);
    return ((d1 <= 0 && d2 >= 0) || (d1 >= 0 && d2 <= 0)) && ((d3 <= 0 && d4 >= 0) || (d3 >= 0 && d4 <= 0));
}

inline std::vector<Point> as_polygon(const Shape& s) {
    if (const auto* f = std::get_if<ConvexFatObject>(&s)) return f->vertices;
    const auto& d = std::get<Disc>(s);
    std::vector<Point> out;
    for (int i = 0; i < 720; ++i) {
        const double t = 2 * M_PI * i / 720;
        out.emplace_back(d.center + d.radius * Point(std::cos(t), std::sin(t)));
    }
    return out;
}

// Vertex containment plus edge crossings; independent of the separating-axis test.
inline bool polygons_meet(const std::vector<Point>& a, const std::vector<Point>& b) {
    if (inside_convex(b, a[0]) || inside_convex(a, b[0])) return true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (segments_meet(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
        }
    }
    return false;
}

inline bool naive_meet(const Shape& a, const Shape& b) {
    if (const auto* ia = std::get_if<Interval>(&a)) {
        const auto& ib = std::get<Interval>(b);
        return std::max(ia->lo, ib.lo) <= std::min(ia->hi, ib.hi);
    }
    if (const auto* ra = std::get_if<AARect>(&a)) {
        const auto& rb = std::get<AARect>(b);
        return std::max(ra->xmin, rb.xmin) <= std::min(ra->xmax, rb.xmax) &&
               std::max(ra->ymin, rb.ymin) <= std::min(ra->ymax, rb.ymax);
    }
    const auto* da = std::get_if<Disc>(&a);
    const auto* db = std::get_if<Disc>(&b);
    if (da && db) {
        const double dx = da->center.x() - db->center.x();
        const double dy = da->center.y() - db->center.y();
        const double r = da->radius + db->radius;
        return dx * dx + dy * dy <= r * r;
    }
    return polygons_meet(as_polygon(a), as_polygon(b));
}

inline Matrix naive_adjacency(const Scene& s) {
    Matrix m(s.size(), std::vector<char>(s.size(), 0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) m[i][j] = m[j][i] = naive_meet(s[i], s[j]);
    }
    return m;
}

inline bool unique_color_in(const std::vector<Index>& members, const std::vector<Color>& colors) {
    std::map<Color, int> count;
    for (Index v : members) ++count[colors[static_cast<std::size_t>(v)]];
    for (const auto& [c, k] : count) {
        if (k == 1) return true;
    }
    return false;
}

/// Every N(v) (pointed, nonempty only) or N[v] (closed) holds a uniquely colored vertex.
inline bool naive_neighborhood_cf(const Matrix& adj, const std::vector<Color>& colors, bool closed) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        std::vector<Index> members;
        if (closed) members.push_back(static_cast<Index>(v));
        for (std::size_t u = 0; u < adj.size(); ++u) {
            if (adj[v][u]) members.push_back(static_cast<Index>(u));
        }
        if (!members.empty() && !unique_color_in(members, colors)) return false;
    }
    return true;
}

inline bool naive_hypergraph_cf(const std::vector<std::vector<Index>>& edges, const std::vector<Color>& colors) {
    return std::all_of(edges.begin(), edges.end(),
                       [&](const auto& e) { return e.empty() || unique_color_in(e, colors); });
}

inline std::size_t distinct(const std::vector<Color>& colors) {
    std::vector<Color> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

/// Smallest t such that some assignment in {1..t}^n is CF, by plain enumeration.
inline int enumerate_cf_number(std::size_t n, const std::vector<std::vector<Index>>& edges) {
    if (n == 0) return 0;
    for (int t = 1;; ++t) {
        std::vector<Color> colors(n, 1);
        while (true) {
            if (naive_hypergraph_cf(edges, colors)) return t;
            std::size_t i = 0;
            while (i < n && colors[i] == t) colors[i++] = 1;
            if (i == n) break;
            ++colors[i];
        }
    }
}

/// Random hypergraph: `edges` random subsets of {0..n-1} with sizes in [1, max_size].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t edges, std::size_t max_size) {
    Hypergraph h(n);
    for (std::size_t e = 0; e < edges; ++e) {
        const std::size_t size = 1 + rng() % std::min(max_size, n);
        std::vector<Index> members;
        for (std::size_t i = 0; i < size; ++i) members.push_back(static_cast<Index>(rng() % n));
        h.add_edge(members);
    }
    return h;
}

inline std::vector<std::vector<Index>> members_of(const Hypergraph& h) {
    std::vector<std::vector<Index>> out;
    for (const auto& e : h.edges) out.push_back(e.members);
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (u(rng) < p) g.add_edge(static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    return g;
}

inline Matrix adjacency_of(const Graph& g) {
    Matrix m(g.vertex_count(), std::vector<char>(g.vertex_count(), 0));
    for (const auto& [u, v] : g.edges()) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    return m;
}

}  // namespace cfgeom::oracle
