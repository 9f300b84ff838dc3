#include "cfgeom/rect_cf.hpp"

#include "cfgeom/error.hpp"
#include "cfgeom/interval_cf.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace cfgeom {

namespace {

std::vector<AARect> rects_of(const Scene& scene) {
    std::vector<AARect> out;
    out.reserve(scene.size());
    for (const auto& s : scene.shapes) {
        const auto* r = std::get_if<AARect>(&s);
        if (!r) throw InvalidArgument("expected a scene of rectangles");
        if (!(r->xmin <= r->xmax && r->ymin <= r->ymax)) throw InvalidArgument("rectangle with min > max");
        out.push_back(*r);
    }
    return out;
}

double x_center(const AARect& r) { return (r.xmin + r.xmax) / 2.0; }

class RectSplitter {
public:
    RectSplitter(const std::vector<AARect>& rects, RectColoringResult& out) : rects_(rects), out_(out) {}

    void run(std::vector<Index> ids, int depth) {
        if (ids.empty()) return;
        const int node = next_node_++;
        out_.max_depth = std::max(out_.max_depth, depth);
        std::sort(ids.begin(), ids.end(), [&](Index a, Index b) {
            const double ca = x_center(rects_[a]);
            const double cb = x_center(rects_[b]);
            return ca < cb || (ca == cb && a < b);
        });
        const double line = x_center(rects_[ids[(ids.size() - 1) / 2]]);
        std::vector<Index> left;
        std::vector<Index> right;
        std::vector<Index> stabbed;
        for (Index i : ids) {
            const AARect& r = rects_[i];
            if (r.xmax < line) {
                left.push_back(i);
            } else if (r.xmin > line) {
                right.push_back(i);
            } else {
                stabbed.push_back(i);
            }
        }
        std::sort(stabbed.begin(), stabbed.end());
        std::vector<Interval> ys;
        ys.reserve(stabbed.size());
        for (Index i : stabbed) ys.push_back({rects_[i].ymin, rects_[i].ymax});
        const IntervalChainResult chain = closed_cf_color_intervals(ys);
        for (std::size_t k = 0; k < stabbed.size(); ++k) {
            const auto v = static_cast<std::size_t>(stabbed[k]);
            out_.coloring[v] = 3 * depth + chain.coloring[k];
            out_.depth[v] = depth;
            out_.node[v] = node;
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        run(std::move(left), depth + 1);
        run(std::move(right), depth + 1);
    }

private:
    const std::vector<AARect>& rects_;
    RectColoringResult& out_;
    int next_node_ = 0;
};

}  // namespace

int rect_palette_bound(std::size_t n) {
    if (n == 0) return 0;
    return 3 * static_cast<int>(std::bit_width(n));
}

RectColoringResult closed_cf_color_rects(const Scene& scene) {
    const std::vector<AARect> rects = rects_of(scene);
    if (rects.empty()) throw InvalidArgument("rectangle family is empty");
    const std::size_t n = rects.size();
    RectColoringResult result;
    result.coloring = Coloring(std::vector<Color>(n, 0));
    result.depth.assign(n, -1);
    result.node.assign(n, -1);
    RectSplitter(rects, result).run(identity_order(n), 0);
    if (!verify_cf(neighborhood_hypergraph(intersection_graph(scene), Neighborhood::Closed), result.coloring))
        throw VerificationFailure("rectangle coloring is not closed-CF");
    return result;
}

std::vector<std::string> check_rect_structure(const Scene& scene, const RectColoringResult& result) {
    std::vector<std::string> failures;
    const std::vector<AARect> rects = rects_of(scene);
    const std::size_t n = rects.size();
    if (result.max_depth + 1 > static_cast<int>(std::bit_width(n)))
        failures.push_back("recursion depth " + std::to_string(result.max_depth) + " exceeds floor(log2 n)");

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (result.depth[a] == result.depth[b] && result.node[a] != result.node[b] &&
                intersects(rects[a], rects[b])) {
                failures.push_back("rectangles " + std::to_string(a) + " and " + std::to_string(b) +
                                   " share a depth, sit in different nodes, and intersect");
            }
        }
    }

    std::map<int, std::vector<Index>> by_node;
    for (std::size_t v = 0; v < n; ++v) by_node[result.node[v]].push_back(static_cast<Index>(v));
    for (const auto& [node, members] : by_node) {
        std::vector<Shape> as_rects;
        std::vector<Shape> as_intervals;
        for (Index v : members) {
            as_rects.emplace_back(rects[static_cast<std::size_t>(v)]);
            as_intervals.emplace_back(Interval{rects[static_cast<std::size_t>(v)].ymin, rects[static_cast<std::size_t>(v)].ymax});
        }
        if (intersection_graph(Scene::from_shapes(as_rects)).edges() !=
            intersection_graph(Scene::from_shapes(as_intervals)).edges()) {
            failures.push_back("stabbed family of node " + std::to_string(node) +
                               " differs from the intersection graph of its y-intervals");
        }
    }
    return failures;
}

}  // namespace cfgeom
