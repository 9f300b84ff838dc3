#include "cfgeom/interval_cf.hpp"

#include "cfgeom/error.hpp"

#include <algorithm>
#include <numeric>

namespace cfgeom {

std::vector<Interval> intervals_of(const Scene& scene) {
    std::vector<Interval> out;
    out.reserve(scene.size());
    for (const auto& s : scene.shapes) {
        const auto* iv = std::get_if<Interval>(&s);
        if (!iv) throw InvalidArgument("expected a scene of intervals");
        out.push_back(*iv);
    }
    return out;
}

IntervalChainResult closed_cf_color_intervals(const Scene& intervals) {
    return closed_cf_color_intervals(intervals_of(intervals));
}

IntervalChainResult closed_cf_color_intervals(const std::vector<Interval>& iv) {
    if (iv.empty()) throw InvalidArgument("interval family is empty");
    for (const auto& i : iv) {
        if (!(i.lo <= i.hi)) throw InvalidArgument("interval with lo > hi");
    }
    const std::size_t n = iv.size();
    std::vector<Index> by_left(n);
    std::iota(by_left.begin(), by_left.end(), 0);
    std::sort(by_left.begin(), by_left.end(), [&](Index a, Index b) {
        return iv[a].lo < iv[b].lo || (iv[a].lo == iv[b].lo && a < b);
    });

    // Reach-furthest among a run of candidates, ties to the smallest index.
    auto better = [&](Index cand, Index best) {
        return best < 0 || iv[cand].hi > iv[best].hi || (iv[cand].hi == iv[best].hi && cand < best);
    };

    IntervalChainResult result;
    std::size_t p = 0;
    // S_1: the intervals sharing the minimum left endpoint.
    Index s = -1;
    const double first_lo = iv[by_left[0]].lo;
    while (p < n && iv[by_left[p]].lo == first_lo) {
        if (better(by_left[p], s)) s = by_left[p];
        ++p;
    }
    result.chain.push_back(s);
    while (true) {
        const double r = iv[s].hi;
        Index next = -1;
        // Clause 1: start at or before r(s_i), end after it.
        while (p < n && iv[by_left[p]].lo <= r) {
            const Index c = by_left[p];
            if (iv[c].hi > r && better(c, next)) next = c;
            ++p;
        }
        if (next < 0) {
            if (p == n) break;
            // Clause 2: nothing crosses r(s_i); jump to the leftmost start beyond it.
            const double lo = iv[by_left[p]].lo;
            while (p < n && iv[by_left[p]].lo == lo) {
                if (better(by_left[p], next)) next = by_left[p];
                ++p;
            }
        }
        result.chain.push_back(next);
        s = next;
    }

    result.coloring = Coloring(std::vector<Color>(n, 3));
    for (std::size_t i = 0; i < result.chain.size(); ++i)
        result.coloring[static_cast<std::size_t>(result.chain[i])] = i % 2 == 0 ? 1 : 2;

    std::vector<Shape> shapes(iv.begin(), iv.end());
    const Graph g = intersection_graph(Scene::from_shapes(std::move(shapes)));
    if (!verify_cf(neighborhood_hypergraph(g, Neighborhood::Closed), result.coloring))
        throw VerificationFailure("interval coloring is not closed-CF");
    return result;
}

std::vector<std::string> check_interval_chain(const std::vector<Interval>& iv, const IntervalChainResult& result) {
    std::vector<std::string> failures;
    const auto& chain = result.chain;
    auto at = [&](std::size_t i) { return iv[static_cast<std::size_t>(chain[i])]; };
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = i + 2; j < chain.size(); ++j) {
            if (intersects(at(i), at(j)))
                failures.push_back("chain members " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
        if (i > 0 && !(at(i).hi > at(i - 1).hi))
            failures.push_back("right endpoints do not increase at chain position " + std::to_string(i));
    }

    // Union coverage, checked at every endpoint and every midpoint between consecutive endpoints.
    std::vector<double> xs;
    for (const auto& i : iv) {
        xs.push_back(i.lo);
        xs.push_back(i.hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> probes = xs;
    for (std::size_t i = 1; i < xs.size(); ++i) probes.push_back((xs[i - 1] + xs[i]) / 2.0);
    for (double x : probes) {
        auto covers = [x](const Interval& i) { return i.lo <= x && x <= i.hi; };
        const bool in_family = std::any_of(iv.begin(), iv.end(), covers);
        const bool in_chain = std::any_of(chain.begin(), chain.end(),
                                          [&](Index c) { return covers(iv[static_cast<std::size_t>(c)]); });
        if (in_family != in_chain) {
            failures.push_back("chain union differs from the family union at x = " + std::to_string(x));
            break;
        }
    }

    for (std::size_t v = 0; v < iv.size(); ++v) {
        for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
            if (intersects(iv[v], at(i)) && intersects(iv[v], at(i + 2)) && !intersects(iv[v], at(i + 1)))
                failures.push_back("interval " + std::to_string(v) + " skips chain member " + std::to_string(i + 1));
        }
        if (result.coloring[v] != 3) continue;
        int ones = 0;
        int twos = 0;
        for (std::size_t u = 0; u < iv.size(); ++u) {
            if (u == v || !intersects(iv[v], iv[u])) continue;
            ones += result.coloring[u] == 1;
            twos += result.coloring[u] == 2;
        }
        if (ones >= 2 && twos >= 2)
            failures.push_back("color-3 interval " + std::to_string(v) + " meets two of color 1 and two of color 2");
    }
    return failures;
}

}  // namespace cfgeom
