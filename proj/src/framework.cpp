#include "cfgeom/framework.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace cfgeom {

namespace {

// Ceil with a little slack so exact powers are not pushed up by rounding.
int safe_ceil(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

Coloring call_colorer(const ProperColorer& pc, const Hypergraph& sub, std::span<const Index> origin) {
    Coloring c = pc.color(sub, origin);
    if (c.size() != sub.n) {
        throw ColorerContractError(pc.name + ": coloring has the wrong number of vertices", sub);
    }
    if (!verify_proper(sub, c)) throw ColorerContractError(pc.name + ": coloring is not proper", sub);
    if (pc.k > 0 && c.palette_size() > static_cast<std::size_t>(pc.k)) {
        throw ColorerContractError(pc.name + ": coloring uses more than k = " + std::to_string(pc.k) + " colors",
                                   sub);
    }
    return c;
}

// Color classes as lists of positions, in order of their smallest member.
std::vector<std::vector<Index>> color_classes(const Coloring& c) {
    std::map<Color, std::size_t> slot;
    std::vector<std::vector<Index>> classes;
    for (std::size_t v = 0; v < c.size(); ++v) {
        auto [it, fresh] = slot.try_emplace(c[v], classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(static_cast<Index>(v));
    }
    return classes;
}

}  // namespace

int cf_palette_bound(std::size_t n, int k) {
    if (n == 0) return 0;
    if (k <= 1) return 1;
    const double base = 1.0 + 1.0 / (k - 1);
    return safe_ceil(1.0 + std::log(static_cast<double>(n)) / std::log(base));
}

int cf_round_bound(std::size_t n, int k) {
    if (n == 0) return 0;
    if (k <= 1) return 1;
    const double base = static_cast<double>(k) / (k - 1);
    return safe_ceil(std::log(static_cast<double>(n)) / std::log(base)) + 1;
}

Coloring proper_to_cf(const Hypergraph& h, const ProperColorer& pc) {
    Coloring out(std::vector<Color>(h.n, 0));
    std::vector<Index> remaining = identity_order(h.n);
    Color round = 0;
    while (!remaining.empty()) {
        ++round;
        const Hypergraph sub = induced(h, remaining);
        const Coloring proper = call_colorer(pc, sub, remaining);
        const auto classes = color_classes(proper);
        // Classes are ordered by smallest member, so the first maximum wins ties.
        const auto best = std::max_element(classes.begin(), classes.end(),
                                           [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<char> taken(remaining.size(), 0);
        for (Index p : *best) {
            taken[static_cast<std::size_t>(p)] = 1;
            out[static_cast<std::size_t>(remaining[static_cast<std::size_t>(p)])] = round;
        }
        std::vector<Index> next;
        next.reserve(remaining.size() - best->size());
        for (std::size_t p = 0; p < remaining.size(); ++p) {
            if (!taken[p]) next.push_back(remaining[p]);
        }
        remaining = std::move(next);
    }
    if (!verify_cf(h, out)) throw VerificationFailure("proper_to_cf produced a coloring that is not CF");
    return out;
}

Coloring proper_to_cf_list(const Hypergraph& h, const ColorLists& input_lists, const ProperColorer& pc) {
    if (input_lists.size() != h.n) throw InvalidArgument("one color list per vertex is required");
    ColorLists lists = input_lists;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        auto& l = lists[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty()) throw ListExhausted("vertex " + std::to_string(v) + " has an empty list", static_cast<Index>(v));
    }
    const double ratio = pc.k > 1 ? static_cast<double>(pc.k) / (pc.k - 1) : 1.0;
    auto weight = [&](Index v) { return std::pow(ratio, -static_cast<double>(lists[static_cast<std::size_t>(v)].size())); };

    Coloring out(std::vector<Color>(h.n, 0));
    std::vector<Index> uncolored = identity_order(h.n);
    while (!uncolored.empty()) {
        std::map<Color, std::size_t> holders;
        for (Index v : uncolored) {
            for (Color c : lists[static_cast<std::size_t>(v)]) ++holders[c];
        }
        Color chosen = holders.begin()->first;
        std::size_t most = 0;
        for (const auto& [c, count] : holders) {
            if (count > most) {
                most = count;
                chosen = c;
            }
        }
        std::vector<Index> holding;
        for (Index v : uncolored) {
            const auto& l = lists[static_cast<std::size_t>(v)];
            if (std::binary_search(l.begin(), l.end(), chosen)) holding.push_back(v);
        }
        const Hypergraph sub = induced(h, holding);
        const Coloring proper = call_colorer(pc, sub, holding);
        const auto classes = color_classes(proper);
        std::size_t best = 0;
        double best_weight = -1.0;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            double w = 0.0;
            for (Index p : classes[i]) w += weight(holding[static_cast<std::size_t>(p)]);
            const bool tie = std::abs(w - best_weight) <= 1e-12 * std::max(w, best_weight);
            if ((!tie && w > best_weight) || (tie && classes[i].size() > classes[best].size())) {
                best = i;
                best_weight = std::max(w, best_weight);
            }
        }
        std::vector<char> frozen(h.n, 0);
        for (Index p : classes[best]) {
            const Index v = holding[static_cast<std::size_t>(p)];
            out[static_cast<std::size_t>(v)] = chosen;
            frozen[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<Index> next;
        for (Index v : uncolored) {
            if (frozen[static_cast<std::size_t>(v)]) continue;
            auto& l = lists[static_cast<std::size_t>(v)];
            l.erase(std::remove(l.begin(), l.end(), chosen), l.end());
            if (l.empty()) {
                throw ListExhausted("list of vertex " + std::to_string(v) + " exhausted before it was colored", v);
            }
            next.push_back(v);
        }
        uncolored = std::move(next);
    }
    for (std::size_t v = 0; v < h.n; ++v) {
        const auto& l = input_lists[v];
        if (std::find(l.begin(), l.end(), out[v]) == l.end())
            throw VerificationFailure("list coloring assigned a color outside the vertex list");
    }
    if (!verify_cf(h, out)) throw VerificationFailure("list coloring is not CF");
    return out;
}

Coloring pointed_to_closed(const Graph& g, const Coloring& pointed) {
    const std::size_t n = g.vertex_count();
    if (pointed.size() != n) throw InvalidArgument("coloring size does not match the graph");
    if (!verify_cf(neighborhood_hypergraph(g, Neighborhood::Pointed), pointed))
        throw InvalidArgument("input coloring is not pointed-CF");

    std::vector<Color> palette = pointed.colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    auto rank = [&](Color c) {
        return static_cast<int>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()) + 1;
    };

    // Components of each color class's induced subgraph.
    std::vector<int> component(n, -1);
    std::vector<std::size_t> component_size;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        const int id = static_cast<int>(component_size.size());
        std::vector<Index> stack{static_cast<Index>(s)};
        component[s] = id;
        std::size_t size = 0;
        while (!stack.empty()) {
            const Index v = stack.back();
            stack.pop_back();
            ++size;
            for (Index u : g.neighbors(v)) {
                if (component[static_cast<std::size_t>(u)] < 0 && pointed[static_cast<std::size_t>(u)] == pointed[static_cast<std::size_t>(v)]) {
                    component[static_cast<std::size_t>(u)] = id;
                    stack.push_back(u);
                }
            }
        }
        component_size.push_back(size);
    }

    Coloring out(std::vector<Color>(n, 0));
    std::vector<char> first_of_pair_seen(component_size.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
        const Color c = pointed[v];
        const int comp = component[v];
        int layer = 1;
        if (component_size[static_cast<std::size_t>(comp)] == 2) {
            // Vertices are visited in index order, so the lower endpoint gets layer 1.
            layer = first_of_pair_seen[static_cast<std::size_t>(comp)] ? 2 : 1;
            first_of_pair_seen[static_cast<std::size_t>(comp)] = 1;
        } else if (component_size[static_cast<std::size_t>(comp)] > 2) {
            std::size_t class_degree = 0;
            for (Index u : g.neighbors(static_cast<Index>(v))) class_degree += pointed[static_cast<std::size_t>(u)] == c;
            layer = class_degree == 1 ? 2 : 1;
        }
        const Color code = encode_pair(rank(c), layer);
        out[v] = code;
        out.palette_map[code] = {c, layer};
    }
    if (!verify_cf(neighborhood_hypergraph(g, Neighborhood::Closed), out))
        throw VerificationFailure("pointed_to_closed produced a coloring that is not closed-CF");
    return out;
}

ProperColorer trivial_colorer() {
    return {[](const Hypergraph& sub, std::span<const Index>) { return Coloring(std::vector<Color>(sub.n, 1)); }, 1,
            "trivial"};
}

}  // namespace cfgeom
