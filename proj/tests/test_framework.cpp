#include "cfgeom/framework.hpp"
#include "cfgeom/generate.hpp"
#include "cfgeom/probe_cf.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cfgeom;

namespace {

// Hyperedges are the runs of consecutive points on a line; `position[v]` is v's place.
Hypergraph interval_hypergraph(const std::vector<int>& position, std::mt19937_64& rng, std::size_t edges) {
    const std::size_t n = position.size();
    std::vector<Index> at(n);
    for (std::size_t v = 0; v < n; ++v) at[static_cast<std::size_t>(position[v])] = static_cast<Index>(v);
    Hypergraph h(n);
    for (std::size_t e = 0; e < edges; ++e) {
        std::size_t a = rng() % n;
        std::size_t b = rng() % n;
        if (a > b) std::swap(a, b);
        h.add_edge(std::vector<Index>(at.begin() + static_cast<long>(a), at.begin() + static_cast<long>(b) + 1));
    }
    return h;
}

Hypergraph all_runs(std::size_t n) {
    Hypergraph h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::vector<Index> run(j - i + 1);
            std::iota(run.begin(), run.end(), static_cast<Index>(i));
            h.add_edge(run);
        }
    }
    return h;
}

// Alternates 1, 2 along the line order of the surviving vertices; proper for every run.
ProperColorer alternating(const std::vector<int>& position) {
    return {[position](const Hypergraph& sub, std::span<const Index> origin) {
                std::vector<Index> order(sub.n);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](Index a, Index b) {
                    return position[static_cast<std::size_t>(origin[a])] < position[static_cast<std::size_t>(origin[b])];
                });
                Coloring c(std::vector<Color>(sub.n, 0));
                for (std::size_t i = 0; i < order.size(); ++i) c[static_cast<std::size_t>(order[i])] = 1 + static_cast<Color>(i % 2);
                return c;
            },
            2, "alternating"};
}

std::vector<int> identity_positions(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

TEST(Bounds, Formula) {
    EXPECT_EQ(cf_palette_bound(100, 6), 27);
    EXPECT_EQ(cf_palette_bound(8, 2), 4);
    EXPECT_EQ(cf_palette_bound(1, 6), 1);
    EXPECT_EQ(cf_palette_bound(0, 6), 0);
    EXPECT_EQ(cf_palette_bound(64, 6), 24);
    EXPECT_EQ(cf_palette_bound(10, 1), 1);
}

TEST(ProperToCf, NoEdgesIsOneRound) {
    const Coloring c = proper_to_cf(Hypergraph(5), trivial_colorer());
    EXPECT_EQ(c.colors, std::vector<Color>(5, 1));
}

TEST(ProperToCf, FourCollinearPointsTrace) {
    const Coloring c = proper_to_cf(all_runs(4), alternating(identity_positions(4)));
    EXPECT_EQ(c.colors, std::vector<Color>({1, 2, 1, 3}));
}

TEST(ProperToCf, RejectsBrokenColorers) {
    Hypergraph h(3);
    h.add_edge({0, 1});
    EXPECT_THROW(proper_to_cf(h, trivial_colorer()), ColorerContractError);
    const ProperColorer wrong_size{[](const Hypergraph&, std::span<const Index>) { return Coloring({1}); }, 2, "short"};
    EXPECT_THROW(proper_to_cf(h, wrong_size), ColorerContractError);
    const ProperColorer too_many{[](const Hypergraph& s, std::span<const Index>) {
                                     std::vector<Color> c(s.n);
                                     std::iota(c.begin(), c.end(), 1);
                                     return Coloring(c);
                                 },
                                 2, "rainbow"};
    EXPECT_THROW(proper_to_cf(h, too_many), ColorerContractError);
}

TEST(ProperToCf, RandomIntervalHypergraphsStayWithinBound) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        std::vector<int> position = identity_positions(n);
        std::shuffle(position.begin(), position.end(), rng);
        const Hypergraph h = interval_hypergraph(position, rng, 1 + rng() % 60);
        const Coloring c = proper_to_cf(h, alternating(position));
        EXPECT_TRUE(oracle::naive_hypergraph_cf(oracle::members_of(h), c.colors));
        EXPECT_LE(static_cast<int>(c.palette_size()), cf_palette_bound(n, 2));
    }
}

TEST(ProperToCfList, SingleVertex) {
    const Coloring c = proper_to_cf_list(Hypergraph(1), {{7}}, trivial_colorer());
    EXPECT_EQ(c.colors, std::vector<Color>({7}));
}

TEST(ProperToCfList, FourCollinearPoints) {
    const ColorLists lists{{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}};
    const Hypergraph h = all_runs(4);
    const Coloring c = proper_to_cf_list(h, lists, alternating(identity_positions(4)));
    for (std::size_t v = 0; v < 4; ++v)
        EXPECT_NE(std::find(lists[v].begin(), lists[v].end(), c[v]), lists[v].end());
    EXPECT_TRUE(oracle::naive_hypergraph_cf(oracle::members_of(h), c.colors));
}

TEST(ProperToCfList, IdenticalListsMatchPlainIteration) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<int> position = identity_positions(n);
        std::shuffle(position.begin(), position.end(), rng);
        const Hypergraph h = interval_hypergraph(position, rng, 1 + rng() % 40);
        const int m = cf_palette_bound(n, 2);
        std::vector<Color> palette(static_cast<std::size_t>(m));
        std::iota(palette.begin(), palette.end(), 1);
        const Coloring listed = proper_to_cf_list(h, ColorLists(n, palette), alternating(position));
        const Coloring plain = proper_to_cf(h, alternating(position));
        EXPECT_EQ(listed.colors, plain.colors);
    }
}

TEST(ProperToCfList, RandomListsOfBoundSize) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        std::vector<int> position = identity_positions(n);
        std::shuffle(position.begin(), position.end(), rng);
        const Hypergraph h = interval_hypergraph(position, rng, 1 + rng() % 60);
        const auto size = static_cast<std::size_t>(cf_palette_bound(n, 2));
        ColorLists lists(n);
        for (auto& l : lists) {
            std::vector<Color> pool(3 * size);
            std::iota(pool.begin(), pool.end(), 1);
            std::shuffle(pool.begin(), pool.end(), rng);
            l.assign(pool.begin(), pool.begin() + static_cast<long>(size));
        }
        const Coloring c = proper_to_cf_list(h, lists, alternating(position));
        for (std::size_t v = 0; v < n; ++v)
            EXPECT_NE(std::find(lists[v].begin(), lists[v].end(), c[v]), lists[v].end());
        EXPECT_TRUE(oracle::naive_hypergraph_cf(oracle::members_of(h), c.colors));
    }
}

TEST(ProperToCfList, ShortListsCanRunOut) {
    // Every pair and the whole triple must be CF, which needs three distinct colors.
    Hypergraph h(3);
    h.add_edge({0, 1});
    h.add_edge({1, 2});
    h.add_edge({0, 2});
    const ProperColorer rainbow{[](const Hypergraph& s, std::span<const Index>) {
                                    std::vector<Color> c(s.n);
                                    std::iota(c.begin(), c.end(), 1);
                                    return Coloring(c);
                                },
                                3, "rainbow"};
    EXPECT_THROW(proper_to_cf_list(h, {{1}, {1}, {1}}, rainbow), ListExhausted);
    EXPECT_THROW(proper_to_cf_list(h, {{1}, {}, {1}}, rainbow), ListExhausted);
}

TEST(PointedToClosed, KTwoSplits) {
    Graph g(2);
    g.add_edge(0, 1);
    const Coloring c = pointed_to_closed(g, Coloring({1, 1}));
    EXPECT_EQ(c.palette_map.at(c[0]), std::make_pair(1, 1));
    EXPECT_EQ(c.palette_map.at(c[1]), std::make_pair(1, 2));
    EXPECT_NE(c[0], c[1]);
}

TEST(PointedToClosed, IndependentClassesKeepOneLayer) {
    // Star with center 1; the leaves 0 and 2 share color 1 but are not adjacent.
    Graph g(4);
    g.add_edge(1, 0);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    const Coloring c = pointed_to_closed(g, Coloring({1, 2, 1, 3}));
    EXPECT_EQ(c.palette_map.at(c[0]), std::make_pair(1, 1));
    EXPECT_EQ(c.palette_map.at(c[1]), std::make_pair(2, 1));
    EXPECT_EQ(c.palette_map.at(c[3]), std::make_pair(3, 1));
    EXPECT_EQ(c[0], c[2]);
    EXPECT_EQ(c.palette_size(), 3u);
}

TEST(PointedToClosed, PathOneTwoOneIsNotPointedCf) {
    // N(1) = {0, 2} is monochromatic under (1, 2, 1).
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_THROW(pointed_to_closed(g, Coloring({1, 2, 1})), InvalidArgument);
    const Coloring c = pointed_to_closed(g, Coloring({1, 1, 2}));
    EXPECT_EQ(c.palette_map.at(c[0]), std::make_pair(1, 1));
    EXPECT_EQ(c.palette_map.at(c[1]), std::make_pair(1, 2));
    EXPECT_EQ(c.palette_map.at(c[2]), std::make_pair(2, 1));
}

TEST(PointedToClosed, RandomGraphsAgainstOracle) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = oracle::random_graph(rng, n, 0.35);
        const OracleResult pointed = min_cf_colors_bruteforce(neighborhood_hypergraph(g, Neighborhood::Pointed), 10);
        ASSERT_TRUE(pointed.min_colors);
        const Coloring closed = pointed_to_closed(g, pointed.witness);
        EXPECT_TRUE(oracle::naive_neighborhood_cf(oracle::adjacency_of(g), closed.colors, true));
        EXPECT_LE(closed.palette_size(), 2 * pointed.witness.palette_size());
    }
}
