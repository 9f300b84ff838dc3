#include "cfgeom/error.hpp"
#include "cfgeom/generate.hpp"
#include "cfgeom/interval_cf.hpp"
#include "cfgeom/rect_cf.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cfgeom;

namespace {

Scene interval_scene(std::initializer_list<Interval> ivs) {
    std::vector<Shape> s(ivs.begin(), ivs.end());
    return Scene::from_shapes(std::move(s), SceneKind::Intervals);
}

// Intervals with small integer endpoints, so touching and shared endpoints are common.
std::vector<Interval> random_integer_intervals(std::mt19937_64& rng, std::size_t n) {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = static_cast<double>(rng() % 30);
        out.push_back({lo, lo + static_cast<double>(rng() % 8)});
    }
    return out;
}

}  // namespace

TEST(Intervals, Single) {
    const auto r = closed_cf_color_intervals(interval_scene({{0, 10}}));
    EXPECT_EQ(r.coloring.colors, std::vector<Color>({1}));
    EXPECT_EQ(r.chain, std::vector<Index>({0}));
}

TEST(Intervals, ThreeIntervalTrace) {
    const auto r = closed_cf_color_intervals(interval_scene({{0, 2}, {1, 4}, {3, 6}}));
    EXPECT_EQ(r.chain, std::vector<Index>({0, 1, 2}));
    EXPECT_EQ(r.coloring.colors, std::vector<Color>({1, 2, 1}));
}

TEST(Intervals, GapStartsAFreshStep) {
    const auto r = closed_cf_color_intervals(interval_scene({{2, 3}, {0, 1}, {2, 2.5}}));
    EXPECT_EQ(r.chain, std::vector<Index>({1, 0}));
    EXPECT_EQ(r.coloring.colors, std::vector<Color>({2, 1, 3}));
}

TEST(Intervals, TiesGoToSmallestIndex) {
    const auto r = closed_cf_color_intervals(interval_scene({{0, 1}, {0, 2}, {0, 2}}));
    EXPECT_EQ(r.chain, std::vector<Index>({1}));
    EXPECT_EQ(r.coloring.colors, std::vector<Color>({3, 1, 3}));
}

TEST(Intervals, Errors) {
    EXPECT_THROW(closed_cf_color_intervals(Scene{}), InvalidArgument);
    EXPECT_THROW(closed_cf_color_intervals(Scene::from_shapes({Disc{{0, 0}, 1}})), InvalidArgument);
}

TEST(Intervals, RandomFamiliesHoldChainInvariants) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const auto iv = random_integer_intervals(rng, 1 + rng() % 60);
        const auto r = closed_cf_color_intervals(iv);
        EXPECT_LE(r.coloring.palette_size(), 3u);
        EXPECT_TRUE(check_interval_chain(iv, r).empty());
        std::vector<Shape> shapes(iv.begin(), iv.end());
        EXPECT_TRUE(oracle::naive_neighborhood_cf(oracle::naive_adjacency(Scene::from_shapes(shapes)),
                                                   r.coloring.colors, true));
    }
}

TEST(Intervals, GeneratedFamilies) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Scene s = generate_scene(GenKind::Intervals, 200, GenParams{}, seed);
        const auto r = closed_cf_color_intervals(s);
        EXPECT_LE(r.coloring.palette_size(), 3u);
        EXPECT_TRUE(check_interval_chain(intervals_of(s), r).empty());
    }
}

TEST(Intervals, CheckerCatchesABrokenChain) {
    const std::vector<Interval> iv{{0, 2}, {1, 4}, {3, 6}};
    IntervalChainResult fake;
    fake.chain = {0, 2};
    fake.coloring = Coloring({1, 3, 2});
    EXPECT_FALSE(check_interval_chain(iv, fake).empty());
}

TEST(Rects, Single) {
    const auto r = closed_cf_color_rects(Scene::from_shapes({AARect{0, 1, 0, 1}}));
    EXPECT_EQ(r.coloring.palette_size(), 1u);
}

TEST(Rects, SideBySide) {
    const Scene s = Scene::from_shapes({AARect{0, 1, 0, 1}, AARect{2, 3, 0, 1}});
    const auto r = closed_cf_color_rects(s);
    EXPECT_LE(r.max_depth, 1);
    EXPECT_TRUE(check_rect_structure(s, r).empty());
}

TEST(Rects, BoundFormula) {
    EXPECT_EQ(rect_palette_bound(1), 3);
    EXPECT_EQ(rect_palette_bound(256), 27);
    EXPECT_EQ(rect_palette_bound(255), 24);
    EXPECT_EQ(rect_palette_bound(1024), 33);
}

TEST(Rects, RandomFamilies) {
    for (std::size_t n : {16u, 64u, 256u}) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const Scene s = generate_scene(GenKind::Rects, n, GenParams{}, seed);
            const auto r = closed_cf_color_rects(s);
            EXPECT_LE(static_cast<int>(r.coloring.palette_size()), rect_palette_bound(n));
            EXPECT_TRUE(check_rect_structure(s, r).empty());
            EXPECT_TRUE(oracle::naive_neighborhood_cf(oracle::naive_adjacency(s), r.coloring.colors, true));
            for (std::size_t v = 0; v < n; ++v) {
                EXPECT_GE(r.coloring[v], 3 * r.depth[v] + 1);
                EXPECT_LE(r.coloring[v], 3 * r.depth[v] + 3);
            }
        }
    }
}

TEST(Rects, SharedCoordinates) {
    // Integer grid rectangles: many touch the splitting lines exactly.
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Shape> shapes;
        const std::size_t n = 1 + rng() % 50;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = static_cast<double>(rng() % 20);
            const double y = static_cast<double>(rng() % 20);
            shapes.emplace_back(AARect{x, x + static_cast<double>(rng() % 5), y, y + static_cast<double>(rng() % 5)});
        }
        const Scene s = Scene::from_shapes(shapes);
        const auto r = closed_cf_color_rects(s);
        EXPECT_TRUE(check_rect_structure(s, r).empty());
        EXPECT_LE(static_cast<int>(r.coloring.palette_size()), rect_palette_bound(n));
        EXPECT_TRUE(oracle::naive_neighborhood_cf(oracle::naive_adjacency(s), r.coloring.colors, true));
    }
}
