#include "cfgeom/generate.hpp"

#include "cfgeom/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cfgeom {

namespace {

constexpr int kMaxAttempts = 10000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void check_params(const GenParams& p) {
    if (!(p.coord_max > p.coord_min)) throw InvalidArgument("empty coordinate range");
    if (!(p.margin >= 0.0)) throw InvalidArgument("margin must be non-negative");
}

bool far_from_all(const std::vector<double>& taken, double v, double delta) {
    return std::none_of(taken.begin(), taken.end(), [&](double t) { return std::abs(t - v) <= delta; });
}

Scene gen_discs(std::size_t n, const GenParams& p, Rng& rng) {
    if (!(p.radius_max >= p.radius_min) || p.radius_min < 0.0) throw InvalidArgument("bad radius range");
    const double delta = p.margin * (p.coord_max - p.coord_min);
    std::vector<Shape> shapes;
    std::vector<Disc> discs;
    while (discs.size() < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            Disc d{Point(rng.uniform(p.coord_min, p.coord_max), rng.uniform(p.coord_min, p.coord_max)),
                   rng.uniform(p.radius_min, p.radius_max)};
            placed = std::all_of(discs.begin(), discs.end(), [&](const Disc& o) {
                const double dist = (o.center - d.center).norm();
                return std::abs(dist - (o.radius + d.radius)) > delta &&
                       std::abs(dist - std::abs(o.radius - d.radius)) > delta;
            });
            if (placed) discs.push_back(d);
        }
        if (!placed) throw InvalidArgument("could not place disc within the non-degeneracy margin");
    }
    for (const auto& d : discs) shapes.emplace_back(d);
    return Scene::from_shapes(std::move(shapes), SceneKind::Discs);
}

// Returns [lo, hi] inside the coordinate range with both endpoints away from `taken`.
std::pair<double, double> gen_span(const GenParams& p, Rng& rng, const std::vector<double>& taken) {
    const double span = p.coord_max - p.coord_min;
    const double delta = p.margin * span;
    if (!(p.length_max >= p.length_min) || p.length_min < 0.0 || p.length_max > 1.0)
        throw InvalidArgument("bad length range");
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const double len = span * rng.uniform(p.length_min, p.length_max);
        const double lo = rng.uniform(p.coord_min, p.coord_max - len);
        const double hi = lo + len;
        if (hi - lo > delta && far_from_all(taken, lo, delta) && far_from_all(taken, hi, delta))
            return {lo, hi};
    }
    throw InvalidArgument("could not place endpoints within the non-degeneracy margin");
}

Scene gen_intervals(std::size_t n, const GenParams& p, Rng& rng) {
    std::vector<double> taken;
    std::vector<Shape> shapes;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [lo, hi] = gen_span(p, rng, taken);
        taken.push_back(lo);
        taken.push_back(hi);
        shapes.emplace_back(Interval{lo, hi});
    }
    return Scene::from_shapes(std::move(shapes), SceneKind::Intervals);
}

Scene gen_rects(std::size_t n, const GenParams& p, Rng& rng) {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<Shape> shapes;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x0, x1] = gen_span(p, rng, xs);
        const auto [y0, y1] = gen_span(p, rng, ys);
        xs.insert(xs.end(), {x0, x1});
        ys.insert(ys.end(), {y0, y1});
        shapes.emplace_back(AARect{x0, x1, y0, y1});
    }
    return Scene::from_shapes(std::move(shapes), SceneKind::Rects);
}

double sample_size(const GenParams& p, Rng& rng) {
    // Log-uniform so that every dyadic size class gets populated.
    return p.min_size * std::exp(rng.uniform() * std::log(p.k));
}

// Convex polygon about the origin with r_outer / r_inner <= rho, returned in unit outer scale.
std::vector<Point> sample_convex_polygon(double rho, Rng& rng) {
    const double q = std::sqrt(rho);
    int m = 5;
    while (m < 256 && 1.0 / std::cos(1.2 * M_PI / m) > q) ++m;
    const double r_lo = std::max(1.0 / q, std::cos(M_PI / m));
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Point> poly;
        poly.reserve(m);
        for (int j = 0; j < m; ++j) {
            const double theta = 2.0 * M_PI * (j + 0.2 * (rng.uniform() - 0.5)) / m;
            const double r = rng.uniform(r_lo, 1.0);
            poly.emplace_back(r * std::cos(theta), r * std::sin(theta));
        }
        ConvexFatObject probe{poly, Point(0.0, 0.0), 0.0, 0.0};
        const double r_in = inner_radius_about(poly, Point(0.0, 0.0));
        double r_out = 0.0;
        for (const auto& v : poly) r_out = std::max(r_out, v.norm());
        probe.r_inner = r_in;
        probe.r_outer = r_out;
        if (r_in > 0.0 && r_out / r_in <= rho && certificate_valid(probe)) return poly;
    }
    throw InvalidArgument("could not sample a convex polygon for the requested fatness");
}

ConvexFatObject place(const std::vector<Point>& unit, double size, const Point& anchor) {
    const double r_in = inner_radius_about(unit, Point(0.0, 0.0));
    const double scale = size / r_in;
    ConvexFatObject obj;
    obj.anchor = anchor;
    obj.vertices.reserve(unit.size());
    double r_out = 0.0;
    for (const auto& v : unit) {
        obj.vertices.push_back(anchor + scale * v);
        r_out = std::max(r_out, scale * v.norm());
    }
    // Recompute from the placed coordinates so rounding cannot break the certificate.
    obj.r_inner = std::min(size, inner_radius_about(obj.vertices, anchor));
    double placed_out = 0.0;
    for (const auto& v : obj.vertices) placed_out = std::max(placed_out, (v - anchor).norm());
    obj.r_outer = std::max(r_out, placed_out);
    return obj;
}

void check_fat_params(const GenParams& p) {
    if (!(p.rho >= 1.0)) throw InvalidArgument("rho must be >= 1");
    if (!(p.k >= 1.0)) throw InvalidArgument("size ratio k must be >= 1");
    if (!(p.min_size > 0.0)) throw InvalidArgument("min_size must be positive");
}

Scene gen_fat(std::size_t n, const GenParams& p, Rng& rng) {
    check_fat_params(p);
    std::vector<Shape> shapes;
    for (std::size_t i = 0; i < n; ++i) {
        const double size = sample_size(p, rng);
        const Point anchor(rng.uniform(p.coord_min, p.coord_max), rng.uniform(p.coord_min, p.coord_max));
        if (p.rho == 1.0) {
            shapes.emplace_back(Disc{anchor, size});
        } else {
            shapes.emplace_back(place(sample_convex_polygon(p.rho, rng), size, anchor));
        }
    }
    return Scene::from_shapes(std::move(shapes), p.rho == 1.0 ? SceneKind::Discs : SceneKind::Fat);
}

const std::vector<Point>& pentagon() {
    static const std::vector<Point> shape = {Point(1.0, 0.0), Point(0.35, 0.95), Point(-0.8, 0.65),
                                             Point(-0.9, -0.45), Point(0.25, -0.95)};
    return shape;
}

Scene gen_pentagons(std::size_t n, const GenParams& p, Rng& rng) {
    check_fat_params(p);
    std::vector<Shape> shapes;
    while (shapes.size() < n) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            const double size = sample_size(p, rng);
            const Point anchor(rng.uniform(p.coord_min, p.coord_max),
                               rng.uniform(p.coord_min, p.coord_max));
            Shape candidate = place(pentagon(), size, anchor);
            try {
                for (const auto& other : shapes) boundary_crossings(candidate, other);
                placed = true;
            } catch (const DegenerateGeometry&) {
                placed = false;
            }
            if (placed) shapes.push_back(std::move(candidate));
        }
        if (!placed) throw InvalidArgument("could not place pentagon in general position");
    }
    return Scene::from_shapes(std::move(shapes), SceneKind::Fat);
}

}  // namespace

GenKind gen_kind_from_string(std::string_view name) {
    if (name == "discs") return GenKind::Discs;
    if (name == "intervals") return GenKind::Intervals;
    if (name == "rects") return GenKind::Rects;
    if (name == "fat") return GenKind::Fat;
    if (name == "pentagons") return GenKind::Pentagons;
    throw InvalidArgument("unknown generator kind '" + std::string(name) + "'");
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(splitmix64(splitmix64(a) ^ b) ^ c);
}

Scene generate_scene(GenKind kind, std::size_t n, const GenParams& params, std::uint64_t seed) {
    check_params(params);
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(kind)));
    switch (kind) {
        case GenKind::Discs: return gen_discs(n, params, rng);
        case GenKind::Intervals: return gen_intervals(n, params, rng);
        case GenKind::Rects: return gen_rects(n, params, rng);
        case GenKind::Fat: return gen_fat(n, params, rng);
        case GenKind::Pentagons: return gen_pentagons(n, params, rng);
    }
    throw InvalidArgument("unknown generator kind");
}

Scene generate_lower_bound_family(std::size_t n, double spacing) {
    if (n < 1) throw InvalidArgument("lower-bound family needs n >= 1");
    if (!(spacing > 0.0) || !(static_cast<double>(n - 1) * spacing < 2.0))
        throw InvalidArgument("spacing must satisfy 0 < spacing and (n - 1) * spacing < 2");
    std::vector<Shape> shapes;
    shapes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) shapes.emplace_back(Disc{Point(i * spacing, 0.0), 1.0});
    return Scene::from_shapes(std::move(shapes), SceneKind::Discs);
}

std::vector<CellWitness> lower_bound_cell_witnesses(std::size_t n, double spacing) {
    generate_lower_bound_family(n, spacing);  // validates
    // A point at height y sees exactly the centres within sqrt(1 - y^2) of its abscissa.
    std::vector<CellWitness> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double half_width = std::min(1.0, static_cast<double>(j - i + 1) * spacing / 2.0);
            const double x = static_cast<double>(i + j) * spacing / 2.0;
            const double y = std::sqrt(std::max(0.0, 1.0 - half_width * half_width));
            out.push_back({i, j, Point(x, y)});
        }
    }
    return out;
}

Scene lower_bound_probes(std::size_t n, double spacing, double probe_radius) {
    const Scene family = generate_lower_bound_family(n, spacing);
    std::vector<Shape> probes;
    for (const auto& w : lower_bound_cell_witnesses(n, spacing)) {
        double r = probe_radius;
        for (;;) {
            const Disc probe{w.point, r};
            bool exact = true;
            for (std::size_t c = 0; c < n && exact; ++c) {
                const bool inside_run = c >= w.first && c <= w.last;
                exact = intersects(std::get<Disc>(family[c]), probe) == inside_run;
            }
            if (exact) {
                probes.emplace_back(probe);
                break;
            }
            if (r == 0.0) throw DegenerateGeometry("cell witness is not interior");
            r = r > 1e-15 ? r / 2.0 : 0.0;
        }
    }
    return Scene::from_shapes(std::move(probes), SceneKind::Discs);
}

Scene generate_probe_discs(std::size_t count, double lo, double hi, double rmin, double rmax,
                           std::uint64_t seed) {
    if (!(hi > lo) || !(rmax >= rmin) || rmin < 0.0) throw InvalidArgument("bad probe ranges");
    Rng rng(mix_seed(seed, 0x70726f6265ULL));
    std::vector<Shape> probes;
    probes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Point c(rng.uniform(lo, hi), rng.uniform(lo, hi));
        probes.emplace_back(Disc{c, rng.uniform(rmin, rmax)});
    }
    return Scene::from_shapes(std::move(probes), SceneKind::Discs);
}

}  // namespace cfgeom
