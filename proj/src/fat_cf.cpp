#include "cfgeom/fat_cf.hpp"

#include "cfgeom/error.hpp"
#include "cfgeom/framework.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace cfgeom {

namespace {

constexpr double kTolerance = 1e-9;

std::vector<FatCertificate> certificates(const Scene& objs) {
    std::vector<FatCertificate> out;
    out.reserve(objs.size());
    for (const auto& s : objs.shapes) out.push_back(fat_certificate(s));
    return out;
}

int grid_modulus(double rho, double k) {
    return static_cast<int>(std::ceil(4.0 * k * std::ceil(rho - kTolerance) - kTolerance)) + 1;
}

long long positive_mod(long long a, long long m) { return ((a % m) + m) % m; }

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace

FatParameters fat_parameters(const Scene& objs) {
    FatParameters p;
    if (objs.empty()) return p;
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (const auto& c : certificates(objs)) {
        p.rho = std::max(p.rho, c.r_outer / c.r_inner);
        lo = first ? c.r_inner : std::min(lo, c.r_inner);
        hi = first ? c.r_inner : std::max(hi, c.r_inner);
        first = false;
    }
    p.k = hi / lo;
    return p;
}

long long fat_pointed_bound(double rho, double k) {
    const long long m = grid_modulus(rho, k);
    return 2 * m * m + 1;
}

long long fat_closed_bound(double rho, double k) {
    const long long buckets = static_cast<long long>(std::floor(std::log2(k) + kTolerance)) + 1;
    const long long m = 8 * static_cast<long long>(std::ceil(rho - kTolerance)) + 1;
    return buckets * 2 * (2 * m * m + 1);
}

FatPointedResult pointed_cf_color_fat(const Scene& objs, double rho, double k) {
    if (!(rho >= 1.0) || !(k >= 1.0)) throw InvalidArgument("rho and k must be at least 1");
    const std::size_t n = objs.size();
    FatPointedResult result;
    const int m = grid_modulus(rho, k);
    result.t = m * m;
    result.coloring = Coloring(std::vector<Color>(n, encode_pair(result.t + 1, 1)));
    result.cell_color.assign(n, 0);
    result.representative.assign(n, 0);
    if (n == 0) return result;

    const auto certs = certificates(objs);
    double min_size = certs.front().r_inner;
    double max_size = min_size;
    for (const auto& c : certs) {
        if (c.r_outer / c.r_inner > rho * (1.0 + kTolerance))
            throw InvalidArgument("object fatness exceeds the declared rho");
        min_size = std::min(min_size, c.r_inner);
        max_size = std::max(max_size, c.r_inner);
    }
    if (max_size / min_size > k * (1.0 + kTolerance)) throw InvalidArgument("size ratio exceeds the declared k");

    // Anchors in cell units, with the origin shifted until none sits on a grid line.
    std::vector<Point> scaled;
    scaled.reserve(n);
    for (const auto& c : certs) scaled.emplace_back(c.anchor / min_size);
    double shift = 0.0;
    auto on_line = [&](const Point& p) { return near_integer(p.x() - shift) || near_integer(p.y() - shift); };
    for (int attempt = 0; std::any_of(scaled.begin(), scaled.end(), on_line); ++attempt) {
        if (attempt > 40) throw DegenerateGeometry("could not move the grid off the anchors");
        shift = shift == 0.0 ? 0x1.0p-20 : 2.0 * shift;
    }
    result.grid_shift = shift;

    std::map<std::pair<long long, long long>, Index> rep_of_cell;
    for (std::size_t v = 0; v < n; ++v) {
        const long long cx = static_cast<long long>(std::floor(scaled[v].x() - shift));
        const long long cy = static_cast<long long>(std::floor(scaled[v].y() - shift));
        result.cell_color[v] = static_cast<int>(positive_mod(cx, m) * m + positive_mod(cy, m)) + 1;
        rep_of_cell.try_emplace({cx, cy}, static_cast<Index>(v));  // visited in index order
    }
    for (const auto& [cell, v] : rep_of_cell) {
        result.representative[static_cast<std::size_t>(v)] = 1;
        result.coloring[static_cast<std::size_t>(v)] = encode_pair(result.cell_color[static_cast<std::size_t>(v)], 1);
    }

    const Graph g = intersection_graph(objs);
    const Color spare = encode_pair(result.t + 1, 1);
    for (std::size_t v = 0; v < n; ++v) {
        if (!result.representative[v]) continue;
        const auto nb = g.neighbors(static_cast<Index>(v));
        if (nb.empty()) continue;
        const bool sees_rep = std::any_of(nb.begin(), nb.end(),
                                          [&](Index u) { return result.representative[static_cast<std::size_t>(u)] != 0; });
        if (sees_rep) continue;
        const auto pick = std::find_if(nb.begin(), nb.end(),
                                       [&](Index u) { return result.coloring[static_cast<std::size_t>(u)] == spare; });
        if (pick != nb.end())
            result.coloring[static_cast<std::size_t>(*pick)] = encode_pair(result.cell_color[v], 2);
    }

    for (Color c : result.coloring.colors) result.coloring.palette_map[c] = {c / 2 + 1, c % 2 + 1};
    if (!verify_cf(neighborhood_hypergraph(g, Neighborhood::Pointed), result.coloring))
        throw VerificationFailure("fat-object coloring is not pointed-CF");
    return result;
}

std::size_t fat_packing_violations(const Scene& objs, const FatPointedResult& result) {
    const std::size_t n = objs.size();
    std::vector<Index> reps;
    std::vector<Box> boxes;
    for (std::size_t v = 0; v < n; ++v) {
        boxes.push_back(bounding_box(objs[v]));
        if (result.representative[v]) reps.push_back(static_cast<Index>(v));
    }
    std::size_t violations = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::map<int, int> seen;
        for (Index r : reps) {
            const auto ru = static_cast<std::size_t>(r);
            if (boxes[v].overlaps(boxes[ru]) && intersects(objs[v], objs[ru])) ++seen[result.cell_color[ru]];
        }
        for (const auto& [color, count] : seen) violations += count > 1;
    }
    return violations;
}

FatClosedResult closed_cf_color_fat(const Scene& objs, double rho, double k) {
    if (!(rho >= 1.0) || !(k >= 1.0)) throw InvalidArgument("rho and k must be at least 1");
    const std::size_t n = objs.size();
    FatClosedResult result;
    result.coloring = Coloring(std::vector<Color>(n, 0));
    if (n == 0) return result;

    const auto certs = certificates(objs);
    double min_size = certs.front().r_inner;
    for (const auto& c : certs) min_size = std::min(min_size, c.r_inner);
    const int last_bucket = static_cast<int>(std::floor(std::log2(k) + kTolerance));
    std::map<int, VertexSet> members;
    for (std::size_t v = 0; v < n; ++v) {
        const int b = std::clamp(static_cast<int>(std::floor(std::log2(certs[v].r_inner / min_size) + kTolerance)), 0,
                                 last_bucket);
        members[b].push_back(static_cast<Index>(v));
    }

    const long long m = 8 * static_cast<long long>(std::ceil(rho - kTolerance)) + 1;
    const Color block = static_cast<Color>(2 * (2 * m * m + 1));
    for (const auto& [b, ids] : members) {
        const Scene sub = Scene::from_shapes([&] {
            std::vector<Shape> shapes;
            for (Index v : ids) shapes.push_back(objs[static_cast<std::size_t>(v)]);
            return shapes;
        }());
        const FatPointedResult pointed = pointed_cf_color_fat(sub, rho, 2.0);
        const Coloring closed = pointed_to_closed(intersection_graph(sub), pointed.coloring);
        FatBucket bucket;
        bucket.id = b;
        bucket.members = ids;
        bucket.palette_first = b * block + 1;
        bucket.palette_last = (b + 1) * block;
        bucket.size_min = certs[static_cast<std::size_t>(ids.front())].r_inner;
        bucket.size_max = bucket.size_min;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const auto v = static_cast<std::size_t>(ids[i]);
            const Color c = bucket.palette_first + closed[i];
            result.coloring[v] = c;
            const auto [pointed_code, layer] = closed.palette_map.at(closed[i]);
            result.coloring.palette_map[c] = {pointed_code, layer};
            bucket.size_min = std::min(bucket.size_min, certs[v].r_inner);
            bucket.size_max = std::max(bucket.size_max, certs[v].r_inner);
        }
        result.buckets.push_back(std::move(bucket));
    }

    if (!verify_cf(neighborhood_hypergraph(intersection_graph(objs), Neighborhood::Closed), result.coloring))
        throw VerificationFailure("fat-object coloring is not closed-CF");
    return result;
}

std::string bucket_report_csv(const FatClosedResult& result) {
    std::string out = "bucket,size_min,size_max,palette_first,palette_last\n";
    char line[160];
    for (const auto& b : result.buckets) {
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%d,%d\n", b.id, b.size_min, b.size_max, b.palette_first,
                      b.palette_last);
        out += line;
    }
    return out;
}

}  // namespace cfgeom
