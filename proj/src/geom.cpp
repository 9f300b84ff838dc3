#include "cfgeom/geom.hpp"

#include "cfgeom/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cfgeom {

namespace {

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

double orient(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool inside_convex(std::span<const Point> poly, const Point& p) {
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (orient(poly[i], poly[(i + 1) % m], p) < 0.0) return false;
    }
    return true;
}

// Separating axis test on the edge normals of `a`.
bool separated_by_edges_of(std::span<const Point> a, std::span<const Point> b) {
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point edge = a[(i + 1) % m] - a[i];
        const Point normal(edge.y(), -edge.x());  // outward for CCW
        double amax = -std::numeric_limits<double>::infinity();
        for (const auto& p : a) amax = std::max(amax, normal.dot(p));
        double bmin = std::numeric_limits<double>::infinity();
        for (const auto& p : b) bmin = std::min(bmin, normal.dot(p));
        if (bmin > amax) return true;
    }
    return false;
}

int circle_crossings(const Disc& a, const Disc& b) {
    const double d2 = (a.center - b.center).squaredNorm();
    const double sum = a.radius + b.radius;
    const double diff = a.radius - b.radius;
    if (d2 == 0.0 && diff == 0.0) throw DegenerateGeometry("coincident circles");
    if (d2 == sum * sum || d2 == diff * diff) throw DegenerateGeometry("tangent circles");
    if (d2 > sum * sum || d2 < diff * diff) return 0;
    return 2;
}

int polygon_crossings(std::span<const Point> a, std::span<const Point> b) {
    int count = 0;
    const std::size_t m = a.size();
    const std::size_t k = b.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& p1 = a[i];
        const Point& p2 = a[(i + 1) % m];
        for (std::size_t j = 0; j < k; ++j) {
            const Point& q1 = b[j];
            const Point& q2 = b[(j + 1) % k];
            const double o1 = orient(p1, p2, q1);
            const double o2 = orient(p1, p2, q2);
            const double o3 = orient(q1, q2, p1);
            const double o4 = orient(q1, q2, p2);
            if ((o1 == 0.0 && on_segment(q1, p1, p2)) || (o2 == 0.0 && on_segment(q2, p1, p2)) ||
                (o3 == 0.0 && on_segment(p1, q1, q2)) || (o4 == 0.0 && on_segment(p2, q1, q2))) {
                throw DegenerateGeometry("polygon boundaries touch");
            }
            if (((o1 > 0.0) != (o2 > 0.0)) && ((o3 > 0.0) != (o4 > 0.0))) ++count;
        }
    }
    return count;
}

}  // namespace

std::string_view to_string(SceneKind kind) {
    switch (kind) {
        case SceneKind::Discs: return "discs";
        case SceneKind::Intervals: return "intervals";
        case SceneKind::Rects: return "rects";
        case SceneKind::Fat: return "fat";
        case SceneKind::Mixed: return "mixed";
    }
    return "mixed";
}

SceneKind scene_kind_from_string(std::string_view name) {
    if (name == "discs") return SceneKind::Discs;
    if (name == "intervals") return SceneKind::Intervals;
    if (name == "rects") return SceneKind::Rects;
    if (name == "fat") return SceneKind::Fat;
    if (name == "mixed") return SceneKind::Mixed;
    throw InvalidArgument("unknown scene kind '" + std::string(name) + "'");
}

Scene Scene::from_shapes(std::vector<Shape> shapes, SceneKind empty_kind) {
    Scene scene;
    scene.shapes = std::move(shapes);
    if (scene.shapes.empty()) {
        scene.kind = empty_kind;
        return scene;
    }
    const std::size_t first = scene.shapes.front().index();
    const bool same = std::all_of(scene.shapes.begin(), scene.shapes.end(),
                                  [&](const Shape& s) { return s.index() == first; });
    if (!same) {
        scene.kind = SceneKind::Mixed;
        return scene;
    }
    constexpr SceneKind by_index[] = {SceneKind::Discs, SceneKind::Intervals, SceneKind::Rects,
                                      SceneKind::Fat};
    scene.kind = by_index[first];
    return scene;
}

Box bounding_box(const Shape& s) {
    return std::visit(
        [](const auto& v) -> Box {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return {v.center.x() - v.radius, v.center.x() + v.radius, v.center.y() - v.radius,
                        v.center.y() + v.radius};
            } else if constexpr (std::is_same_v<T, Interval>) {
                return {v.lo, v.hi, 0.0, 0.0};
            } else if constexpr (std::is_same_v<T, AARect>) {
                return {v.xmin, v.xmax, v.ymin, v.ymax};
            } else {
                Box b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
                for (const auto& p : v.vertices) {
                    b.xmin = std::min(b.xmin, p.x());
                    b.xmax = std::max(b.xmax, p.x());
                    b.ymin = std::min(b.ymin, p.y());
                    b.ymax = std::max(b.ymax, p.y());
                }
                return b;
            }
        },
        s);
}

bool contains(const Shape& s, const Point& p) {
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return (p - v.center).squaredNorm() <= v.radius * v.radius;
            } else if constexpr (std::is_same_v<T, Interval>) {
                return v.lo <= p.x() && p.x() <= v.hi;
            } else if constexpr (std::is_same_v<T, AARect>) {
                return v.xmin <= p.x() && p.x() <= v.xmax && v.ymin <= p.y() && p.y() <= v.ymax;
            } else {
                return inside_convex(v.vertices, p);
            }
        },
        s);
}

bool intersects(const Disc& a, const Disc& b) {
    const double sum = a.radius + b.radius;
    return (a.center - b.center).squaredNorm() <= sum * sum;
}

bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

bool intersects(const AARect& a, const AARect& b) {
    return a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax && b.ymin <= a.ymax;
}

bool intersects(const ConvexFatObject& a, const ConvexFatObject& b) {
    return !separated_by_edges_of(a.vertices, b.vertices) &&
           !separated_by_edges_of(b.vertices, a.vertices);
}

double distance_to_segment(const Point& p, const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

bool intersects(const Disc& a, const ConvexFatObject& b) {
    if (inside_convex(b.vertices, a.center)) return true;
    const std::size_t m = b.vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (distance_to_segment(a.center, b.vertices[i], b.vertices[(i + 1) % m]) <= a.radius)
            return true;
    }
    return false;
}

bool intersects(const Shape& a, const Shape& b) {
    if (const auto* da = std::get_if<Disc>(&a)) {
        if (const auto* db = std::get_if<Disc>(&b)) return intersects(*da, *db);
        if (const auto* fb = std::get_if<ConvexFatObject>(&b)) return intersects(*da, *fb);
    } else if (const auto* fa = std::get_if<ConvexFatObject>(&a)) {
        if (const auto* fb = std::get_if<ConvexFatObject>(&b)) return intersects(*fa, *fb);
        if (const auto* db = std::get_if<Disc>(&b)) return intersects(*db, *fa);
    } else if (const auto* ia = std::get_if<Interval>(&a)) {
        if (const auto* ib = std::get_if<Interval>(&b)) return intersects(*ia, *ib);
    } else if (const auto* ra = std::get_if<AARect>(&a)) {
        if (const auto* rb = std::get_if<AARect>(&b)) return intersects(*ra, *rb);
    }
    throw InvalidArgument("no intersection predicate for this pair of shape types");
}

int boundary_crossings(const Shape& a, const Shape& b) {
    if (const auto* da = std::get_if<Disc>(&a)) {
        if (const auto* db = std::get_if<Disc>(&b)) return circle_crossings(*da, *db);
    } else if (const auto* fa = std::get_if<ConvexFatObject>(&a)) {
        if (const auto* fb = std::get_if<ConvexFatObject>(&b))
            return polygon_crossings(fa->vertices, fb->vertices);
    }
    throw InvalidArgument("boundary crossings need two discs or two polygons");
}

bool is_pseudodisc_family(const Scene& scene) {
    const auto n = scene.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Box bi = bounding_box(scene[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!bi.overlaps(bounding_box(scene[j]))) continue;
            if (boundary_crossings(scene[i], scene[j]) > 2) return false;
        }
    }
    return true;
}

bool pairwise_disjoint(const Scene& scene) {
    const auto n = scene.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (intersects(scene[i], scene[j])) return false;
        }
    }
    return true;
}

double inner_radius_about(std::span<const Point> poly, const Point& p) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point edge = poly[(i + 1) % m] - poly[i];
        const double len = edge.norm();
        if (len == 0.0) return 0.0;
        best = std::min(best, orient(poly[i], poly[(i + 1) % m], p) / len);
    }
    return best;
}

bool certificate_valid(const ConvexFatObject& obj, double tol) {
    const auto& v = obj.vertices;
    const std::size_t m = v.size();
    if (m < 3) return false;
    if (!(obj.r_inner > 0.0) || !(obj.r_outer >= obj.r_inner)) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(orient(v[i], v[(i + 1) % m], v[(i + 2) % m]) > 0.0)) return false;
    }
    // Strict convexity plus a single turn of total angle rules out self-overlap.
    double winding = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point e1 = v[(i + 1) % m] - v[i];
        const Point e2 = v[(i + 2) % m] - v[(i + 1) % m];
        winding += std::atan2(cross(e1, e2), e1.dot(e2));
    }
    if (std::abs(winding - 2.0 * M_PI) > 1e-6) return false;
    if (inner_radius_about(v, obj.anchor) < obj.r_inner * (1.0 - tol)) return false;
    for (const auto& p : v) {
        if ((p - obj.anchor).norm() > obj.r_outer * (1.0 + tol)) return false;
    }
    return true;
}

FatCertificate fat_certificate(const Shape& s) {
    if (const auto* d = std::get_if<Disc>(&s)) {
        if (!(d->radius > 0.0)) throw InvalidArgument("fat disc needs a positive radius");
        return {d->center, d->radius, d->radius};
    }
    if (const auto* f = std::get_if<ConvexFatObject>(&s)) {
        if (!certificate_valid(*f)) throw InvalidArgument("fat object certificate does not hold");
        return {f->anchor, f->r_inner, f->r_outer};
    }
    throw InvalidArgument("fat certificate requested for a non-fat shape");
}

}  // namespace cfgeom
