#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace cfgeom {

using Point = Eigen::Vector2d;

/// Closed disc. A radius of zero is a point.
struct Disc {
    Point center{0.0, 0.0};
    double radius = 0.0;
};

/// Closed interval [lo, hi] on the real line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Closed axis-parallel rectangle.
struct AARect {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;
};

/// Convex polygon carrying a fatness certificate:
/// disc(anchor, r_inner) is inside the polygon, which is inside disc(anchor, r_outer).
struct ConvexFatObject {
    std::vector<Point> vertices;  // counter-clockwise
    Point anchor{0.0, 0.0};
    double r_inner = 1.0;
    double r_outer = 1.0;

    double rho() const { return r_outer / r_inner; }
};

using Shape = std::variant<Disc, Interval, AARect, ConvexFatObject>;

enum class SceneKind { Discs, Intervals, Rects, Fat, Mixed };

std::string_view to_string(SceneKind kind);
SceneKind scene_kind_from_string(std::string_view name);

/// Ordered family of shapes; positions are vertex ids everywhere downstream.
struct Scene {
    SceneKind kind = SceneKind::Mixed;
    std::vector<Shape> shapes;

    std::size_t size() const { return shapes.size(); }
    bool empty() const { return shapes.empty(); }
    const Shape& operator[](std::size_t i) const { return shapes[i]; }

    /// Builds a scene and derives its homogeneity tag. An empty list takes `empty_kind`.
    static Scene from_shapes(std::vector<Shape> shapes, SceneKind empty_kind = SceneKind::Mixed);
};

struct Box {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool overlaps(const Box& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
};

Box bounding_box(const Shape& s);

// Predicates. All regions are closed: tangency counts as intersection.

bool contains(const Shape& s, const Point& p);
bool intersects(const Disc& a, const Disc& b);
bool intersects(const Interval& a, const Interval& b);
bool intersects(const AARect& a, const AARect& b);
bool intersects(const ConvexFatObject& a, const ConvexFatObject& b);
bool intersects(const Disc& a, const ConvexFatObject& b);

/// Dispatches on the variants. Throws InvalidArgument for pairs without a predicate.
bool intersects(const Shape& a, const Shape& b);

double distance_to_segment(const Point& p, const Point& a, const Point& b);

/// Number of proper crossings of the two boundaries (disc/disc or polygon/polygon).
/// Throws DegenerateGeometry on coincident or touching boundaries.
int boundary_crossings(const Shape& a, const Shape& b);

/// True iff every pair of boundaries crosses at most twice.
bool is_pseudodisc_family(const Scene& scene);

/// True iff no two shapes intersect.
bool pairwise_disjoint(const Scene& scene);

/// Anchor and radii of a fat object. A disc is its own 1-fat certificate.
struct FatCertificate {
    Point anchor{0.0, 0.0};
    double r_inner = 0.0;
    double r_outer = 0.0;
};

/// Checks convexity, orientation, and the two containment claims of the certificate.
bool certificate_valid(const ConvexFatObject& obj, double tol = 1e-9);

/// Certificate of a Disc or ConvexFatObject; throws InvalidArgument otherwise
/// or when a polygon certificate does not hold.
FatCertificate fat_certificate(const Shape& s);

/// Smallest distance from `p` to the supporting lines of the polygon edges.
double inner_radius_about(std::span<const Point> ccw_polygon, const Point& p);

}  // namespace cfgeom
