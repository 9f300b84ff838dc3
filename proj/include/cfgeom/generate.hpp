#pragma once

#include "cfgeom/geom.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cfgeom {

enum class GenKind { Discs, Intervals, Rects, Fat, Pentagons };

GenKind gen_kind_from_string(std::string_view name);

/// Knobs for the random generators. Unused fields are ignored per kind.
struct GenParams {
    double coord_min = 0.0;
    double coord_max = 1.0;
    double radius_min = 0.05;  // discs
    double radius_max = 0.2;
    double length_min = 0.02;  // intervals and rectangle sides, as fractions of the span
    double length_max = 0.2;
    double rho = 2.0;          // fat: fatness bound, >= 1
    double k = 4.0;            // fat and pentagons: size ratio bound, >= 1
    double min_size = 0.02;    // fat and pentagons: smallest inner radius
    double margin = 1e-6;      // non-degeneracy margin as a fraction of the coordinate span
};

/// Deterministic random scene; identical output for identical arguments.
///
/// Discs keep |dist - (r1 + r2)| and |dist - |r1 - r2|| above the margin for
/// every pair; intervals and rectangles keep all endpoint coordinates apart by
/// the margin. Fat objects are convex polygons sampled between two concentric
/// circles and rescaled so that their certificates hold; with rho == 1 they
/// are discs. Pentagons are homothets of one fixed convex pentagon.
Scene generate_scene(GenKind kind, std::size_t n, const GenParams& params, std::uint64_t seed);

/// n unit discs centred at (i * spacing, 0). Requires (n - 1) * spacing < 2.
Scene generate_lower_bound_family(std::size_t n, double spacing);

/// A point in the lower-bound family arrangement that lies in exactly discs first..last.
struct CellWitness {
    std::size_t first = 0;
    std::size_t last = 0;
    Point point{0.0, 0.0};
};

/// One witness point for every contiguous run of discs of the lower-bound family.
std::vector<CellWitness> lower_bound_cell_witnesses(std::size_t n, double spacing);

/// Tiny discs at the cell witnesses, usable as probes.
Scene lower_bound_probes(std::size_t n, double spacing, double probe_radius = 1e-6);

/// Random probe discs with centres in [lo, hi]^2 and radii in [rmin, rmax].
Scene generate_probe_discs(std::size_t count, double lo, double hi, double rmin, double rmax,
                           std::uint64_t seed);

/// mt19937_64 with uniform draws that do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(uniform() * static_cast<double>(bound)); }

private:
    std::mt19937_64 engine_;
};

/// Mixes several integers into one seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

}  // namespace cfgeom
