#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <string>
#include <vector>

namespace cfgeom {

struct FatPointedResult {
    Coloring coloring;                // encode_pair(i, l); palette_map holds (i, l)
    std::vector<int> cell_color;      // c(A) of each object's cell, 1..t
    std::vector<char> representative; // picked in the first phase
    int t = 0;                        // number of cell colors, M * M
    double grid_shift = 0.0;          // origin shift applied to dodge grid lines, in cell units
};

/// Pointed CF coloring of a family of fat objects (discs or convex polygons
/// with certificates) whose fatness is at most `rho` and size ratio at most `k`.
///
/// Sizes are rescaled so that the smallest is 1, anchors are put on a unit grid
/// whose cells are colored cyclically with M = ⌈4k⌈ρ⌉⌉ + 1 residues per axis.
/// Phase 1 colors the smallest-index object of each occupied cell (c, 1) and
/// everything else (t + 1, 1). Phase 2 visits those representatives in index
/// order; one without a representative neighbor hands (c, 2) to its
/// smallest-index neighbor still colored (t + 1, 1).
/// Throws InvalidArgument when a certificate exceeds rho or k.
FatPointedResult pointed_cf_color_fat(const Scene& objs, double rho, double k);

struct FatBucket {
    int id = 0;
    double size_min = 0.0;  // smallest and largest certificate size in the bucket
    double size_max = 0.0;
    Color palette_first = 0;
    Color palette_last = 0;  // inclusive
    VertexSet members;
};

struct FatClosedResult {
    Coloring coloring;
    std::vector<FatBucket> buckets;
};

/// Closed CF coloring: objects are split into dyadic size buckets
/// (bucket b holds sizes in [2^b, 2^(b+1)) after normalization), each bucket is
/// colored with pointed_cf_color_fat(rho, 2) and converted with
/// pointed_to_closed, and buckets get disjoint palette ranges.
FatClosedResult closed_cf_color_fat(const Scene& objs, double rho, double k);

/// 2(⌈4k⌈ρ⌉⌉ + 1)² + 1.
long long fat_pointed_bound(double rho, double k);

/// (⌊log₂ k⌋ + 1) · 2 · (2(8⌈ρ⌉ + 1)² + 1).
long long fat_closed_bound(double rho, double k);

/// Number of (object, cell color) pairs where the object meets more than one
/// phase-1 representative of that cell color. Zero whenever the grid is coarse enough.
std::size_t fat_packing_violations(const Scene& objs, const FatPointedResult& result);

/// Tightest (rho, k) that the certificates of the family satisfy.
struct FatParameters {
    double rho = 1.0;
    double k = 1.0;
};
FatParameters fat_parameters(const Scene& objs);

/// "bucket,size_min,size_max,palette_first,palette_last" plus one row per bucket.
std::string bucket_report_csv(const FatClosedResult& result);

}  // namespace cfgeom
