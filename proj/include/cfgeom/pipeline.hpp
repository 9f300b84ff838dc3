#pragma once

#include "cfgeom/geom.hpp"
#include "cfgeom/hypergraph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace cfgeom {

enum class Algorithm { PseudoDisc, PseudoDiscClosed, Antennas, Intervals, Rects, FatPointed, FatClosed };

Algorithm algorithm_from_string(std::string_view name);
std::string_view to_string(Algorithm alg);

enum class VerifyMode { Pointed, Closed, Probes };

VerifyMode verify_mode_from_string(std::string_view name);

/// The notion of CF that an algorithm's output satisfies.
VerifyMode verify_mode_of(Algorithm alg);

struct ColorOptions {
    const Scene* probes = nullptr;  // required for Antennas
    std::optional<double> rho;      // fat algorithms; inferred from certificates when absent
    std::optional<double> k;
};

struct ColorOutcome {
    Coloring coloring;
    long long bound = 0;  // the algorithm's palette ceiling for this input
};

/// Runs one algorithm. Every algorithm verifies its own output and throws
/// VerificationFailure rather than return an unverified coloring.
ColorOutcome run_algorithm(Algorithm alg, const Scene& scene, const ColorOptions& options = {});

/// Hypergraph whose CF colorings are the valid outputs for `mode`.
/// Probes mode needs `probes`.
Hypergraph verification_hypergraph(VerifyMode mode, const Scene& scene, const Scene* probes = nullptr);

Verdict verify(VerifyMode mode, const Scene& scene, const Coloring& coloring, const Scene* probes = nullptr);

}  // namespace cfgeom
