#include "cfgeom/pipeline.hpp"

#include "cfgeom/error.hpp"
#include "cfgeom/fat_cf.hpp"
#include "cfgeom/framework.hpp"
#include "cfgeom/interval_cf.hpp"
#include "cfgeom/probe_cf.hpp"
#include "cfgeom/rect_cf.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace cfgeom {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 7> kNames{{
    {Algorithm::PseudoDisc, "pseudodisc"},
    {Algorithm::PseudoDiscClosed, "pseudodisc-closed"},
    {Algorithm::Antennas, "antennas"},
    {Algorithm::Intervals, "intervals"},
    {Algorithm::Rects, "rects"},
    {Algorithm::FatPointed, "fat-pointed"},
    {Algorithm::FatClosed, "fat-closed"},
}};

ProbeMode probe_mode_for(const Scene& vertices, const Scene& probes) {
    auto is_disc = [](const Shape& s) { return std::holds_alternative<Disc>(s); };
    const bool discs = std::all_of(vertices.shapes.begin(), vertices.shapes.end(), is_disc) &&
                       std::all_of(probes.shapes.begin(), probes.shapes.end(), is_disc);
    return discs ? ProbeMode::Disc : ProbeMode::PseudoDisc;
}

}  // namespace

Algorithm algorithm_from_string(std::string_view name) {
    for (const auto& [alg, text] : kNames) {
        if (text == name) return alg;
    }
    throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm alg) {
    for (const auto& [a, text] : kNames) {
        if (a == alg) return text;
    }
    return "?";
}

VerifyMode verify_mode_from_string(std::string_view name) {
    if (name == "pointed") return VerifyMode::Pointed;
    if (name == "closed") return VerifyMode::Closed;
    if (name == "probes") return VerifyMode::Probes;
    throw InvalidArgument("unknown verification mode '" + std::string(name) + "'");
}

VerifyMode verify_mode_of(Algorithm alg) {
    switch (alg) {
        case Algorithm::PseudoDisc:
        case Algorithm::FatPointed: return VerifyMode::Pointed;
        case Algorithm::Antennas: return VerifyMode::Probes;
        default: return VerifyMode::Closed;
    }
}

ColorOutcome run_algorithm(Algorithm alg, const Scene& scene, const ColorOptions& options) {
    ColorOutcome out;
    switch (alg) {
        case Algorithm::PseudoDisc: {
            PseudoDiscResult r = pointed_cf_pseudodiscs(scene);
            out.coloring = std::move(r.coloring);
            out.bound = r.palette_bound;
            break;
        }
        case Algorithm::PseudoDiscClosed: {
            PseudoDiscResult r = pointed_cf_pseudodiscs(scene);
            out.coloring = pointed_to_closed(intersection_graph(scene), r.coloring);
            out.bound = 2LL * r.palette_bound;
            break;
        }
        case Algorithm::Antennas: {
            if (!options.probes) throw InvalidArgument("antennas needs a probe scene");
            const ProbeSystem ps{scene, *options.probes, probe_mode_for(scene, *options.probes)};
            ProbeCfResult r = cf_color_vs_probes(ps);
            out.coloring = std::move(r.coloring);
            out.bound = r.palette_bound;
            break;
        }
        case Algorithm::Intervals:
            out.coloring = closed_cf_color_intervals(scene).coloring;
            out.bound = 3;
            break;
        case Algorithm::Rects:
            out.coloring = closed_cf_color_rects(scene).coloring;
            out.bound = rect_palette_bound(scene.size());
            break;
        case Algorithm::FatPointed:
        case Algorithm::FatClosed: {
            const FatParameters tight = fat_parameters(scene);
            const double rho = options.rho.value_or(tight.rho);
            const double k = options.k.value_or(tight.k);
            if (alg == Algorithm::FatPointed) {
                out.coloring = pointed_cf_color_fat(scene, rho, k).coloring;
                out.bound = fat_pointed_bound(rho, k);
            } else {
                out.coloring = closed_cf_color_fat(scene, rho, k).coloring;
                out.bound = fat_closed_bound(rho, k);
            }
            break;
        }
    }
    return out;
}

Hypergraph verification_hypergraph(VerifyMode mode, const Scene& scene, const Scene* probes) {
    if (mode == VerifyMode::Probes) {
        if (!probes) throw InvalidArgument("probe verification needs a probe scene");
        return probe_hypergraph(ProbeSystem{scene, *probes, probe_mode_for(scene, *probes)});
    }
    return neighborhood_hypergraph(intersection_graph(scene),
                                   mode == VerifyMode::Pointed ? Neighborhood::Pointed : Neighborhood::Closed);
}

Verdict verify(VerifyMode mode, const Scene& scene, const Coloring& coloring, const Scene* probes) {
    return verify_cf(verification_hypergraph(mode, scene, probes), coloring);
}

}  // namespace cfgeom
