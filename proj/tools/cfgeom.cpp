#include "cfgeom/bench.hpp"
#include "cfgeom/error.hpp"
#include "cfgeom/generate.hpp"
#include "cfgeom/io.hpp"
#include "cfgeom/pipeline.hpp"
#include "cfgeom/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace cfgeom;

namespace {

int verified_or_report(const Verdict& v, std::string_view mode) {
    if (v) {
        std::cout << "verified: coloring is " << mode << "-CF\n";
        return 0;
    }
    std::cout << "not verified: " << v.violations.size() << " hyperedges without a unique color\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conflict-free coloring of geometric intersection graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random scene");
    std::string gen_kind;
    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    GenParams params;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "discs | intervals | rects | fat | pentagons")->required();
    gen->add_option("--n", gen_n, "Number of shapes")->required();
    gen->add_option("--seed", gen_seed, "Random seed")->required();
    gen->add_option("--rho", params.rho, "Fatness bound (fat)");
    gen->add_option("--k", params.k, "Size ratio bound (fat, pentagons)");
    gen->add_option("--out", gen_out, "Scene JSON")->required();

    // color
    auto* color = app.add_subcommand("color", "Color a scene");
    std::string alg_name;
    std::string in_path;
    std::string probes_path;
    std::string out_path;
    std::optional<double> rho;
    std::optional<double> k;
    color->add_option("--alg", alg_name,
                      "pseudodisc | pseudodisc-closed | antennas | intervals | rects | fat-pointed | fat-closed")
        ->required();
    color->add_option("--in", in_path, "Scene JSON")->required();
    color->add_option("--probes", probes_path, "Probe scene JSON (antennas)");
    color->add_option("--rho", rho, "Declared fatness (fat algorithms)");
    color->add_option("--k", k, "Declared size ratio (fat algorithms)");
    color->add_option("--out", out_path, "Coloring JSON")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "Check a coloring; exit code 0 means verified");
    std::string mode_name;
    std::string coloring_path;
    ver->add_option("--mode", mode_name, "pointed | closed | probes")->required();
    ver->add_option("--in", in_path, "Scene JSON")->required();
    ver->add_option("--coloring", coloring_path, "Coloring JSON")->required();
    ver->add_option("--probes", probes_path, "Probe scene JSON (probes mode)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exact CF chromatic number of a small scene");
    int max_colors = 8;
    oracle->add_option("--in", in_path, "Scene JSON")->required();
    oracle->add_option("--mode", mode_name, "pointed | closed | probes")->required();
    oracle->add_option("--probes", probes_path, "Probe scene JSON (probes mode)");
    oracle->add_option("--max-colors", max_colors, "Largest palette to try")->check(CLI::PositiveNumber);
    oracle->add_option("--out", out_path, "Write the optimal coloring here");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark an algorithm; CSV on stdout");
    BenchConfig config;
    std::vector<std::size_t> n_values;
    bench->add_option("--alg", alg_name, "pseudodisc | antennas | intervals | rects | fat-pointed | fat-closed")
        ->required();
    bench->add_option("--n", n_values, "Instance sizes")->required()->delimiter(',');
    bench->add_option("--reps", config.reps, "Repetitions per size");
    bench->add_option("--seed", config.seed, "Base seed");
    bench->add_option("--probes", config.probe_counts, "Probe counts (antennas)")->delimiter(',');
    bench->add_option("--rho", config.rho, "Fatness (fat algorithms)");
    bench->add_option("--k", config.k, "Size ratio (fat algorithms)");
    bench->add_option("--failure-dir", config.failure_dir, "Where failing instances are written");

    // svg
    auto* svg = app.add_subcommand("svg", "Render a colored scene");
    svg->add_option("--in", in_path, "Scene JSON")->required();
    svg->add_option("--coloring", coloring_path, "Coloring JSON")->required();
    svg->add_option("--out", out_path, "SVG file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            write_scene(gen_out, generate_scene(gen_kind_from_string(gen_kind), gen_n, params, gen_seed));
        } else if (*color) {
            const Scene scene = read_scene(in_path);
            std::optional<Scene> probes;
            if (!probes_path.empty()) probes = read_scene(probes_path);
            const Algorithm alg = algorithm_from_string(alg_name);
            ColorOptions options;
            options.probes = probes ? &*probes : nullptr;
            options.rho = rho;
            options.k = k;
            const ColorOutcome outcome = run_algorithm(alg, scene, options);
            if (!verify(verify_mode_of(alg), scene, outcome.coloring, options.probes))
                throw VerificationFailure("coloring failed re-verification; nothing written");
            write_coloring(out_path, outcome.coloring);
            std::cout << "palette_size " << outcome.coloring.palette_size() << " (bound " << outcome.bound << ")\n";
        } else if (*ver) {
            const Scene scene = read_scene(in_path);
            const Coloring coloring = read_coloring(coloring_path);
            std::optional<Scene> probes;
            if (!probes_path.empty()) probes = read_scene(probes_path);
            return verified_or_report(verify(verify_mode_from_string(mode_name), scene, coloring, probes ? &*probes : nullptr),
                                      mode_name);
        } else if (*oracle) {
            const Scene scene = read_scene(in_path);
            std::optional<Scene> probes;
            if (!probes_path.empty()) probes = read_scene(probes_path);
            const Hypergraph h =
                verification_hypergraph(verify_mode_from_string(mode_name), scene, probes ? &*probes : nullptr);
            const OracleResult r = min_cf_colors_bruteforce(h, max_colors);
            if (!r.min_colors) {
                std::cout << "no CF coloring with at most " << max_colors << " colors\n";
                return 2;
            }
            std::cout << "min_colors " << *r.min_colors << '\n';
            if (!out_path.empty()) write_coloring(out_path, r.witness);
        } else if (*bench) {
            config.alg = algorithm_from_string(alg_name);
            config.n_values = n_values;
            const auto rows = bench_colors(config);
            write_bench_csv(std::cout, config, rows);
        } else if (*svg) {
            const std::string doc = render_svg(read_scene(in_path), read_coloring(coloring_path));
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw InvalidArgument("cannot write " + out_path);
            out << doc;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
