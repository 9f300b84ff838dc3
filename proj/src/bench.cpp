#include "cfgeom/bench.hpp"

#include "cfgeom/error.hpp"
#include "cfgeom/generate.hpp"
#include "cfgeom/io.hpp"
#include "cfgeom/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>

namespace cfgeom {

namespace {

struct Task {
    std::size_t n;
    std::size_t rep;
    std::size_t probes;
};

GenKind generator_for(Algorithm alg) {
    switch (alg) {
        case Algorithm::Intervals: return GenKind::Intervals;
        case Algorithm::Rects: return GenKind::Rects;
        case Algorithm::FatPointed:
        case Algorithm::FatClosed: return GenKind::Fat;
        default: return GenKind::Discs;
    }
}

std::string dump_failure(const BenchConfig& config, const Task& task, const Scene& scene, const Scene* probes) {
    const std::string name = "bench_failure_" + std::string(to_string(config.alg)) + "_n" + std::to_string(task.n) +
                             "_rep" + std::to_string(task.rep) +
                             (probes ? "_p" + std::to_string(task.probes) : std::string()) + ".json";
    const std::string path = (std::filesystem::path(config.failure_dir) / name).string();
    Json doc = to_json(scene);
    if (probes) doc = {{"vertices", doc}, {"probes", to_json(*probes)}, {"mode", "disc"}};
    write_json(path, doc);
    return path;
}

BenchRow run_task(const BenchConfig& config, const Task& task) {
    GenParams params;
    params.rho = config.rho;
    params.k = config.k;
    const std::uint64_t seed = mix_seed(config.seed, task.n, task.rep);
    const Scene scene = generate_scene(generator_for(config.alg), task.n, params, seed);
    std::optional<Scene> probes;
    if (config.alg == Algorithm::Antennas)
        probes = generate_probe_discs(task.probes, params.coord_min, params.coord_max, 0.005, 0.1, mix_seed(seed, 1));

    ColorOptions options;
    options.probes = probes ? &*probes : nullptr;
    if (config.alg == Algorithm::FatPointed || config.alg == Algorithm::FatClosed) {
        options.rho = config.rho;
        options.k = config.k;
    }
    BenchRow row{task.n, task.rep, 0, 0, 0.0, false, probes ? task.probes : 0};
    try {
        const auto start = std::chrono::steady_clock::now();
        const ColorOutcome outcome = run_algorithm(config.alg, scene, options);
        row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.palette_size = outcome.coloring.palette_size();
        row.bound = outcome.bound;
        row.verified = static_cast<bool>(verify(verify_mode_of(config.alg), scene, outcome.coloring, options.probes)) &&
                       static_cast<long long>(row.palette_size) <= row.bound;
    } catch (const Error& e) {
        const std::string path = dump_failure(config, task, scene, options.probes);
        throw BenchFailure(std::string(e.what()) + " (instance written to " + path + ")", path);
    }
    if (!row.verified) {
        const std::string path = dump_failure(config, task, scene, options.probes);
        throw BenchFailure("verification failed (instance written to " + path + ")", path);
    }
    return row;
}

}  // namespace

std::vector<BenchRow> bench_colors(const BenchConfig& config) {
    if (config.n_values.empty()) throw InvalidArgument("bench needs at least one n");
    std::vector<Task> tasks;
    for (std::size_t n : config.n_values) {
        for (std::size_t rep = 0; rep < config.reps; ++rep) {
            if (config.alg != Algorithm::Antennas) {
                tasks.push_back({n, rep, 0});
            } else if (config.probe_counts.empty()) {
                tasks.push_back({n, rep, 10 * n});
            } else {
                for (std::size_t p : config.probe_counts) tasks.push_back({n, rep, p});
            }
        }
    }
    std::vector<BenchRow> rows(tasks.size());
    std::exception_ptr failure;
    std::mutex guard;
    parallel_for(tasks.size(), 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                rows[i] = run_task(config, tasks[i]);
            } catch (...) {
                const std::lock_guard lock(guard);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    });
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_bench_csv(std::ostream& out, const BenchConfig& config, const std::vector<BenchRow>& rows) {
    const bool antennas = config.alg == Algorithm::Antennas;
    out << "n,rep,palette_size,bound,runtime_ms,verified" << (antennas ? ",probes" : "") << '\n';
    char ms[32];
    for (const auto& r : rows) {
        std::snprintf(ms, sizeof ms, "%.3f", r.runtime_ms);
        out << r.n << ',' << r.rep << ',' << r.palette_size << ',' << r.bound << ',' << ms << ','
            << (r.verified ? "true" : "false");
        if (antennas) out << ',' << r.probes;
        out << '\n';
    }
}

}  // namespace cfgeom
