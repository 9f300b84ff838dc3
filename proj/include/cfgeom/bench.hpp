#pragma once

#include "cfgeom/error.hpp"
#include "cfgeom/pipeline.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cfgeom {

struct BenchConfig {
    Algorithm alg = Algorithm::Intervals;
    std::vector<std::size_t> n_values;
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::vector<std::size_t> probe_counts;  // antennas only; empty means 10 * n
    double rho = 2.0;                       // fat generators
    double k = 4.0;
    std::string failure_dir = ".";
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t rep = 0;
    std::size_t palette_size = 0;
    long long bound = 0;
    double runtime_ms = 0.0;
    bool verified = false;
    std::size_t probes = 0;  // antennas only
};

/// Raised when a bench run fails; the failing input has been written to `path()`.
class BenchFailure : public Error {
public:
    BenchFailure(const std::string& what, std::string path) : Error(what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Generates, colors and re-verifies one instance per (n, rep) and, for
/// antennas, per probe count. Rows come back in (n, rep, probes) order. Reps
/// may run concurrently. Each instance depends only on (seed, n, rep).
std::vector<BenchRow> bench_colors(const BenchConfig& config);

/// CSV with header n,rep,palette_size,bound,runtime_ms,verified (plus probes for antennas).
void write_bench_csv(std::ostream& out, const BenchConfig& config, const std::vector<BenchRow>& rows);

}  // namespace cfgeom
