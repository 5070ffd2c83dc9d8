#ifndef SVDKIT_BENCH_HPP
#define SVDKIT_BENCH_HPP

#include <string>
#include <utility>
#include <vector>

#include "svdkit/kernels.hpp"
#include "svdkit/svd_methods.hpp"

namespace svdkit {

/// One benchmark campaign: the cross product of row and column sizes, run
/// for each method with Gaussian test matrices.
struct BenchConfig {
    std::vector<std::size_t> row_sizes;
    std::vector<std::size_t> col_sizes;
    std::vector<SvdMethod> methods;
    std::size_t repeats = 10;
    RngSeed seed{42};
    double l_fraction = 0.5;    ///< sketch width as a fraction of n, in (0, 1]
    std::size_t iterations = 1; ///< i for the sketch methods
    double memory_cap_bytes = 2.0 * 1024 * 1024 * 1024; ///< skip cells above this
};

/// One (method, m, n) measurement. Everything except the timing columns is
/// bit-identical across reruns with the same config.
struct BenchRecord {
    SvdMethod method = SvdMethod::Truncated;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t repeats = 0;
    double mean_seconds = 0.0;
    double std_seconds = 0.0;      ///< sample std over repeats; 0 for a single repeat
    double delta = 0.0;            ///< mean relative residual over repeats
    double model_flops = 0.0;
    double model_space_bytes = 0.0;
};

/// A grid cell that was not run, with the reason (memory cap, parameter
/// domain).
struct SkippedCell {
    SvdMethod method = SvdMethod::Truncated;
    std::size_t m = 0;
    std::size_t n = 0;
    std::string reason;
};

struct GridResult {
    std::vector<BenchRecord> records;
    std::vector<SkippedCell> skipped;
};

/// The (m, n) cells a config expands to, sorted m ascending then n
/// ascending. Throws ParamError if any pair has m < n or the grid is empty.
std::vector<std::pair<std::size_t, std::size_t>> expand_grid(const BenchConfig& cfg);

/// Sketch width used for column count n under this config.
std::size_t sketch_width_for(const BenchConfig& cfg, std::size_t n);

/// Runs the whole grid sequentially. Per cell and repeat, the input matrix
/// is regenerated from seed + trial index (shared across methods, excluded
/// from the timed region), the factorization is timed with a monotonic
/// clock, and the residual and cost-model predictions are attached.
GridResult run_grid(const BenchConfig& cfg);

/// CSV with the fixed header
/// method,m,n,repeats,mean_seconds,std_seconds,delta,model_flops,model_space_bytes
std::string to_csv(const std::vector<BenchRecord>& records);
void write_csv_file(const std::vector<BenchRecord>& records, const std::string& path);

/// Per-cell method rankings by measured time and by modeled flops.
struct OrderingCell {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<SvdMethod> by_seconds;
    std::vector<SvdMethod> by_flops;
    bool agree = false;
};

struct OrderingReport {
    std::vector<OrderingCell> cells;
    double agreement = 0.0; ///< fraction of cells where the rankings match
};

OrderingReport summarize_ordering(const std::vector<BenchRecord>& records);
std::string format_report(const OrderingReport& report);

} // namespace svdkit

#endif
