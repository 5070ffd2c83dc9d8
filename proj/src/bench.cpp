#include "svdkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "svdkit/cost_model.hpp"
#include "svdkit/csv_io.hpp"
#include "svdkit/errors.hpp"
#include "svdkit/pca.hpp"

namespace svdkit {

namespace {

// Offset added to the matrix seed stream so the sketch methods' Gaussian
// test matrix never reuses the benchmark matrix stream.
constexpr std::uint64_t kMethodSeedOffset = 0x9e3779b97f4a7c15ULL;

void validate(const BenchConfig& cfg) {
    if (cfg.row_sizes.empty() || cfg.col_sizes.empty()) {
        throw ParamError("bench: empty grid");
    }
    if (cfg.methods.empty()) {
        throw ParamError("bench: no methods selected");
    }
    if (cfg.repeats < 1) {
        throw ParamError("bench: repeats must be >= 1");
    }
    if (!(cfg.l_fraction > 0.0 && cfg.l_fraction <= 1.0)) {
        throw ParamError("bench: l_fraction must be in (0, 1]");
    }
    for (std::size_t m : cfg.row_sizes) {
        for (std::size_t n : cfg.col_sizes) {
            if (m < n) {
                throw ParamError("bench: grid cell " + std::to_string(m) + "x" +
                                 std::to_string(n) + " violates m >= n");
            }
        }
    }
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> expand_grid(const BenchConfig& cfg) {
    validate(cfg);
    std::vector<std::size_t> rows = cfg.row_sizes;
    std::vector<std::size_t> cols = cfg.col_sizes;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    cells.reserve(rows.size() * cols.size());
    for (std::size_t m : rows) {
        for (std::size_t n : cols) {
            cells.emplace_back(m, n);
        }
    }
    return cells;
}

std::size_t sketch_width_for(const BenchConfig& cfg, std::size_t n) {
    const auto l = static_cast<std::size_t>(
        std::ceil(cfg.l_fraction * static_cast<double>(n)));
    return std::clamp<std::size_t>(l, 1, n);
}

GridResult run_grid(const BenchConfig& cfg) {
    const auto cells = expand_grid(cfg);

    std::vector<SvdMethod> methods = cfg.methods;
    std::sort(methods.begin(), methods.end(), [](SvdMethod a, SvdMethod b) {
        return std::string_view(method_name(a)) < std::string_view(method_name(b));
    });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    GridResult result;
    for (const auto& [m, n] : cells) {
        const double matrix_bytes = 8.0 * static_cast<double>(m) * static_cast<double>(n);
        const std::size_t l = sketch_width_for(cfg, n);

        for (SvdMethod method : methods) {
            if (matrix_bytes > cfg.memory_cap_bytes) {
                result.skipped.push_back(
                    {method, m, n,
                     "matrix needs " + std::to_string(matrix_bytes) + " bytes, cap is " +
                         std::to_string(cfg.memory_cap_bytes)});
                continue;
            }
            if (method == SvdMethod::Krylov && (cfg.iterations + 1) * l > m) {
                result.skipped.push_back(
                    {method, m, n,
                     "krylov block width " + std::to_string((cfg.iterations + 1) * l) +
                         " exceeds m = " + std::to_string(m)});
                continue;
            }

            CostEstimate cost;
            switch (method) {
            case SvdMethod::Truncated:
                cost = truncated_cost(m, n);
                break;
            case SvdMethod::Randomized:
                cost = randomized_cost(m, n, l, cfg.iterations);
                break;
            case SvdMethod::Krylov:
                cost = krylov_cost(m, n, l, cfg.iterations);
                break;
            }

            std::vector<double> seconds(cfg.repeats, 0.0);
            double delta_sum = 0.0;
            for (std::size_t trial = 0; trial < cfg.repeats; ++trial) {
                const DenseMatrix a =
                    gaussian_matrix(m, n, RngSeed{cfg.seed.value + trial});
                MethodParams params{l, cfg.iterations,
                                    RngSeed{cfg.seed.value + kMethodSeedOffset + trial}};

                const auto start = std::chrono::steady_clock::now();
                const SvdResult s = compute_svd(a, method, params);
                const auto stop = std::chrono::steady_clock::now();

                seconds[trial] = std::chrono::duration<double>(stop - start).count();
                delta_sum += residual_delta(a, s);
            }

            double mean = 0.0;
            for (double t : seconds) {
                mean += t;
            }
            mean /= static_cast<double>(cfg.repeats);
            double var = 0.0;
            if (cfg.repeats > 1) {
                for (double t : seconds) {
                    var += (t - mean) * (t - mean);
                }
                var /= static_cast<double>(cfg.repeats - 1);
            }

            result.records.push_back({method, m, n, cfg.repeats, mean, std::sqrt(var),
                                      delta_sum / static_cast<double>(cfg.repeats),
                                      cost.flops, cost.space_bytes});
        }
    }
    return result;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "method,m,n,repeats,mean_seconds,std_seconds,delta,model_flops,model_space_bytes\n";
    for (const BenchRecord& r : records) {
        out << method_name(r.method) << ',' << r.m << ',' << r.n << ',' << r.repeats << ','
            << format_double(r.mean_seconds) << ',' << format_double(r.std_seconds) << ','
            << format_double(r.delta) << ',' << format_double(r.model_flops) << ','
            << format_double(r.model_space_bytes) << '\n';
    }
    return out.str();
}

void write_csv_file(const std::vector<BenchRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary keeps LF on every platform
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << to_csv(records);
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

OrderingReport summarize_ordering(const std::vector<BenchRecord>& records) {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<const BenchRecord*>> cells;
    for (const BenchRecord& r : records) {
        cells[{r.m, r.n}].push_back(&r);
    }

    OrderingReport report;
    std::size_t agreeing = 0;
    for (const auto& [shape, recs] : cells) {
        OrderingCell cell;
        cell.m = shape.first;
        cell.n = shape.second;

        auto ranked = [&recs](auto key) {
            std::vector<const BenchRecord*> sorted = recs;
            std::sort(sorted.begin(), sorted.end(),
                      [&key](const BenchRecord* a, const BenchRecord* b) {
                          if (key(*a) != key(*b)) {
                              return key(*a) < key(*b);
                          }
                          return std::string_view(method_name(a->method)) <
                                 std::string_view(method_name(b->method));
                      });
            std::vector<SvdMethod> order;
            order.reserve(sorted.size());
            for (const BenchRecord* r : sorted) {
                order.push_back(r->method);
            }
            return order;
        };
        cell.by_seconds = ranked([](const BenchRecord& r) { return r.mean_seconds; });
        cell.by_flops = ranked([](const BenchRecord& r) { return r.model_flops; });
        cell.agree = cell.by_seconds == cell.by_flops;
        agreeing += cell.agree ? 1 : 0;
        report.cells.push_back(std::move(cell));
    }
    report.agreement =
        report.cells.empty() ? 0.0
                             : static_cast<double>(agreeing) /
                                   static_cast<double>(report.cells.size());
    return report;
}

std::string format_report(const OrderingReport& report) {
    std::ostringstream out;
    out << "cell            measured (fast->slow)              modeled (cheap->costly)"
           "            agree\n";
    for (const OrderingCell& cell : report.cells) {
        std::string measured;
        std::string modeled;
        for (std::size_t i = 0; i < cell.by_seconds.size(); ++i) {
            if (i > 0) {
                measured += " < ";
                modeled += " < ";
            }
            measured += method_name(cell.by_seconds[i]);
            modeled += method_name(cell.by_flops[i]);
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%6zux%-6zu  %-34s %-34s %s\n", cell.m, cell.n,
                      measured.c_str(), modeled.c_str(), cell.agree ? "yes" : "NO");
        out << line;
    }
    char tail[64];
    std::snprintf(tail, sizeof(tail), "ranking agreement: %.2f\n", report.agreement);
    out << tail;
    return out.str();
}

} // namespace svdkit
