#include "svdkit/cost_model.hpp"

#include <string>

#include "svdkit/errors.hpp"

namespace svdkit {

namespace {

CostEstimate make(double flops, double entries) {
    return CostEstimate{flops, entries, 8.0 * entries};
}

void require_domain(std::size_t m, std::size_t n, std::size_t l, std::size_t min_i,
                    std::size_t i, const char* op) {
    if (m < n || n < l || l < 1) {
        throw ParamError(std::string(op) + ": need m >= n >= l >= 1, got m=" +
                         std::to_string(m) + ", n=" + std::to_string(n) +
                         ", l=" + std::to_string(l));
    }
    if (i < min_i) {
        throw ParamError(std::string(op) + ": need i >= " + std::to_string(min_i) +
                         ", got i=" + std::to_string(i));
    }
}

} // namespace

CostEstimate krylov_cost(std::size_t m, std::size_t n, std::size_t l, std::size_t i) {
    require_domain(m, n, l, 1, i, "krylov_cost");
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double ld = static_cast<double>(l);
    const double id = static_cast<double>(i);

    const double width_sq = (id + 1.0) * (id + 1.0) * ld * ld;
    const double flops =
        nd * ld + (3.0 * id + 2.0) * md * nd * ld +
        width_sq * (md * md + nd * nd + 2.0 * md - (2.0 / 3.0) * (id + 1.0) * ld);

    // Space per buffer: A, the (3i+4) m*l blocks, the (2i+3) n*l blocks, and
    // the two width x width small-SVD factors. At l = n/2, i = 1 this reduces
    // exactly to the practical form: mn + (3i+4)ml = 9/2 mn, and
    // (2i+3)nl + 2((i+1)l)^2 = 5/2 n^2 + 2 n^2 = 9/2 n^2.
    const double width = (id + 1.0) * ld;
    const double entries = md * nd + (3.0 * id + 4.0) * md * ld + (2.0 * id + 3.0) * nd * ld +
                           2.0 * width * width;
    return make(flops, entries);
}

CostEstimate krylov_cost_practical(std::size_t m, std::size_t n) {
    if (m < n || n < 1) {
        throw ParamError("krylov_cost_practical: need m >= n >= 1");
    }
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double flops = nd * nd / 2.0 + 2.5 * md * nd * nd +
                         4.0 * (md * md * nd * nd + 2.0 * md * nd * nd + nd * nd * nd * nd -
                                (2.0 / 3.0) * nd * nd * nd);
    const double entries = 4.5 * md * nd + 4.5 * nd * nd;
    return make(flops, entries);
}

CostEstimate krylov_cost_per_step(std::size_t m, std::size_t n, std::size_t l, std::size_t i) {
    require_domain(m, n, l, 1, i, "krylov_cost_per_step");
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double ld = static_cast<double>(l);
    const double id = static_cast<double>(i);

    // Stated step counts: G, the block products, QR (2mw^2 - 2w^3/3), the
    // n x w problem, its SVD (nw^2), and U = QW (mw^2), with w = (i+1)l.
    const double w = (id + 1.0) * ld;
    const double flops = nd * ld + (3.0 * id + 2.0) * md * nd * ld +
                         w * w * (3.0 * md + nd - (2.0 / 3.0) * w);
    return make(flops, krylov_cost(m, n, l, i).space_entries);
}

CostEstimate randomized_cost(std::size_t m, std::size_t n, std::size_t l, std::size_t i) {
    require_domain(m, n, l, 0, i, "randomized_cost");
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double ld = static_cast<double>(l);
    const double id = static_cast<double>(i);

    const double flops = nd * ld + (2.0 * id + 2.0) * md * nd * ld +
                         ld * ld * (3.0 * md + nd - (2.0 / 3.0) * ld);
    const double entries = md * nd + 3.0 * md * ld + 3.0 * nd * ld + 2.0 * ld * ld;
    return make(flops, entries);
}

CostEstimate randomized_cost_practical(std::size_t m, std::size_t n) {
    if (m < n || n < 1) {
        throw ParamError("randomized_cost_practical: need m >= n >= 1");
    }
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double flops = nd * nd / 2.0 + 2.75 * md * nd * nd + nd * nd * nd / 6.0;
    const double entries = 4.5 * md * nd + 3.0 * nd * nd;
    return make(flops, entries);
}

CostEstimate truncated_cost(std::size_t m, std::size_t n) {
    if (m < n || n < 1) {
        throw ParamError("truncated_cost: need m >= n >= 1");
    }
    const double md = static_cast<double>(m);
    const double nd = static_cast<double>(n);
    const double flops = 2.0 * md * nd * nd + nd * nd * nd + nd + md * nd;
    const double entries = 3.0 * nd * nd + 3.0 * nd + 2.0 * md * nd;
    return make(flops, entries);
}

} // namespace svdkit
