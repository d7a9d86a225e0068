#include <cmath>
#include <cstddef>

#include "netprio/kernels.hpp"

// Reference kernels. Plain sequential loops, one fixed reduction order;
// the SIMD variants are checked against these.

namespace netprio::kernels::scalar {

void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y) {
    for (std::int32_t i = 0; i < m.n; ++i) {
        double acc = 0.0;
        const std::int64_t end = m.row_ptr[i + 1];
        for (std::int64_t k = m.row_ptr[i]; k < end; ++k) {
            acc += m.val[k] * x[m.col[k]];
        }
        y[i] = acc;
    }
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

double l1_diff(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::abs(x[i] - y[i]);
    }
    return acc;
}

double sum(std::span<const double> x) {
    double acc = 0.0;
    for (const double v : x) {
        acc += v;
    }
    return acc;
}

MinMax min_max(std::span<const double> x) {
    MinMax mm{x[0], x[0]};
    for (const double v : x.subspan(1)) {
        if (v < mm.min) mm.min = v;
        if (v > mm.max) mm.max = v;
    }
    return mm;
}

void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] += (x[i] - shift) * scale;
    }
}

}  // namespace netprio::kernels::scalar
