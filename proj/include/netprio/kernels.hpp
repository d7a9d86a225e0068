#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Dense-vector and sparse matrix-vector kernels behind the diffusion and
// fusion loops. Every kernel has a scalar reference implementation; on
// x86-64 an AVX2 variant is compiled alongside and selected at runtime.
// Within one backend results are fully deterministic (fixed reduction
// order); across backends reductions may differ by rounding only.

namespace netprio::kernels {

// Compressed sparse row matrix. Column indices are 32-bit so the AVX2
// path can gather four of them per step.
struct SparseMatrix {
    std::int32_t n = 0;
    std::vector<std::int64_t> row_ptr;  // size n + 1
    std::vector<std::int32_t> col;      // size nnz
    std::vector<double> val;            // size nnz

    std::int64_t nnz() const noexcept { return static_cast<std::int64_t>(col.size()); }
};

struct MinMax {
    double min = 0.0;
    double max = 0.0;
};

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_supported();

// Best backend supported on this machine.
Backend detect_backend();

Backend active_backend();

// Throws ValidationError when the requested backend is unsupported.
void set_backend(Backend b);

// y = M x. x and y must not alias.
void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y);

// out[i] = a * x[i] + b * y[i]. out may alias x or y.
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);

// sum_i |x[i] - y[i]|
double l1_diff(std::span<const double> x, std::span<const double> y);

double sum(std::span<const double> x);

// Extremes of a non-empty vector.
MinMax min_max(std::span<const double> x);

// acc[i] += (x[i] - shift) * scale
void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale);

namespace scalar {
void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
double l1_diff(std::span<const double> x, std::span<const double> y);
double sum(std::span<const double> x);
MinMax min_max(std::span<const double> x);
void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale);
}  // namespace scalar

#if defined(NETPRIO_HAVE_AVX2)
namespace avx2 {
void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y);
void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
double l1_diff(std::span<const double> x, std::span<const double> y);
double sum(std::span<const double> x);
MinMax min_max(std::span<const double> x);
void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale);
}  // namespace avx2
#endif

}  // namespace netprio::kernels
