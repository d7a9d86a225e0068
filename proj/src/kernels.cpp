#include "netprio/kernels.hpp"

#include <atomic>
#include <string>

#include "netprio/errors.hpp"

namespace netprio::kernels {

namespace {

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{detect_backend()};
    return slot;
}

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

bool avx2_supported() {
#if defined(NETPRIO_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect_backend() {
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() {
    return backend_slot().load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported()) {
        throw ValidationError("avx2 kernels are not supported on this machine");
    }
    backend_slot().store(b, std::memory_order_relaxed);
}

#if defined(NETPRIO_HAVE_AVX2)
#define NETPRIO_DISPATCH(fn, ...)                   \
    do {                                            \
        if (active_backend() == Backend::avx2) {    \
            return avx2::fn(__VA_ARGS__);           \
        }                                           \
        return scalar::fn(__VA_ARGS__);             \
    } while (0)
#else
#define NETPRIO_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y) {
    NETPRIO_DISPATCH(spmv, m, x, y);
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    NETPRIO_DISPATCH(axpby, a, x, b, y, out);
}

double l1_diff(std::span<const double> x, std::span<const double> y) {
    NETPRIO_DISPATCH(l1_diff, x, y);
}

double sum(std::span<const double> x) {
    NETPRIO_DISPATCH(sum, x);
}

MinMax min_max(std::span<const double> x) {
    NETPRIO_DISPATCH(min_max, x);
}

void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale) {
    NETPRIO_DISPATCH(add_scaled_shifted, acc, x, shift, scale);
}

#undef NETPRIO_DISPATCH

}  // namespace netprio::kernels
