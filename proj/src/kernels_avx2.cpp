#include "netprio/kernels.hpp"

#if defined(NETPRIO_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

// AVX2 kernel variants. Each routine runs a 4-wide main loop with
// unaligned loads and finishes the remainder with scalar code. Reductions
// keep four independent lanes until a final horizontal add, so their
// rounding can differ from the scalar reference by ulps.

namespace netprio::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

}  // namespace

void spmv(const SparseMatrix& m, std::span<const double> x, std::span<double> y) {
    const double* vals = m.val.data();
    const std::int32_t* cols = m.col.data();
    const double* xp = x.data();
    for (std::int32_t i = 0; i < m.n; ++i) {
        std::int64_t k = m.row_ptr[i];
        const std::int64_t end = m.row_ptr[i + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; k + 4 <= end; k += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
            const __m256d v = _mm256_loadu_pd(vals + k);
            const __m256d g = _mm256_i32gather_pd(xp, idx, 8);
            acc = _mm256_fmadd_pd(v, g, acc);
        }
        double s = hsum(acc);
        for (; k < end; ++k) {
            s += vals[k] * xp[cols[k]];
        }
        y[i] = s;
    }
}

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
    const std::size_t n = x.size();
    const __m256d av = _mm256_set1_pd(a);
    const __m256d bv = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        const __m256d yv = _mm256_loadu_pd(y.data() + i);
        const __m256d r = _mm256_add_pd(_mm256_mul_pd(av, xv), _mm256_mul_pd(bv, yv));
        _mm256_storeu_pd(out.data() + i, r);
    }
    for (; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

double l1_diff(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        const __m256d yv = _mm256_loadu_pd(y.data() + i);
        acc = _mm256_add_pd(acc, abs_pd(_mm256_sub_pd(xv, yv)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += std::abs(x[i] - y[i]);
    }
    return s;
}

double sum(std::span<const double> x) {
    const std::size_t n = x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        s += x[i];
    }
    return s;
}

MinMax min_max(std::span<const double> x) {
    const std::size_t n = x.size();
    MinMax mm{x[0], x[0]};
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vmin = _mm256_loadu_pd(x.data());
        __m256d vmax = vmin;
        for (i = 4; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_loadu_pd(x.data() + i);
            vmin = _mm256_min_pd(vmin, v);
            vmax = _mm256_max_pd(vmax, v);
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, vmin);
        mm.min = lanes[0];
        for (int l = 1; l < 4; ++l) {
            if (lanes[l] < mm.min) mm.min = lanes[l];
        }
        _mm256_store_pd(lanes, vmax);
        mm.max = lanes[0];
        for (int l = 1; l < 4; ++l) {
            if (lanes[l] > mm.max) mm.max = lanes[l];
        }
    }
    for (; i < n; ++i) {
        if (x[i] < mm.min) mm.min = x[i];
        if (x[i] > mm.max) mm.max = x[i];
    }
    return mm;
}

void add_scaled_shifted(std::span<double> acc, std::span<const double> x, double shift,
                        double scale) {
    const std::size_t n = x.size();
    const __m256d sh = _mm256_set1_pd(shift);
    const __m256d sc = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x.data() + i);
        const __m256d av = _mm256_loadu_pd(acc.data() + i);
        const __m256d r = _mm256_fmadd_pd(_mm256_sub_pd(xv, sh), sc, av);
        _mm256_storeu_pd(acc.data() + i, r);
    }
    for (; i < n; ++i) {
        acc[i] += (x[i] - shift) * scale;
    }
}

}  // namespace netprio::kernels::avx2

#endif  // NETPRIO_HAVE_AVX2
