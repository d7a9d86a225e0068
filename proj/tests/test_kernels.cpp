#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "netprio/errors.hpp"
#include "netprio/kernels.hpp"
#include "netprio/rng.hpp"
#include "support/oracles.hpp"

using namespace netprio;
using namespace netprio::testing;

namespace {

std::vector<double> random_vector(Rng& rng, std::size_t n, double lo = -10.0, double hi = 10.0) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(lo, hi);
    return v;
}

kernels::SparseMatrix random_sparse(Rng& rng, std::int32_t n, double density) {
    kernels::SparseMatrix m;
    m.n = n;
    m.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t i = 0; i < n; ++i) {
        for (std::int32_t j = 0; j < n; ++j) {
            if (rng.uniform() < density) {
                m.col.push_back(j);
                m.val.push_back(rng.uniform(-1.0, 1.0));
            }
        }
        m.row_ptr[static_cast<std::size_t>(i) + 1] = static_cast<std::int64_t>(m.col.size());
    }
    return m;
}

std::vector<double> naive_spmv(const kernels::SparseMatrix& m, const std::vector<double>& x) {
    std::vector<double> y(static_cast<std::size_t>(m.n), 0.0);
    for (std::int32_t i = 0; i < m.n; ++i) {
        double acc = 0.0;
        for (std::int64_t k = m.row_ptr[static_cast<std::size_t>(i)];
             k < m.row_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
            acc += m.val[static_cast<std::size_t>(k)] *
                   x[static_cast<std::size_t>(m.col[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(i)] = acc;
    }
    return y;
}

}  // namespace

TEST_CASE("scalar spmv matches a naive triple loop") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = static_cast<std::int32_t>(1 + rng.below(40));
        const auto m = random_sparse(rng, n, 0.3);
        const auto x = random_vector(rng, static_cast<std::size_t>(n));
        std::vector<double> y(static_cast<std::size_t>(n), -1.0);
        kernels::scalar::spmv(m, x, y);
        const auto want = naive_spmv(m, x);
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(y[i] == doctest::Approx(want[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("scalar reductions match simple accumulations") {
    Rng rng(12);
    const auto x = random_vector(rng, 137);
    const auto y = random_vector(rng, 137);

    double s = 0.0, l1 = 0.0, lo = x[0], hi = x[0];
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i];
        l1 += std::abs(x[i] - y[i]);
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    CHECK(kernels::scalar::sum(x) == doctest::Approx(s).epsilon(1e-13));
    CHECK(kernels::scalar::l1_diff(x, y) == doctest::Approx(l1).epsilon(1e-13));
    const auto mm = kernels::scalar::min_max(x);
    CHECK(mm.min == lo);
    CHECK(mm.max == hi);
}

TEST_CASE("scalar axpby and add_scaled_shifted elementwise definitions") {
    Rng rng(13);
    const auto x = random_vector(rng, 71);
    const auto y = random_vector(rng, 71);
    std::vector<double> out(71, 0.0);
    kernels::scalar::axpby(0.85, x, 0.15, y, out);
    for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out[i] == doctest::Approx(0.85 * x[i] + 0.15 * y[i]).epsilon(1e-14));
    }

    auto acc = y;
    kernels::scalar::add_scaled_shifted(acc, x, 2.5, 0.5);
    for (std::size_t i = 0; i < acc.size(); ++i) {
        CHECK(acc[i] == doctest::Approx(y[i] + (x[i] - 2.5) * 0.5).epsilon(1e-14));
    }
}

TEST_CASE("axpby may alias its inputs") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> y = {10.0, 20.0, 30.0, 40.0, 50.0};
    kernels::scalar::axpby(2.0, x, 1.0, y, x);
    const std::vector<double> want = {12.0, 24.0, 36.0, 48.0, 60.0};
    CHECK(x == want);
}

TEST_CASE("kernels handle tiny and empty extents") {
    const std::vector<double> empty;
    CHECK(kernels::scalar::sum(empty) == 0.0);
    CHECK(kernels::scalar::l1_diff(empty, empty) == 0.0);

    const std::vector<double> one = {3.5};
    CHECK(kernels::scalar::sum(one) == 3.5);
    const auto mm = kernels::scalar::min_max(one);
    CHECK(mm.min == 3.5);
    CHECK(mm.max == 3.5);
}

TEST_CASE("backend selection is explicit and validated") {
    const auto original = kernels::active_backend();
    kernels::set_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    if (kernels::avx2_supported()) {
        kernels::set_backend(kernels::Backend::avx2);
        CHECK(kernels::active_backend() == kernels::Backend::avx2);
    } else {
        CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::avx2), ValidationError);
    }
    kernels::set_backend(original);
}

#if defined(NETPRIO_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar within rounding") {
    if (!kernels::avx2_supported()) return;
    Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        // Sizes straddle the 4-lane boundaries so tails are exercised.
        const auto n = static_cast<std::int32_t>(1 + rng.below(67));
        const auto nn = static_cast<std::size_t>(n);
        const auto m = random_sparse(rng, n, 0.25);
        const auto x = random_vector(rng, nn);
        const auto y = random_vector(rng, nn);

        std::vector<double> ys(nn), yv(nn);
        kernels::scalar::spmv(m, x, ys);
        kernels::avx2::spmv(m, x, yv);
        for (std::size_t i = 0; i < nn; ++i) {
            CHECK(yv[i] == doctest::Approx(ys[i]).epsilon(1e-12));
        }

        std::vector<double> os(nn), ov(nn);
        kernels::scalar::axpby(0.85, x, 0.15, y, os);
        kernels::avx2::axpby(0.85, x, 0.15, y, ov);
        for (std::size_t i = 0; i < nn; ++i) {
            CHECK(ov[i] == doctest::Approx(os[i]).epsilon(1e-14));
        }

        CHECK(kernels::avx2::sum(x) == doctest::Approx(kernels::scalar::sum(x)).epsilon(1e-12));
        CHECK(kernels::avx2::l1_diff(x, y) ==
              doctest::Approx(kernels::scalar::l1_diff(x, y)).epsilon(1e-12));

        const auto ms = kernels::scalar::min_max(x);
        const auto mv = kernels::avx2::min_max(x);
        CHECK(mv.min == ms.min);
        CHECK(mv.max == ms.max);

        auto as = y;
        auto av = y;
        kernels::scalar::add_scaled_shifted(as, x, 0.3, 1.7);
        kernels::avx2::add_scaled_shifted(av, x, 0.3, 1.7);
        for (std::size_t i = 0; i < nn; ++i) {
            CHECK(av[i] == doctest::Approx(as[i]).epsilon(1e-13));
        }
    }
}

TEST_CASE("each backend is deterministic run to run") {
    if (!kernels::avx2_supported()) return;
    Rng rng(15);
    const auto m = random_sparse(rng, 53, 0.3);
    const auto x = random_vector(rng, 53);
    for (auto impl : {kernels::Backend::scalar, kernels::Backend::avx2}) {
        kernels::set_backend(impl);
        std::vector<double> y1(53), y2(53);
        kernels::spmv(m, x, y1);
        kernels::spmv(m, x, y2);
        CHECK(y1 == y2);
        CHECK(kernels::sum(x) == kernels::sum(x));
        CHECK(kernels::l1_diff(x, y1) == kernels::l1_diff(x, y2));
    }
    kernels::set_backend(kernels::detect_backend());
}
#endif
