// Benchmark comparing the OpenMP kernels against their serial references:
// normal-ordered products (closed-form contraction vs single-swap rewriting)
// and the Dirac kernel elimination.

#include "dra/polymodule.hpp"
#include "dra/weyl_clifford.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <random>

using namespace dra;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

WCElement random_element(const Algebra& alg, int terms, int max_deg, std::mt19937_64& rng) {
    WCElement e(alg.n());
    const size_t nn = static_cast<size_t>(alg.n());
    for (int t = 0; t < terms; ++t) {
        WCMonomial m;
        m.x.resize(nn);
        m.d.resize(nn);
        for (size_t i = 0; i < nn; ++i) {
            m.x[i] = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(max_deg + 1));
            m.d[i] = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(max_deg + 1));
        }
        m.gammas = static_cast<GammaSet>(rng() % (GammaSet(1) << alg.n()));
        long num = static_cast<long>(rng() % 19) - 9;
        if (num == 0) num = 1;
        e.add_term(std::move(m), Scalar(Rational(num, 1 + static_cast<long>(rng() % 4))));
    }
    return e;
}

void bench_mul(const Algebra& alg, int terms, int max_deg) {
    std::mt19937_64 rng(42);
    WCElement a = random_element(alg, terms, max_deg, rng);
    WCElement b = random_element(alg, terms, max_deg, rng);

    auto t0 = std::chrono::steady_clock::now();
    WCElement fast = alg.mul(a, b);
    auto t1 = std::chrono::steady_clock::now();
    WCElement ref = alg.mul_reference(a, b);
    auto t2 = std::chrono::steady_clock::now();

    std::printf("  mul %3d terms, deg<=%d: contraction %8.4fs  rewriting %8.4fs  %s\n", terms,
                max_deg, seconds(t0, t1), seconds(t1, t2), fast == ref ? "equal" : "MISMATCH");
}

void bench_kernel(const Algebra& alg, int degree) {
    auto t0 = std::chrono::steady_clock::now();
    auto par = dirac_kernel(degree, alg); // cold: the cache starts empty per degree
    auto t1 = std::chrono::steady_clock::now();
    auto ser = dirac_kernel_serial(degree, alg);
    auto t2 = std::chrono::steady_clock::now();
    std::printf("  dirac_kernel n=%d degree=%d: parallel %8.4fs  serial %8.4fs  dim %zu  %s\n",
                alg.n(), degree, seconds(t0, t1), seconds(t1, t2), par.size(),
                par == ser ? "equal" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif

    Algebra a3(Metric::euclidean(3));
    Algebra a4(Metric::lorentzian(4));

    std::printf("normal-ordered product, n=3 euclidean:\n");
    bench_mul(a3, 8, 2);
    bench_mul(a3, 32, 3);
    bench_mul(a3, 48, 3);

    std::printf("normal-ordered product, n=4 lorentzian:\n");
    bench_mul(a4, 32, 3);

    std::printf("Dirac kernel elimination:\n");
    bench_kernel(a3, 4);
    bench_kernel(a3, 5);
    bench_kernel(a4, 4);
    bench_kernel(a4, 5);
    return 0;
}
