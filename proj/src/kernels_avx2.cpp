#include "tyb/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define TYB_AVX2_BUILD 1
#include <immintrin.h>
#else
#define TYB_AVX2_BUILD 0
#endif

namespace tyb::kernels {

#if TYB_AVX2_BUILD

namespace {

// One __m256d holds two complex doubles as (re0, im0, re1, im1).
// Complex multiply by a broadcast scalar s = sr + i*si:
//   t    = si * swap(v)            -> (si*im0, si*re0, ...)
//   prod = fmaddsub(sr, v, t)      -> (sr*re0 - si*im0, sr*im0 + si*re0, ...)

__attribute__((target("avx2,fma"))) void matmul_avx2(std::size_t n, const cplx* a,
                                                     const cplx* b, cplx* out) {
    const double* B = reinterpret_cast<const double*>(b);
    double* C = reinterpret_cast<double*>(out);
    const std::size_t row = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = C + i * row;
        for (std::size_t j = 0; j < row; ++j) crow[j] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx av = a[i * n + k];
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            const __m256d are = _mm256_set1_pd(av.real());
            const __m256d aim = _mm256_set1_pd(av.imag());
            const double* brow = B + k * row;
            std::size_t j = 0;
            for (; j + 4 <= row; j += 4) {
                const __m256d bv = _mm256_loadu_pd(brow + j);
                const __m256d bs = _mm256_permute_pd(bv, 0x5);
                const __m256d t = _mm256_mul_pd(aim, bs);
                const __m256d prod = _mm256_fmaddsub_pd(are, bv, t);
                const __m256d cv = _mm256_loadu_pd(crow + j);
                _mm256_storeu_pd(crow + j, _mm256_add_pd(cv, prod));
            }
            for (; j < row; j += 2) { // odd-n tail: one complex entry
                const double br = brow[j], bi = brow[j + 1];
                crow[j] += av.real() * br - av.imag() * bi;
                crow[j + 1] += av.real() * bi + av.imag() * br;
            }
        }
    }
}

__attribute__((target("avx2,fma"))) void axpby_avx2(std::size_t len, cplx alpha,
                                                    const cplx* a, cplx beta, const cplx* b,
                                                    cplx* out) {
    const double* A = reinterpret_cast<const double*>(a);
    const double* B = reinterpret_cast<const double*>(b);
    double* O = reinterpret_cast<double*>(out);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const __m256d br = _mm256_set1_pd(beta.real());
    const __m256d bi = _mm256_set1_pd(beta.imag());
    const std::size_t m = 2 * len;
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d av = _mm256_loadu_pd(A + j);
        const __m256d bv = _mm256_loadu_pd(B + j);
        const __m256d pa = _mm256_fmaddsub_pd(ar, av, _mm256_mul_pd(ai, _mm256_permute_pd(av, 0x5)));
        const __m256d pb = _mm256_fmaddsub_pd(br, bv, _mm256_mul_pd(bi, _mm256_permute_pd(bv, 0x5)));
        _mm256_storeu_pd(O + j, _mm256_add_pd(pa, pb));
    }
    for (; j < m; j += 2) {
        const cplx av(A[j], A[j + 1]), bv(B[j], B[j + 1]);
        const cplx r = cplx(alpha.real() * av.real() - alpha.imag() * av.imag() +
                                beta.real() * bv.real() - beta.imag() * bv.imag(),
                            alpha.real() * av.imag() + alpha.imag() * av.real() +
                                beta.real() * bv.imag() + beta.imag() * bv.real());
        O[j] = r.real();
        O[j + 1] = r.imag();
    }
}

__attribute__((target("avx2,fma"))) double diff_sqnorm_avx2(std::size_t len, const cplx* a,
                                                            const cplx* b) {
    const double* x = reinterpret_cast<const double*>(a);
    const double* y = reinterpret_cast<const double*>(b);
    const std::size_t m = 2 * len;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double r = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; j < m; ++j) {
        const double d = x[j] - y[j];
        r += d * d;
    }
    return r;
}

__attribute__((target("avx2,fma"))) double sqnorm_avx2(std::size_t len, const cplx* a) {
    const double* x = reinterpret_cast<const double*>(a);
    const std::size_t m = 2 * len;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= m; j += 4) {
        const __m256d v = _mm256_loadu_pd(x + j);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double r = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; j < m; ++j) r += x[j] * x[j];
    return r;
}

bool cpu_has_avx2_fma() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

} // namespace

const KernelTable* avx2_table() {
    static const KernelTable t{"avx2", matmul_avx2, axpby_avx2, diff_sqnorm_avx2, sqnorm_avx2};
    static const bool ok = cpu_has_avx2_fma();
    return ok ? &t : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif // TYB_AVX2_BUILD

} // namespace tyb::kernels
