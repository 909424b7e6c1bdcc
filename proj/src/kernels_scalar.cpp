#include "tyb/kernels.hpp"

namespace tyb::kernels {

namespace {

void matmul_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* crow = out + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx av = a[i * n + k];
            if (av.real() == 0.0 && av.imag() == 0.0) continue;
            const cplx* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                const cplx bv = brow[j];
                crow[j] += cplx(av.real() * bv.real() - av.imag() * bv.imag(),
                                av.real() * bv.imag() + av.imag() * bv.real());
            }
        }
    }
}

void axpby_scalar(std::size_t len, cplx alpha, const cplx* a, cplx beta, const cplx* b,
                  cplx* out) {
    for (std::size_t i = 0; i < len; ++i) {
        const cplx av = a[i], bv = b[i];
        out[i] = cplx(alpha.real() * av.real() - alpha.imag() * av.imag() +
                          beta.real() * bv.real() - beta.imag() * bv.imag(),
                      alpha.real() * av.imag() + alpha.imag() * av.real() +
                          beta.real() * bv.imag() + beta.imag() * bv.real());
    }
}

double diff_sqnorm_scalar(std::size_t len, const cplx* a, const cplx* b) {
    const double* x = reinterpret_cast<const double*>(a);
    const double* y = reinterpret_cast<const double*>(b);
    double acc = 0.0;
    for (std::size_t i = 0; i < 2 * len; ++i) {
        const double d = x[i] - y[i];
        acc += d * d;
    }
    return acc;
}

double sqnorm_scalar(std::size_t len, const cplx* a) {
    const double* x = reinterpret_cast<const double*>(a);
    double acc = 0.0;
    for (std::size_t i = 0; i < 2 * len; ++i) acc += x[i] * x[i];
    return acc;
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{"scalar", matmul_scalar, axpby_scalar, diff_sqnorm_scalar,
                               sqnorm_scalar};
    return t;
}

} // namespace tyb::kernels
