#pragma once

#include <complex>
#include <cstddef>

namespace tyb::kernels {

using cplx = std::complex<double>;

// Dense complex kernels behind all Operator arithmetic. Buffers are
// interleaved re/im doubles (the std::complex<double> layout), matrices are
// square and row-major. matmul's output must not alias the inputs; axpby
// allows out == a or out == b.
struct KernelTable {
    const char* name;
    void (*matmul)(std::size_t n, const cplx* a, const cplx* b, cplx* out);
    void (*axpby)(std::size_t len, cplx alpha, const cplx* a, cplx beta, const cplx* b,
                  cplx* out);
    double (*diff_sqnorm)(std::size_t len, const cplx* a, const cplx* b);
    double (*sqnorm)(std::size_t len, const cplx* a);
};

// Portable reference implementation.
const KernelTable& scalar_table();

// AVX2+FMA variant; nullptr when the build target or the running CPU lacks it.
const KernelTable* avx2_table();

// Runtime-selected table. TYB_KERNELS=scalar forces the reference path
// (read once at first use).
const KernelTable& active_table();

} // namespace tyb::kernels
