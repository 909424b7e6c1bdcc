#pragma once

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>

namespace tyb {

using cplx = std::complex<double>;

// Principal-branch complex power a^x = exp(x Log a). All momentum-dependent
// coefficients use this fixed branch; integer shifts of the exponent then
// compose exactly, a^{x+1} = a * a^x, which the shift recursions rely on.
inline cplx cpow(cplx base, cplx expo) { return std::exp(expo * std::log(base)); }
inline cplx cpow(cplx base, double expo) { return std::exp(expo * std::log(base)); }

// Exact integer power (repeated multiplication, no branch ambiguity).
inline cplx ipow(cplx base, int n) {
    if (n < 0) return 1.0 / ipow(base, -n);
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= base;
    return r;
}

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt17(cplx z) {
    std::string s = fmt17(z.real());
    s += (z.imag() < 0 ? "" : "+");
    s += fmt17(z.imag());
    s += "i";
    return s;
}

} // namespace tyb
