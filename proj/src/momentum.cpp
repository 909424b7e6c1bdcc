#include "tyb/momentum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tyb {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

double dist_to_integers(double x) { return std::abs(x - std::round(x)); }

} // namespace

void Momentum::check_invariants() const {
    if (!(h > 0.0)) throw std::invalid_argument("Momentum: h must be positive");
    if (traceless) {
        double s = 0.0;
        for (double v : p) s += v;
        if (std::abs(s) >= 1e-12)
            throw std::invalid_argument("Momentum: traceless flag set but sum(p) = " +
                                        std::to_string(s));
    }
}

Momentum shift(const Momentum& m, int k, int steps) {
    if (k < 0 || k >= m.size()) throw std::out_of_range("shift: index out of range");
    Momentum out = m;
    out.p[static_cast<std::size_t>(k)] += static_cast<double>(steps) * m.h;
    out.traceless = false;
    return out;
}

Momentum random_generic(int n, double h, std::uint64_t seed, double scale) {
    if (n < 1) throw std::invalid_argument("random_generic: n must be >= 1");
    if (!(h > 0.0)) throw std::invalid_argument("random_generic: h must be positive");
    if (!(scale > 0.0)) throw std::invalid_argument("random_generic: scale must be positive");

    std::uint64_t state = seed ^ 0xD1B54A32D192ED03ULL;
    constexpr int kMaxAttempts = 8192;
    Momentum m;
    m.h = h;
    m.p.resize(static_cast<std::size_t>(n));
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        for (double& v : m.p) v = scale * (2.0 * uniform01(state) - 1.0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                const double d = (m.p[i] - m.p[j]) / h;
                const double s = (m.p[i] + m.p[j]) / h;
                if (dist_to_integers(d) < 0.1 || dist_to_integers(s) < 0.1) ok = false;
            }
        if (ok) return m;
    }
    throw std::runtime_error("random_generic: no generic point found after " +
                             std::to_string(kMaxAttempts) + " attempts (scale " +
                             std::to_string(scale) + " too small relative to h)");
}

} // namespace tyb
