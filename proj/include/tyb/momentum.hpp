#pragma once

#include <cstdint>
#include <vector>

namespace tyb {

// Momentum vector (p_1..p_N) with the Planck constant h. Conjugation by the
// diagonal exponential operator is never materialized; its entire effect is
// the discrete shift p_k -> p_k + h realized by shift() below.
struct Momentum {
    std::vector<double> p;
    double h = 1.0;
    bool traceless = false;

    int size() const { return static_cast<int>(p.size()); }
    void check_invariants() const; // h > 0, traceless flag honest
};

// p_k -> p_k + steps*h (0-based k). Other components are copied bitwise;
// the traceless flag is dropped since a single shift breaks the sum rule.
Momentum shift(const Momentum& m, int k, int steps);

// Deterministic pseudo-random momentum whose pairwise differences AND sums
// stay at least h/10 away from every integer multiple of h. That distance is
// invariant under integer shifts, so any configuration reachable by +-2
// shifts in any coordinates keeps the same margin. Throws after a bounded
// number of rejection attempts (pathological scale).
Momentum random_generic(int n, double h, std::uint64_t seed, double scale);

} // namespace tyb
