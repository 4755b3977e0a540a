#pragma once

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "origami/origami.hpp"

namespace origami::testing {

// Uniformly random connected origami on n squares.
inline Origami random_origami(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<int> h(n), v(n);
        for (int i = 0; i < n; ++i) h[i] = v[i] = i;
        std::shuffle(h.begin(), h.end(), rng);
        std::shuffle(v.begin(), v.end(), rng);
        Permutation ph(h), pv(v);
        if (is_transitive(ph, pv)) return make_origami(std::move(ph), std::move(pv));
    }
}

inline double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random parameter in the box [-3,3]^2, bounded away from the degenerate
// values 0 and 1.
inline std::complex<double> random_lambda(std::mt19937_64& rng) {
    for (;;) {
        const std::complex<double> lam(-3.0 + 6.0 * unit_real(rng),
                                       -3.0 + 6.0 * unit_real(rng));
        if (std::abs(lam) < 0.15) continue;
        if (std::abs(lam - std::complex<double>(1.0, 0.0)) < 0.15) continue;
        return lam;
    }
}

} // namespace origami::testing
