#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "mumkit/sampling.hpp"
#include "mumkit/spectra.hpp"

namespace mumkit::test {

inline double max_diff(const CMatrix& a, const CMatrix& b) { return max_abs(CMatrix(a - b)); }
inline double max_diff(const RMatrix& a, const RMatrix& b) { return max_abs(RMatrix(a - b)); }

inline CMatrix random_hermitian(int d, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return CMatrix((g + g.adjoint()) / 2.0);
}

inline CMatrix random_traceless_hermitian(int d, Rng& rng) {
    CMatrix h = random_hermitian(d, rng);
    h -= (h.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
    return h;
}

/// Uniform phases, shrunk toward the (always feasible) origin until the
/// positivity bound holds.
inline std::vector<double> feasible_phases(int d, double kappa, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 2.0 * 3.14159265358979323846);
    std::vector<double> phases(static_cast<std::size_t>(independent_param_count(d)));
    for (auto& p : phases) p = unif(rng);
    for (int tries = 0; tries < 64; ++tries) {
        try {
            synthesize_spectrum(d, kappa, phases);
            return phases;
        } catch (const InfeasibleParametersError&) {
            for (auto& p : phases) p /= 2.0;
        }
    }
    std::fill(phases.begin(), phases.end(), 0.0);
    return phases;
}

inline Spectrum random_feasible_spectrum(int d, double kappa, Rng& rng) {
    return synthesize_spectrum(d, kappa, feasible_phases(d, kappa, rng));
}

}  // namespace mumkit::test
