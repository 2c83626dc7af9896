#pragma once

#include <random>

#include "mumkit/states.hpp"

namespace mumkit {

using Rng = std::mt19937_64;

/// Haar-random unitary via QR of a Ginibre matrix with the phase convention
/// R_ii > 0.
CMatrix random_unitary(int d, Rng& rng);

CVector random_pure_state(int d, Rng& rng);

/// Full-rank mixed state G G^dag / Tr.
CMatrix random_density_operator(int d, Rng& rng);

DensityMatrix random_product_state(int da, int db, Rng& rng, bool pure = false);

/// Nonnegative vector summing to one (normalized exponentials).
RVector random_schmidt_coefficients(int d, Rng& rng);

}  // namespace mumkit
