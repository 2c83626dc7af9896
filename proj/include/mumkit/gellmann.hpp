#pragma once

#include <vector>

#include "mumkit/linalg.hpp"

namespace mumkit {

/// Generalized Gell-Mann generators of su(d), normalized so that
/// Tr{lambda_k lambda_l} = delta_kl / 2. Ordering: symmetric off-diagonal
/// pairs (j<k), antisymmetric pairs (j<k), then the d-1 diagonal Cartan
/// generators.
struct GellMannBasis {
    int d = 0;
    std::vector<CMatrix> generators;
    std::vector<int> cartan_indices;
};

GellMannBasis gellmann_basis(int d);

/// Components r_k = 2 Tr{M lambda_k} of a traceless Hermitian M.
RVector bloch_vector(const CMatrix& m, const GellMannBasis& basis);

/// sum_k r_k lambda_k.
CMatrix from_bloch(const RVector& r, const GellMannBasis& basis);

}  // namespace mumkit
