#pragma once

#include <span>
#include <vector>

#include "mumkit/linalg.hpp"

namespace mumkit {

/// Bipartite density matrix: Hermitian, unit trace, positive semidefinite.
struct DensityMatrix {
    int da = 0;
    int db = 0;
    CMatrix matrix;
};

/// Validates the DensityMatrix invariants and throws ValidationError on
/// failure; returns the wrapped input.
DensityMatrix make_density(int da, int db, CMatrix m);

/// |phi_d^+> = sum_i |ii> / sqrt(d).
CVector max_entangled(int d);

/// alpha |phi+><phi+| + (1 - alpha) I / d^2.
DensityMatrix isotropic(int d, double alpha);

/// N-qubit Dicke state with k excitations, as a 2^N vector.
CVector dicke(int n_qubits, int excitations);

/// Schmidt coefficients of the balanced (n|n) bipartition of a 2n-qubit
/// Dicke state, indexed by the excitation count q on party A,
/// q = max(0, k-n) .. min(n, k).
RVector dicke_schmidt(int half, int excitations);

/// (1-p)|D_N^k><D_N^k| + p I / 2^N, viewed as bipartite with
/// d_A = d_B = 2^(N/2).
DensityMatrix noisy_dicke(int n_qubits, int excitations, double p);

/// The 3x3-system PPT entangled state with five eigenvalues 1/5.
DensityMatrix ppt_bound_state();

struct MixtureComponent {
    double weight = 0.0;
    std::vector<double> schmidt;  // padded with zeros up to d if shorter
};

/// sum_b p_b |psi^(b)><psi^(b)| with psi^(b) = (conj(U^(b)) (x) U^(b)) sum_n
/// sqrt(lambda_n) |nn>, the U^(b) drawn from mub_unitaries(d).
DensityMatrix mub_schmidt_mixture(std::span<const MixtureComponent> components, int d);

/// Local change of frame making the given Schmidt bases computational:
/// (T_A (x) T_B)^dag rho (T_A (x) T_B) with T columns the basis vectors.
DensityMatrix align_to_schmidt_basis(const DensityMatrix& rho, const SchmidtDecomposition& sd);

}  // namespace mumkit
