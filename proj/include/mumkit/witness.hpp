#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mumkit/mum.hpp"
#include "mumkit/ortho.hpp"
#include "mumkit/states.hpp"

namespace mumkit {

/// A family of measurements plus one orthogonal rotation per measurement and
/// the subset of measurement blocks entering the witness.
struct WitnessConfig {
    MumFamily family;
    std::vector<RotationFixingDiagonal> rotations;
    std::vector<int> included_blocks;
};

/// Full-family config with identity rotations.
WitnessConfig default_config(MumFamily family);

WitnessConfig make_config(MumFamily family, std::vector<RotationFixingDiagonal> rotations,
                          std::vector<int> included_blocks);

struct WitnessResult {
    double kappa = 0.0;
    std::vector<double> block_values;
    double m_total = 0.0;
    double w_expectation = 0.0;  // (kappa - 1/d) - m_total
    bool detected = false;       // w_expectation < -1e-10
};

/// Traceless correlation matrix sum_b sum_kl O_kl conj(M_l^b) (x) M_k^b.
CMatrix m_kappa(const WitnessConfig& cfg);

/// Witness operator; with s included blocks the constant is (d kappa + s - 1)/d,
/// which reduces to (d kappa + Delta)/d for the full family.
CMatrix witness_matrix(const WitnessConfig& cfg);

/// Blockwise expectation via the locally rotated states
/// rho^(b) = (conj(U_b) (x) U_b)^dag rho (conj(U_b) (x) U_b).
WitnessResult evaluate(const WitnessConfig& cfg, const DensityMatrix& rho);

/// ((sum sqrt(lambda))^2 - 1)/(d - 1) for a unit-sum coefficient vector;
/// zero for products, one for maximally entangled states. When d = 0 the
/// local dimension defaults to the sequence length.
double entanglement_monotone(std::span<const double> schmidt, int d = 0);

/// Expected block values of a pure state with the given Schmidt coefficients:
/// (kappa - 1/d) for the aligned pair, (kappa - 1/d) E(psi) for any
/// complementary pair.
std::pair<double, double> pure_state_values(std::span<const double> schmidt, double kappa, int d);

/// Correlation sum over paired projective measurements; at most 1 + Delta/d
/// on separable states.
double spengler_index(std::span<const CMatrix> bases_a, std::span<const CMatrix> bases_b,
                      const DensityMatrix& rho);

/// Correlation sum over two complete measurement families with equal purity;
/// at most 1 + kappa on separable states.
double chen_index(const MumFamily& family_a, const MumFamily& family_b, const DensityMatrix& rho);

/// The positive trace-preserving map behind the witness, defined at kappa = 1:
/// phi X = (I/d) Tr X - 1/(d-1) sum_b sum_kl O_kl Tr{(X - (I/d)TrX) E_l^b} E_k^b.
CMatrix positive_map_apply(const CMatrix& x, const WitnessConfig& cfg);

struct OptimizeResult {
    std::vector<double> thetas;  // one angle per included block
    WitnessResult best;
};

/// Deterministic per-block grid search over rotations about the diagonal
/// axis, minimizing the witness expectation; ties resolve to the smallest
/// angle.
OptimizeResult optimize_rotations_d3(const MumFamily& family, const DensityMatrix& rho,
                                     std::span<const int> blocks, double grid_step);

}  // namespace mumkit
