#pragma once

#include <array>
#include <span>
#include <vector>

#include "mumkit/gellmann.hpp"
#include "mumkit/spectra.hpp"

namespace mumkit {

/// One measurement: d positive unit-trace operators summing to the identity.
struct Povm {
    int d = 0;
    std::vector<CMatrix> elements;
};

/// Delta+1 measurements sharing one spectrum, generated from the diagonal
/// base POVM by the family unitaries (U^(0) is the identity).
struct MumFamily {
    int d = 0;
    double kappa = 0.0;
    Spectrum spectrum;
    std::vector<CMatrix> unitaries;
    std::vector<Povm> povms;

    int blocks() const { return static_cast<int>(povms.size()); }
    const CMatrix& element(int b, int n) const { return povms[static_cast<std::size_t>(b)].elements[static_cast<std::size_t>(n)]; }
    /// Traceless part M_n^(b) = P_n^(b) - 1/d.
    CMatrix traceless_part(int b, int n) const;
};

/// Diagonal POVM with [P_n]_jj = 1/d + mu_{(n+j)%d}.
Povm base_povm(const Spectrum& s);

/// d+1 pairwise unbiased basis unitaries: the identity plus, for d = 2 the
/// Hadamard and circular bases, for d = 3 the Fourier family with
/// V = diag(1, w, w), for other primes the shift/clock eigenbases, and for
/// d = 4 a fixed two-qubit table validated at load.
std::vector<CMatrix> mub_unitaries(int d);

MumFamily build_mum_family(const Spectrum& s, std::vector<CMatrix> unitaries);

struct MumReport {
    double max_pairing_residual = 0.0;  // Tr[P_n^(b) P_n'^(b')] against the defining relation
    std::array<int, 4> worst_pair{0, 0, 0, 0};  // (b, n, b', n') of the largest pairing residual
    double max_trace_residual = 0.0;
    double max_purity_residual = 0.0;
    double min_eigenvalue = 0.0;
    double max_completeness_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double max_residual() const;
};

MumReport verify_mum(const MumFamily& f, double tol = 1e-10);

struct UnistochasticReport {
    double max_quadratic_residual = 0.0;  // max_n |sum_jj' mu_{n+j} B_jj' mu_{n+j'}|
    double max_flat_deviation = 0.0;      // max |B_jj' - 1/d|
};

/// B_jj' = |U_jj'|^2 against the unbiasedness criterion for the spectrum.
UnistochasticReport unistochastic_check(const CMatrix& u, const Spectrum& s);

struct SimplexReport {
    double max_length_residual = 0.0;      // | |r| - sqrt(2(kappa-1/d)) |
    double max_within_residual = 0.0;      // within-POVM dot products vs -2(kappa-1/d)/(d-1)
    double max_cross_residual = 0.0;       // cross-POVM dot products vs 0
    bool degenerate = false;               // kappa = 1/d: all vectors vanish
    double tol = 0.0;
    bool pass = false;
};

/// Bloch-vector geometry: equal lengths, the regular-simplex angle within
/// each POVM, orthogonality across POVMs.
SimplexReport simplex_check(const MumFamily& f, const GellMannBasis& basis, double tol = 1e-10);

/// R_kl = 2 Tr{lambda_k U lambda_l U^dag}; orthogonal, and intertwines
/// Bloch vectors with conjugation by U.
RMatrix rotation_from_unitary(const CMatrix& u, const GellMannBasis& basis);

struct CartanOrthReport {
    double max_cross_overlap = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// For every pair b != b', max |Tr{(U_b L_i U_b^dag)^dag (U_b' L_j U_b'^dag)}|
/// over Cartan generators L.
CartanOrthReport cartan_orthogonality_check(std::span<const CMatrix> unitaries,
                                            const GellMannBasis& basis, double tol = 1e-10);

struct MubReport {
    double max_overlap_deviation = 0.0;  // cross-basis | |<e|e'>| - 1/sqrt(d) |
    double tol = 0.0;
    bool pass = false;
};

/// Cross-basis overlap moduli against 1/sqrt(d); bases are unitary matrices
/// whose columns are the basis vectors.
MubReport check_mub(std::span<const CMatrix> bases, double tol = 1e-10);

}  // namespace mumkit
