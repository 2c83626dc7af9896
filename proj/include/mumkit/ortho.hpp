#pragma once

#include <span>

#include "mumkit/spectra.hpp"

namespace mumkit {

/// Circulant orthogonal matrix built from a spectrum:
/// Q_{nj} = q * mu_{(n + d - j) % d} + 1/d with q = sqrt((1-1/d)/(kappa-1/d)).
/// Rows and columns sum to 1, so Q fixes n* = (1,...,1)/sqrt(d).
struct QMatrix {
    int d = 0;
    RMatrix entries;
    double q_factor = 0.0;
};

/// Real orthogonal matrix with O n* = n*.
struct RotationFixingDiagonal {
    int d = 0;
    RMatrix entries;
};

QMatrix q_matrix(const Spectrum& s);

RotationFixingDiagonal identity_rotation(int d);

/// Rotation of R^3 about the diagonal axis n* by theta (Rodrigues form);
/// trace is 1 + 2 cos(theta).
RotationFixingDiagonal rotation_d3(double theta);

/// Permutation matrix P with P_{j, map[j]} = 1.
RotationFixingDiagonal permutation_rotation(int d, std::span<const int> map);

/// The permutation r -> (d - r) % d.
RotationFixingDiagonal anticyclic_rotation(int d);

/// Q^T O Q.
RotationFixingDiagonal conjugate_rotation(const QMatrix& q, const RotationFixingDiagonal& o);

/// Preset rotation under which a measurement pair complementary to an
/// aligned pure state attains the block value (kappa - 1/d) E(psi).
RotationFixingDiagonal complementary_block_rotation(const QMatrix& q);

}  // namespace mumkit
