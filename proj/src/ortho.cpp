#include "mumkit/ortho.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace mumkit {

QMatrix q_matrix(const Spectrum& s) {
    const int d = s.d;
    if (d < 2) throw InvalidDimensionError("q_matrix: dimension must be >= 2");
    if (s.kappa <= 1.0 / d + 1e-14)
        throw DegeneratePurityError("q_matrix: q undefined at kappa = 1/d");
    QMatrix q;
    q.d = d;
    q.q_factor = std::sqrt((1.0 - 1.0 / d) / (s.kappa - 1.0 / d));
    q.entries = RMatrix(d, d);
    for (int n = 0; n < d; ++n)
        for (int j = 0; j < d; ++j) q.entries(n, j) = q.q_factor * s.mu((n + d - j) % d) + 1.0 / d;
    return q;
}

RotationFixingDiagonal identity_rotation(int d) {
    if (d < 1) throw InvalidDimensionError("identity_rotation: dimension must be >= 1");
    return {d, RMatrix::Identity(d, d)};
}

RotationFixingDiagonal rotation_d3(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double n = 1.0 / std::sqrt(3.0);
    RMatrix r(3, 3);
    // R_ij = n_i n_j (1 - cos) + delta_ij cos - eps_ijk n_k sin, axis (1,1,1)/sqrt(3)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = n * n * (1.0 - c) + (i == j ? c : 0.0);
    r(0, 1) -= n * s;
    r(1, 0) += n * s;
    r(0, 2) += n * s;
    r(2, 0) -= n * s;
    r(1, 2) -= n * s;
    r(2, 1) += n * s;
    return {3, r};
}

RotationFixingDiagonal permutation_rotation(int d, std::span<const int> map) {
    if (d < 1) throw InvalidDimensionError("permutation_rotation: dimension must be >= 1");
    if (static_cast<int>(map.size()) != d)
        throw InvalidPermutationError("permutation_rotation: map length != d");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : map) {
        if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
            throw InvalidPermutationError("permutation_rotation: map is not a bijection on 0..d-1");
        seen[static_cast<std::size_t>(v)] = true;
    }
    RMatrix p = RMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) p(j, map[static_cast<std::size_t>(j)]) = 1.0;
    return {d, p};
}

RotationFixingDiagonal anticyclic_rotation(int d) {
    std::vector<int> map(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) map[static_cast<std::size_t>(r)] = (d - r) % d;
    return permutation_rotation(d, map);
}

RotationFixingDiagonal conjugate_rotation(const QMatrix& q, const RotationFixingDiagonal& o) {
    if (q.d != o.d) throw InvalidShapeError("conjugate_rotation: dimension mismatch");
    return {q.d, RMatrix(q.entries.transpose() * o.entries * q.entries)};
}

RotationFixingDiagonal complementary_block_rotation(const QMatrix& q) {
    return identity_rotation(q.d);
}

}  // namespace mumkit
