#include "mumkit/gellmann.hpp"

#include <cmath>
#include <string>

namespace mumkit {

GellMannBasis gellmann_basis(int d) {
    if (d < 2) throw InvalidDimensionError("gellmann_basis: dimension must be >= 2, got " + std::to_string(d));
    GellMannBasis basis;
    basis.d = d;
    basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);

    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            CMatrix g = CMatrix::Zero(d, d);
            g(j, k) = 0.5;
            g(k, j) = 0.5;
            basis.generators.push_back(std::move(g));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            CMatrix g = CMatrix::Zero(d, d);
            g(j, k) = Complex(0.0, -0.5);
            g(k, j) = Complex(0.0, 0.5);
            basis.generators.push_back(std::move(g));
        }
    // Cartan generator j: (1/sqrt(2j(j+1))) [ sum_{m<j} |m><m| - j |j><j| ]
    for (int j = 1; j < d; ++j) {
        CMatrix g = CMatrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(2.0 * j * (j + 1));
        for (int m = 0; m < j; ++m) g(m, m) = norm;
        g(j, j) = -norm * j;
        basis.cartan_indices.push_back(static_cast<int>(basis.generators.size()));
        basis.generators.push_back(std::move(g));
    }
    return basis;
}

RVector bloch_vector(const CMatrix& m, const GellMannBasis& basis) {
    if (m.rows() != basis.d || m.cols() != basis.d)
        throw InvalidShapeError("bloch_vector: matrix dimension does not match basis");
    if (std::abs(m.trace()) > 1e-10)
        throw NotTracelessError("bloch_vector: trace magnitude " + std::to_string(std::abs(m.trace())));
    RVector r(static_cast<Eigen::Index>(basis.generators.size()));
    for (std::size_t k = 0; k < basis.generators.size(); ++k)
        r(static_cast<Eigen::Index>(k)) = 2.0 * (m * basis.generators[k]).trace().real();
    return r;
}

CMatrix from_bloch(const RVector& r, const GellMannBasis& basis) {
    if (r.size() != static_cast<Eigen::Index>(basis.generators.size()))
        throw InvalidShapeError("from_bloch: component count does not match basis");
    CMatrix m = CMatrix::Zero(basis.d, basis.d);
    for (std::size_t k = 0; k < basis.generators.size(); ++k)
        m += r(static_cast<Eigen::Index>(k)) * basis.generators[k];
    return m;
}

}  // namespace mumkit
