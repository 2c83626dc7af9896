#include "mumkit/sampling.hpp"

namespace mumkit {

namespace {

CMatrix ginibre(int rows, int cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    return g;
}

}  // namespace

CMatrix random_unitary(int d, Rng& rng) {
    const CMatrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

CVector random_pure_state(int d, Rng& rng) {
    CVector psi = ginibre(d, 1, rng).col(0);
    psi /= psi.norm();
    return psi;
}

CMatrix random_density_operator(int d, Rng& rng) {
    const CMatrix g = ginibre(d, d, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

DensityMatrix random_product_state(int da, int db, Rng& rng, bool pure) {
    CMatrix a, b;
    if (pure) {
        const CVector pa = random_pure_state(da, rng);
        const CVector pb = random_pure_state(db, rng);
        a = pa * pa.adjoint();
        b = pb * pb.adjoint();
    } else {
        a = random_density_operator(da, rng);
        b = random_density_operator(db, rng);
    }
    return make_density(da, db, tensor(a, b));
}

RVector random_schmidt_coefficients(int d, Rng& rng) {
    std::exponential_distribution<double> expo(1.0);
    RVector lam(d);
    double total = 0.0;
    for (int i = 0; i < d; ++i) {
        lam(i) = expo(rng);
        total += lam(i);
    }
    lam /= total;
    return lam;
}

}  // namespace mumkit
