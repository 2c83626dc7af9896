#include "mumkit/states.hpp"

#include <cmath>
#include <string>

#include "mumkit/mum.hpp"

namespace mumkit {

DensityMatrix make_density(int da, int db, CMatrix m) {
    const Eigen::Index n = static_cast<Eigen::Index>(da) * db;
    if (da < 1 || db < 1 || m.rows() != n || m.cols() != n)
        throw InvalidShapeError("make_density: matrix shape does not match dims");
    if (!is_hermitian(m, 1e-12)) throw ValidationError("make_density: matrix not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-10)
        throw ValidationError("make_density: trace " + std::to_string(m.trace().real()) + " != 1");
    if (min_eigenvalue(m) < -1e-10)
        throw ValidationError("make_density: negative eigenvalue " + std::to_string(min_eigenvalue(m)));
    return {da, db, std::move(m)};
}

CVector max_entangled(int d) {
    if (d < 2) throw InvalidDimensionError("max_entangled: dimension must be >= 2");
    CVector psi = CVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) psi(static_cast<Eigen::Index>(i) * d + i) = a;
    return psi;
}

DensityMatrix isotropic(int d, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw ValidationError("isotropic: alpha = " + std::to_string(alpha) + " outside [0, 1)");
    const CVector phi = max_entangled(d);
    CMatrix m = alpha * (phi * phi.adjoint());
    m += (1.0 - alpha) / (d * d) * CMatrix::Identity(d * d, d * d);
    return make_density(d, d, std::move(m));
}

CVector dicke(int n_qubits, int excitations) {
    if (n_qubits < 1 || n_qubits > 20)
        throw InvalidDimensionError("dicke: qubit count must be in [1, 20]");
    if (excitations < 0 || excitations > n_qubits)
        throw ValidationError("dicke: excitation count " + std::to_string(excitations) +
                              " outside [0, " + std::to_string(n_qubits) + "]");
    const long size = 1L << n_qubits;
    CVector psi = CVector::Zero(size);
    long count = 0;
    for (long idx = 0; idx < size; ++idx) {
        if (__builtin_popcountl(static_cast<unsigned long>(idx)) == excitations) {
            psi(idx) = 1.0;
            ++count;
        }
    }
    psi /= std::sqrt(static_cast<double>(count));
    return psi;
}

RVector dicke_schmidt(int half, int excitations) {
    const int n = half;
    const int k = excitations;
    if (n < 1) throw InvalidDimensionError("dicke_schmidt: half size must be >= 1");
    if (k < 0 || k > 2 * n)
        throw ValidationError("dicke_schmidt: excitation count outside [0, 2n]");
    const int q_lo = std::max(0, k - n);
    const int q_hi = std::min(n, k);
    auto lfact = [](int m) {
        double v = 0.0;
        for (int i = 2; i <= m; ++i) v += std::log(static_cast<double>(i));
        return v;
    };
    const int nq = 2 * n;
    // lambda_q = N! / (C(N,k) C(N,n) q! (n-q)! (k-q)! (n-k+q)!)
    const double log_pref = lfact(nq) - (lfact(nq) - lfact(k) - lfact(nq - k)) -
                            (lfact(nq) - lfact(n) - lfact(n));
    RVector lam(q_hi - q_lo + 1);
    for (int q = q_lo; q <= q_hi; ++q) {
        const double log_den = lfact(q) + lfact(n - q) + lfact(k - q) + lfact(n - k + q);
        lam(q - q_lo) = std::exp(log_pref - log_den);
    }
    return lam;
}

DensityMatrix noisy_dicke(int n_qubits, int excitations, double p) {
    if (p < 0.0 || p > 1.0) throw ValidationError("noisy_dicke: p outside [0, 1]");
    if (n_qubits % 2 != 0)
        throw ValidationError("noisy_dicke: qubit count must be even for the balanced bipartition");
    const CVector psi = dicke(n_qubits, excitations);
    const Eigen::Index dim = psi.size();
    CMatrix m = (1.0 - p) * (psi * psi.adjoint());
    m += p / static_cast<double>(dim) * CMatrix::Identity(dim, dim);
    const int local = 1 << (n_qubits / 2);
    return make_density(local, local, std::move(m));
}

DensityMatrix ppt_bound_state() {
    static const double entries[9][9] = {
        {1, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, 2, 0, 0, 0, -1, -1, 0, 0},
        {0, 0, 2, -1, 0, 0, 0, -1, 0},
        {0, 0, -1, 2, 0, 0, 0, -1, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, -1, 0, 0, 0, 2, -1, 0, 0},
        {0, -1, 0, 0, 0, -1, 2, 0, 0},
        {0, 0, -1, -1, 0, 0, 0, 2, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, 1}};
    CMatrix m(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) m(i, j) = entries[i][j] / 15.0;
    return make_density(3, 3, std::move(m));
}

DensityMatrix mub_schmidt_mixture(std::span<const MixtureComponent> components, int d) {
    if (components.empty()) throw ValidationError("mub_schmidt_mixture: no components");
    const auto unitaries = mub_unitaries(d);
    if (components.size() > unitaries.size())
        throw ValidationError("mub_schmidt_mixture: more components than available unbiased bases (" +
                              std::to_string(unitaries.size()) + ")");
    double wsum = 0.0;
    for (const auto& c : components) {
        if (c.weight < -1e-14) throw ValidationError("mub_schmidt_mixture: negative weight");
        wsum += c.weight;
    }
    if (std::abs(wsum - 1.0) > 1e-10)
        throw ValidationError("mub_schmidt_mixture: weights sum to " + std::to_string(wsum));

    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    for (std::size_t b = 0; b < components.size(); ++b) {
        const auto& comp = components[b];
        if (static_cast<int>(comp.schmidt.size()) > d)
            throw ValidationError("mub_schmidt_mixture: component " + std::to_string(b) +
                                  " has more than d coefficients");
        double lsum = 0.0;
        for (double l : comp.schmidt) {
            if (l < -1e-14) throw ValidationError("mub_schmidt_mixture: negative Schmidt coefficient");
            lsum += l;
        }
        if (std::abs(lsum - 1.0) > 1e-10)
            throw ValidationError("mub_schmidt_mixture: component " + std::to_string(b) +
                                  " coefficients sum to " + std::to_string(lsum));
        CVector base = CVector::Zero(static_cast<Eigen::Index>(d) * d);
        for (int i = 0; i < static_cast<int>(comp.schmidt.size()); ++i)
            base(static_cast<Eigen::Index>(i) * d + i) = std::sqrt(std::max(0.0, comp.schmidt[i]));
        const CMatrix& u = unitaries[b];
        const CMatrix local = tensor(u.conjugate(), u);
        const CVector psi = local * base;
        m += comp.weight * (psi * psi.adjoint());
    }
    return make_density(d, d, std::move(m));
}

DensityMatrix align_to_schmidt_basis(const DensityMatrix& rho, const SchmidtDecomposition& sd) {
    if (sd.basis_a.rows() != rho.da || sd.basis_b.rows() != rho.db)
        throw InvalidShapeError("align_to_schmidt_basis: basis dimensions do not match state");
    const CMatrix local = tensor(sd.basis_a, sd.basis_b);
    CMatrix m = local.adjoint() * rho.matrix * local;
    return make_density(rho.da, rho.db, std::move(m));
}

}  // namespace mumkit
