#include "mumkit/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mumkit {

double max_abs(const CMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double max_abs(const RMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return max_abs(CMatrix(a - a.adjoint())) <= tol;
}

bool is_unitary(const CMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    CMatrix gram = a * a.adjoint();
    gram -= CMatrix::Identity(a.rows(), a.cols());
    return max_abs(gram) <= tol;
}

CMatrix fourier_unitary(int d) {
    if (d < 2) throw InvalidDimensionError("fourier_unitary: dimension must be >= 2, got " + std::to_string(d));
    CMatrix u(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
            // k*l mod d keeps the phase argument small for large d
            const double arg = 2.0 * std::numbers::pi * static_cast<double>((k * l) % d) / d;
            u(k, l) = norm * Complex(std::cos(arg), std::sin(arg));
        }
    }
    return u;
}

CMatrix shift_matrix(int d, int n) {
    if (d < 1) throw InvalidDimensionError("shift_matrix: dimension must be >= 1");
    if (n < 0 || n >= d) {
        throw InvalidOffsetError("shift_matrix: offset " + std::to_string(n) + " outside [0, " +
                                 std::to_string(d) + ")");
    }
    CMatrix s = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) s(i, (i + n) % d) = 1.0;
    return s;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix partial_transpose(const CMatrix& rho, std::pair<int, int> dims, Party side) {
    const int da = dims.first;
    const int db = dims.second;
    const Eigen::Index n = static_cast<Eigen::Index>(da) * db;
    if (rho.rows() != n || rho.cols() != n) {
        throw InvalidShapeError("partial_transpose: matrix is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + ", expected " + std::to_string(n) + "x" +
                                std::to_string(n));
    }
    CMatrix out(n, n);
    for (int ia = 0; ia < da; ++ia)
        for (int ib = 0; ib < db; ++ib)
            for (int ja = 0; ja < da; ++ja)
                for (int jb = 0; jb < db; ++jb) {
                    const Eigen::Index r = static_cast<Eigen::Index>(ia) * db + ib;
                    const Eigen::Index c = static_cast<Eigen::Index>(ja) * db + jb;
                    if (side == Party::A)
                        out(r, c) = rho(static_cast<Eigen::Index>(ja) * db + ib,
                                        static_cast<Eigen::Index>(ia) * db + jb);
                    else
                        out(r, c) = rho(static_cast<Eigen::Index>(ia) * db + jb,
                                        static_cast<Eigen::Index>(ja) * db + ib);
                }
    return out;
}

HermitianEigen hermitian_eigensystem(const CMatrix& h, double hermiticity_tol) {
    if (h.rows() != h.cols()) throw InvalidShapeError("hermitian_eigensystem: matrix not square");
    if (!is_hermitian(h, hermiticity_tol))
        throw ValidationError("hermitian_eigensystem: matrix not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eigensystem: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const CMatrix& h) {
    return hermitian_eigensystem(h).eigenvalues.minCoeff();
}

SchmidtDecomposition schmidt_decompose(const CVector& psi, std::pair<int, int> dims) {
    const int da = dims.first;
    const int db = dims.second;
    if (psi.size() != static_cast<Eigen::Index>(da) * db)
        throw InvalidShapeError("schmidt_decompose: vector length does not match dims");
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10)
        throw NormalizationError("schmidt_decompose: |psi| = " + std::to_string(norm) + ", expected 1");

    // psi_{ab} reshaped row-major: row index = party A
    CMatrix m(da, db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b) m(a, b) = psi(static_cast<Eigen::Index>(a) * db + b);

    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const int r = static_cast<int>(std::min(da, db));
    SchmidtDecomposition sd;
    sd.coefficients = RVector::Zero(r);
    for (int i = 0; i < r; ++i) {
        const double s = svd.singularValues()(i);
        sd.coefficients(i) = s * s;
    }
    sd.basis_a = svd.matrixU();
    // m = U S V^dagger, so psi = sum_i s_i |u_i> (x) conj(|v_i>)
    sd.basis_b = svd.matrixV().conjugate();
    return sd;
}

CVector schmidt_reconstruct(const SchmidtDecomposition& sd) {
    const Eigen::Index da = sd.basis_a.rows();
    const Eigen::Index db = sd.basis_b.rows();
    CVector psi = CVector::Zero(da * db);
    for (Eigen::Index i = 0; i < sd.coefficients.size(); ++i) {
        const double s = std::sqrt(std::max(0.0, sd.coefficients(i)));
        for (Eigen::Index a = 0; a < da; ++a)
            for (Eigen::Index b = 0; b < db; ++b)
                psi(a * db + b) += s * sd.basis_a(a, i) * sd.basis_b(b, i);
    }
    return psi;
}

}  // namespace mumkit
