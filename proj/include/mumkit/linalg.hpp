#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "mumkit/error.hpp"

namespace mumkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest entry magnitude; zero for empty matrices.
double max_abs(const CMatrix& a);
double max_abs(const RMatrix& a);

bool is_hermitian(const CMatrix& a, double tol = 1e-12);
bool is_unitary(const CMatrix& a, double tol = 1e-12);

/// Discrete Fourier transform matrix, [U]_{kl} = exp(2*pi*i*k*l/d)/sqrt(d).
CMatrix fourier_unitary(int d);

/// Cyclic shift permutation: [S_n]_{ij} = <i (+) n | j>, addition modulo d.
CMatrix shift_matrix(int d, int n);

/// Kronecker product A (x) B.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

enum class Party { A, B };

/// Transpose the chosen party's indices of a (d_a*d_b) x (d_a*d_b) matrix.
CMatrix partial_transpose(const CMatrix& rho, std::pair<int, int> dims, Party side);

struct HermitianEigen {
    RVector eigenvalues;  // ascending
    CMatrix eigenvectors; // columns
};

/// Deterministic Hermitian eigendecomposition (fixed QR-based algorithm).
HermitianEigen hermitian_eigensystem(const CMatrix& h, double hermiticity_tol = 1e-10);

double min_eigenvalue(const CMatrix& h);

struct SchmidtDecomposition {
    RVector coefficients; // lambda_i, descending, sum 1
    CMatrix basis_a;      // columns |a_i>
    CMatrix basis_b;      // columns |b_i>, so psi = sum_i sqrt(lambda_i) |a_i>|b_i>
};

SchmidtDecomposition schmidt_decompose(const CVector& psi, std::pair<int, int> dims);

/// Reassemble sum_i sqrt(lambda_i) |a_i>|b_i> (used to test the decomposition).
CVector schmidt_reconstruct(const SchmidtDecomposition& sd);

}  // namespace mumkit
