#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mumkit/linalg.hpp"

namespace mumkit {

/// Eigenvalue vector mu of the traceless part M_0 of one POVM element.
/// A valid spectrum satisfies
///   sum_j mu_j = 0,
///   sum_j mu_j^2 = kappa - 1/d,
///   -1/d <= mu_j <= (d-1)/d,
///   sum_j mu_{(n+j)%d} mu_{(n'+j)%d} = -(kappa-1/d)/(d-1)  for n != n'.
struct Spectrum {
    int d = 0;
    double kappa = 0.0;
    RVector mu;
};

/// floor((d-1)/2): the number of free continuous parameters of a spectrum.
int independent_param_count(int d);

/// 1/d + sum mu^2.
double purity_of(const RVector& mu);

/// Builds mu through its DFT: zero DC mode, constant power on all nonzero
/// modes, free phases on modes 1..floor((d-1)/2), and a sign for the real
/// self-conjugate mode when d is even. Flat off-peak circular autocorrelation
/// then holds by construction. Rejects (never clamps) parameter choices that
/// break the mu_j >= -1/d positivity bound.
Spectrum synthesize_spectrum(int d, double kappa, std::span<const double> phases, int even_sign = +1);

/// Closed-form d=3 spectrum: mu_j = sqrt(2/3) sqrt(kappa-1/3) cos(phi + 2*pi*j/3).
Spectrum spectrum_d3(double kappa, double phi);

/// Completes two missing eigenvalues from the sum S and sum of squares T of
/// the d-2 known ones: mu_{p,m} = -S/2 +- sqrt(2(kappa-1/d) - 2T - S^2)/2.
std::pair<double, double> complete_pair(std::span<const double> partial, double kappa,
                                        std::pair<int, int> positions);

/// Inserts a completed pair at the given positions (test/assembly helper).
RVector insert_pair(std::span<const double> partial, std::pair<double, double> values,
                    std::pair<int, int> positions);

struct SpectrumReport {
    double sum_residual = 0.0;
    double sum_sq_residual = 0.0;
    double lower_bound_violation = 0.0;  // max over j of (-1/d - mu_j, 0)
    double upper_bound_violation = 0.0;  // max over j of (mu_j - (d-1)/d, 0)
    std::vector<double> crosscorr_residuals;  // offsets 1..floor(d/2)
    double tol = 0.0;
    bool pass = false;
    double max_residual() const;
};

/// Residuals of every defining constraint; reports, never throws.
SpectrumReport validate_spectrum(const Spectrum& s, double tol = 1e-10);

}  // namespace mumkit
