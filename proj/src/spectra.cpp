#include "mumkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mumkit {

namespace {

constexpr double kPi = std::numbers::pi;

void require_kappa_range(int d, double kappa) {
    const double lo = 1.0 / d;
    if (kappa < lo - 1e-12 || kappa > 1.0 + 1e-12)
        throw ValidationError("kappa = " + std::to_string(kappa) + " outside [1/d, 1] for d = " +
                              std::to_string(d));
}

}  // namespace

int independent_param_count(int d) {
    if (d < 2) throw InvalidDimensionError("independent_param_count: dimension must be >= 2");
    return (d - 1) / 2;
}

double purity_of(const RVector& mu) {
    return 1.0 / static_cast<double>(mu.size()) + mu.squaredNorm();
}

Spectrum synthesize_spectrum(int d, double kappa, std::span<const double> phases, int even_sign) {
    if (d < 2) throw InvalidDimensionError("synthesize_spectrum: dimension must be >= 2");
    require_kappa_range(d, kappa);
    const int n_phases = independent_param_count(d);
    if (static_cast<int>(phases.size()) != n_phases)
        throw ValidationError("synthesize_spectrum: expected " + std::to_string(n_phases) +
                              " phases for d = " + std::to_string(d) + ", got " +
                              std::to_string(phases.size()));
    if (even_sign != 1 && even_sign != -1)
        throw ValidationError("synthesize_spectrum: even_sign must be +1 or -1");

    Spectrum s;
    s.d = d;
    s.kappa = kappa;
    s.mu = RVector::Zero(d);

    const double power = std::max(0.0, (kappa * d - 1.0) / (d - 1.0));
    if (power == 0.0) return s;  // kappa = 1/d: all-zero vector
    const double amp = std::sqrt(power);

    for (int j = 0; j < d; ++j) {
        double v = 0.0;
        for (int m = 1; m <= n_phases; ++m)
            v += 2.0 * amp * std::cos(2.0 * kPi * j * m / d + phases[static_cast<std::size_t>(m - 1)]);
        if (d % 2 == 0) v += even_sign * amp * (j % 2 == 0 ? 1.0 : -1.0);
        s.mu(j) = v / d;
    }

    const double lower = -1.0 / d;
    for (int j = 0; j < d; ++j) {
        if (s.mu(j) < lower - 1e-12) {
            throw InfeasibleParametersError(
                "synthesize_spectrum: entry " + std::to_string(j) + " = " + std::to_string(s.mu(j)) +
                    " violates the lower bound -1/d = " + std::to_string(lower),
                static_cast<std::size_t>(j), s.mu(j));
        }
    }
    return s;
}

Spectrum spectrum_d3(double kappa, double phi) {
    require_kappa_range(3, kappa);
    Spectrum s;
    s.d = 3;
    s.kappa = kappa;
    s.mu = RVector::Zero(3);
    const double amp = std::sqrt(2.0 / 3.0) * std::sqrt(std::max(0.0, kappa - 1.0 / 3.0));
    for (int j = 0; j < 3; ++j) s.mu(j) = amp * std::cos(phi + 2.0 * kPi * j / 3.0);
    for (int j = 0; j < 3; ++j) {
        if (s.mu(j) < -1.0 / 3.0 - 1e-12)
            throw InfeasibleParametersError("spectrum_d3: entry " + std::to_string(j) +
                                                " violates the lower bound -1/3",
                                            static_cast<std::size_t>(j), s.mu(j));
    }
    return s;
}

std::pair<double, double> complete_pair(std::span<const double> partial, double kappa,
                                        std::pair<int, int> positions) {
    const int d = static_cast<int>(partial.size()) + 2;
    if (d < 2) throw InvalidDimensionError("complete_pair: dimension must be >= 2");
    require_kappa_range(d, kappa);
    const auto [p, m] = positions;
    if (p == m || p < 0 || m < 0 || p >= d || m >= d)
        throw ValidationError("complete_pair: invalid positions (" + std::to_string(p) + ", " +
                              std::to_string(m) + ") for d = " + std::to_string(d));

    double s = 0.0, t = 0.0;
    for (double v : partial) {
        s += v;
        t += v * v;
    }
    const double disc = 2.0 * (kappa - 1.0 / d) - 2.0 * t - s * s;
    if (disc < -1e-12)
        throw InfeasibleCompletionError(
            "complete_pair: negative discriminant " + std::to_string(disc), disc);
    const double root = std::sqrt(std::max(0.0, disc));
    return {-0.5 * s + 0.5 * root, -0.5 * s - 0.5 * root};
}

RVector insert_pair(std::span<const double> partial, std::pair<double, double> values,
                    std::pair<int, int> positions) {
    const int d = static_cast<int>(partial.size()) + 2;
    RVector mu(d);
    std::size_t src = 0;
    for (int j = 0; j < d; ++j) {
        if (j == positions.first)
            mu(j) = values.first;
        else if (j == positions.second)
            mu(j) = values.second;
        else
            mu(j) = partial[src++];
    }
    return mu;
}

double SpectrumReport::max_residual() const {
    double r = std::max({sum_residual, sum_sq_residual, lower_bound_violation, upper_bound_violation});
    for (double c : crosscorr_residuals) r = std::max(r, c);
    return r;
}

SpectrumReport validate_spectrum(const Spectrum& s, double tol) {
    SpectrumReport rep;
    rep.tol = tol;
    const int d = s.d;
    if (d < 2 || s.mu.size() != d) {
        rep.pass = false;
        rep.sum_residual = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.sum_residual = std::abs(s.mu.sum());
    rep.sum_sq_residual = std::abs(s.mu.squaredNorm() - (s.kappa - 1.0 / d));
    for (int j = 0; j < d; ++j) {
        rep.lower_bound_violation = std::max(rep.lower_bound_violation, -1.0 / d - s.mu(j));
        rep.upper_bound_violation = std::max(rep.upper_bound_violation, s.mu(j) - (d - 1.0) / d);
    }
    rep.lower_bound_violation = std::max(0.0, rep.lower_bound_violation);
    rep.upper_bound_violation = std::max(0.0, rep.upper_bound_violation);

    const double off_target = -(s.kappa - 1.0 / d) / (d - 1.0);
    for (int offset = 1; offset <= d / 2; ++offset) {
        double c = 0.0;
        for (int j = 0; j < d; ++j) c += s.mu(j) * s.mu((j + offset) % d);
        rep.crosscorr_residuals.push_back(std::abs(c - off_target));
    }
    rep.pass = rep.max_residual() <= tol;
    return rep;
}

}  // namespace mumkit
