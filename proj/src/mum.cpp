#include "mumkit/mum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace mumkit {

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix clock_shift_eigenbasis(int d, int a) {
    // Columns m = 0..d-1: eigenvectors of X Z^a for odd prime d,
    // [v_m]_k = w^{a k(k-1)/2 - m k} / sqrt(d).
    CMatrix u(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k) {
            const long long phase = static_cast<long long>(a) * k * (k - 1) / 2 - static_cast<long long>(m) * k;
            const long long red = ((phase % d) + d) % d;
            const double arg = 2.0 * kPi * static_cast<double>(red) / d;
            u(k, m) = norm * Complex(std::cos(arg), std::sin(arg));
        }
    return u;
}

bool is_prime(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

std::vector<CMatrix> mub_unitaries_d2() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix hadamard(2, 2);
    hadamard << s, s, s, -s;
    CMatrix circular(2, 2);
    circular << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
    return {CMatrix::Identity(2, 2), hadamard, circular};
}

std::vector<CMatrix> mub_unitaries_d3() {
    CMatrix f = fourier_unitary(3);
    const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
    CMatrix v = CMatrix::Zero(3, 3);
    v(0, 0) = 1.0;
    v(1, 1) = w;
    v(2, 2) = w;
    CMatrix u2 = v * f;
    CMatrix u3 = v * u2;
    return {CMatrix::Identity(3, 3), f, u2, u3};
}

std::vector<CMatrix> mub_unitaries_d4() {
    // Two-qubit table; rows listed per basis vector, entries scaled by 1/2.
    static const int re[4][4][4] = {
        {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}},
        {{1, -1, 0, 0}, {1, -1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}},
        {{1, 0, 0, -1}, {1, 0, 0, 1}, {1, 0, 0, -1}, {1, 0, 0, 1}},
        {{1, 0, -1, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}},
    };
    static const int im[4][4][4] = {
        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        {{0, 0, -1, -1}, {0, 0, 1, 1}, {0, 0, 1, -1}, {0, 0, -1, 1}},
        {{0, -1, -1, 0}, {0, -1, 1, 0}, {0, 1, 1, 0}, {0, 1, -1, 0}},
        {{0, -1, 0, -1}, {0, -1, 0, 1}, {0, 1, 0, -1}, {0, 1, 0, 1}},
    };
    std::vector<CMatrix> out;
    out.push_back(CMatrix::Identity(4, 4));
    for (int b = 0; b < 4; ++b) {
        CMatrix u(4, 4);
        for (int vec = 0; vec < 4; ++vec)
            for (int k = 0; k < 4; ++k)
                u(k, vec) = 0.5 * Complex(re[b][vec][k], im[b][vec][k]);
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

CMatrix MumFamily::traceless_part(int b, int n) const {
    const CMatrix& p = element(b, n);
    return p - CMatrix::Identity(d, d) / static_cast<double>(d);
}

Povm base_povm(const Spectrum& s) {
    const SpectrumReport rep = validate_spectrum(s);
    if (!rep.pass)
        throw ValidationError("base_povm: spectrum fails validation, max residual " +
                              std::to_string(rep.max_residual()));
    Povm povm;
    povm.d = s.d;
    povm.elements.reserve(static_cast<std::size_t>(s.d));
    for (int n = 0; n < s.d; ++n) {
        CMatrix p = CMatrix::Zero(s.d, s.d);
        for (int j = 0; j < s.d; ++j) p(j, j) = 1.0 / s.d + s.mu((n + j) % s.d);
        povm.elements.push_back(std::move(p));
    }
    return povm;
}

std::vector<CMatrix> mub_unitaries(int d) {
    std::vector<CMatrix> out;
    if (d == 2) {
        out = mub_unitaries_d2();
    } else if (d == 3) {
        out = mub_unitaries_d3();
    } else if (d == 4) {
        out = mub_unitaries_d4();
    } else if (is_prime(d)) {
        out.reserve(static_cast<std::size_t>(d) + 1);
        out.push_back(CMatrix::Identity(d, d));
        for (int a = 0; a < d; ++a) out.push_back(clock_shift_eigenbasis(d, a));
    } else {
        throw UnsupportedDimensionError("mub_unitaries: d = " + std::to_string(d) +
                                        " not supported (prime d or d = 4)");
    }
    const MubReport rep = check_mub(out, 1e-10);
    if (!rep.pass)
        throw Error("mub_unitaries: generated bases fail the unbiasedness check, deviation " +
                    std::to_string(rep.max_overlap_deviation));
    return out;
}

MumFamily build_mum_family(const Spectrum& s, std::vector<CMatrix> unitaries) {
    for (std::size_t b = 0; b < unitaries.size(); ++b) {
        if (unitaries[b].rows() != s.d || unitaries[b].cols() != s.d)
            throw InvalidShapeError("build_mum_family: unitary " + std::to_string(b) +
                                    " has wrong dimension");
        if (!is_unitary(unitaries[b], 1e-12))
            throw UnitarityError("build_mum_family: input " + std::to_string(b) + " is not unitary", b);
    }
    MumFamily f;
    f.d = s.d;
    f.kappa = s.kappa;
    f.spectrum = s;
    const Povm base = base_povm(s);
    f.povms.reserve(unitaries.size());
    for (const CMatrix& u : unitaries) {
        Povm p;
        p.d = s.d;
        p.elements.reserve(static_cast<std::size_t>(s.d));
        for (const CMatrix& e : base.elements) p.elements.push_back(u * e * u.adjoint());
        f.povms.push_back(std::move(p));
    }
    f.unitaries = std::move(unitaries);
    return f;
}

double MumReport::max_residual() const {
    return std::max({max_pairing_residual, max_trace_residual, max_purity_residual,
                     std::max(0.0, -min_eigenvalue), max_completeness_residual});
}

MumReport verify_mum(const MumFamily& f, double tol) {
    MumReport rep;
    rep.tol = tol;
    const int d = f.d;
    const double kappa = f.kappa;
    const int nb = f.blocks();
    rep.min_eigenvalue = 0.0;

    for (int b = 0; b < nb; ++b) {
        CMatrix sum = CMatrix::Zero(d, d);
        for (int n = 0; n < d; ++n) {
            const CMatrix& p = f.element(b, n);
            sum += p;
            rep.max_trace_residual = std::max(rep.max_trace_residual, std::abs(p.trace().real() - 1.0));
            rep.max_purity_residual =
                std::max(rep.max_purity_residual, std::abs((p * p).trace().real() - kappa));
            rep.min_eigenvalue = std::min(rep.min_eigenvalue, min_eigenvalue(p));
        }
        sum -= CMatrix::Identity(d, d);
        rep.max_completeness_residual = std::max(rep.max_completeness_residual, max_abs(sum));
    }

    const double unbiased = 1.0 / d;
    const double same_factor = (kappa * d - 1.0) / (d - 1.0);
    for (int b = 0; b < nb; ++b)
        for (int bp = b; bp < nb; ++bp)
            for (int n = 0; n < d; ++n)
                for (int np = 0; np < d; ++np) {
                    const double overlap = (f.element(b, n) * f.element(bp, np)).trace().real();
                    double target = unbiased;
                    if (b == bp) target += ((n == np ? 1.0 : 0.0) - 1.0 / d) * same_factor;
                    if (std::abs(overlap - target) > rep.max_pairing_residual) {
                        rep.max_pairing_residual = std::abs(overlap - target);
                        rep.worst_pair = {b, n, bp, np};
                    }
                }
    rep.pass = rep.max_residual() <= tol;
    return rep;
}

UnistochasticReport unistochastic_check(const CMatrix& u, const Spectrum& s) {
    const int d = s.d;
    if (u.rows() != d || u.cols() != d)
        throw InvalidShapeError("unistochastic_check: unitary dimension does not match spectrum");
    if (!is_unitary(u, 1e-10)) throw UnitarityError("unistochastic_check: input is not unitary");
    RMatrix bmat(d, d);
    for (int j = 0; j < d; ++j)
        for (int jp = 0; jp < d; ++jp) bmat(j, jp) = std::norm(u(j, jp));
    UnistochasticReport rep;
    rep.max_flat_deviation = (bmat.array() - 1.0 / d).abs().maxCoeff();
    for (int n = 0; n < d; ++n) {
        double quad = 0.0;
        for (int j = 0; j < d; ++j)
            for (int jp = 0; jp < d; ++jp) quad += s.mu((n + j) % d) * bmat(j, jp) * s.mu((n + jp) % d);
        rep.max_quadratic_residual = std::max(rep.max_quadratic_residual, std::abs(quad));
    }
    return rep;
}

SimplexReport simplex_check(const MumFamily& f, const GellMannBasis& basis, double tol) {
    SimplexReport rep;
    rep.tol = tol;
    const int d = f.d;
    const double purity_gap = f.kappa - 1.0 / d;
    if (purity_gap <= tol) {
        rep.degenerate = true;
    }
    const int nb = f.blocks();
    std::vector<std::vector<RVector>> r(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b)
        for (int n = 0; n < d; ++n)
            r[static_cast<std::size_t>(b)].push_back(bloch_vector(f.traceless_part(b, n), basis));

    const double length = std::sqrt(2.0 * std::max(0.0, purity_gap));
    const double within_target = -2.0 * purity_gap / (d - 1.0);
    for (int b = 0; b < nb; ++b)
        for (int n = 0; n < d; ++n) {
            rep.max_length_residual = std::max(
                rep.max_length_residual,
                std::abs(r[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)].norm() - length));
            for (int bp = b; bp < nb; ++bp)
                for (int np = (b == bp ? n + 1 : 0); np < d; ++np) {
                    const double dot = r[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)].dot(
                        r[static_cast<std::size_t>(bp)][static_cast<std::size_t>(np)]);
                    if (b == bp)
                        rep.max_within_residual =
                            std::max(rep.max_within_residual, std::abs(dot - within_target));
                    else
                        rep.max_cross_residual = std::max(rep.max_cross_residual, std::abs(dot));
                }
        }
    rep.pass = std::max({rep.max_length_residual, rep.max_within_residual, rep.max_cross_residual}) <= tol;
    return rep;
}

RMatrix rotation_from_unitary(const CMatrix& u, const GellMannBasis& basis) {
    if (u.rows() != basis.d || u.cols() != basis.d)
        throw InvalidShapeError("rotation_from_unitary: unitary dimension does not match basis");
    if (!is_unitary(u, 1e-12)) throw UnitarityError("rotation_from_unitary: input is not unitary");
    const auto n = static_cast<Eigen::Index>(basis.generators.size());
    RMatrix r(n, n);
    std::vector<CMatrix> rotated;
    rotated.reserve(basis.generators.size());
    for (const CMatrix& g : basis.generators) rotated.push_back(u * g * u.adjoint());
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l)
            r(k, l) = 2.0 *
                      (basis.generators[static_cast<std::size_t>(k)] * rotated[static_cast<std::size_t>(l)])
                          .trace()
                          .real();
    return r;
}

CartanOrthReport cartan_orthogonality_check(std::span<const CMatrix> unitaries,
                                            const GellMannBasis& basis, double tol) {
    CartanOrthReport rep;
    rep.tol = tol;
    std::vector<std::vector<CMatrix>> conj;
    conj.reserve(unitaries.size());
    for (const CMatrix& u : unitaries) {
        if (!is_unitary(u, 1e-10)) throw UnitarityError("cartan_orthogonality_check: input not unitary");
        std::vector<CMatrix> set;
        for (int idx : basis.cartan_indices)
            set.push_back(u * basis.generators[static_cast<std::size_t>(idx)] * u.adjoint());
        conj.push_back(std::move(set));
    }
    for (std::size_t b = 0; b < conj.size(); ++b)
        for (std::size_t bp = b + 1; bp < conj.size(); ++bp)
            for (const CMatrix& x : conj[b])
                for (const CMatrix& y : conj[bp])
                    rep.max_cross_overlap =
                        std::max(rep.max_cross_overlap, std::abs((x.adjoint() * y).trace()));
    rep.pass = rep.max_cross_overlap <= tol;
    return rep;
}

MubReport check_mub(std::span<const CMatrix> bases, double tol) {
    MubReport rep;
    rep.tol = tol;
    if (bases.empty()) throw ValidationError("check_mub: no bases given");
    const Eigen::Index d = bases[0].rows();
    for (std::size_t b = 0; b < bases.size(); ++b) {
        if (bases[b].rows() != d || bases[b].cols() != d)
            throw InvalidShapeError("check_mub: basis " + std::to_string(b) + " has wrong shape");
        CMatrix gram = bases[b].adjoint() * bases[b];
        gram -= CMatrix::Identity(d, d);
        if (max_abs(gram) > 1e-10)
            throw OrthonormalityError("check_mub: basis " + std::to_string(b) + " is not orthonormal");
    }
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t b = 0; b < bases.size(); ++b)
        for (std::size_t bp = b + 1; bp < bases.size(); ++bp) {
            const CMatrix overlaps = bases[b].adjoint() * bases[bp];
            for (Eigen::Index n = 0; n < d; ++n)
                for (Eigen::Index np = 0; np < d; ++np)
                    rep.max_overlap_deviation =
                        std::max(rep.max_overlap_deviation, std::abs(std::abs(overlaps(n, np)) - target));
        }
    rep.pass = rep.max_overlap_deviation <= tol;
    return rep;
}

}  // namespace mumkit
