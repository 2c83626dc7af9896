#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mumkit/witness.hpp"
#include "support.hpp"

using namespace mumkit;
using mumkit::test::max_diff;
using mumkit::test::random_feasible_spectrum;

namespace {

constexpr double kPi = std::numbers::pi;

MumFamily standard_family(int d, double kappa) {
    std::vector<double> phases(static_cast<std::size_t>(independent_param_count(d)), 0.0);
    return build_mum_family(synthesize_spectrum(d, kappa, phases), mub_unitaries(d));
}

/// Random rotation fixing the diagonal: a rotation about it for d = 3,
/// otherwise a Q-conjugated random permutation.
RotationFixingDiagonal random_axis_rotation(const Spectrum& s, Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 2.0 * kPi);
    if (s.d == 3 && rng() % 2 == 0) return rotation_d3(unif(rng));
    std::vector<int> perm(static_cast<std::size_t>(s.d));
    for (int i = 0; i < s.d; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return conjugate_rotation(q_matrix(s), permutation_rotation(s.d, perm));
}

DensityMatrix schmidt_basis_pure_state(const RVector& lam, int d) {
    CVector psi = CVector::Zero(static_cast<Eigen::Index>(d) * d);
    for (int i = 0; i < d; ++i)
        psi(static_cast<Eigen::Index>(i) * d + i) = std::sqrt(std::max(0.0, lam(i)));
    return make_density(d, d, CMatrix(psi * psi.adjoint()));
}

}  // namespace

TEST_CASE("m_kappa is traceless, Hermitian, and vanishes at kappa = 1/d") {
    const CMatrix trivial = m_kappa(default_config(standard_family(3, 1.0 / 3.0)));
    CHECK(max_abs(trivial) < 1e-14);

    // single diagonal block against the direct summation
    MumFamily f = standard_family(3, 1.0);
    std::vector<RotationFixingDiagonal> identities(4, identity_rotation(3));
    WitnessConfig one = make_config(f, identities, {0});
    const CMatrix m = m_kappa(one);
    CMatrix direct = CMatrix::Zero(9, 9);
    for (int n = 0; n < 3; ++n)
        direct += tensor(f.traceless_part(0, n).conjugate(), f.traceless_part(0, n));
    CHECK(max_diff(m, direct) < 1e-13);
    CHECK(max_diff(m, CMatrix(m.diagonal().asDiagonal())) < 1e-13);

    Rng rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        const Spectrum s = random_feasible_spectrum(d, 1.0 / d + 0.5 * (1.0 - 1.0 / d), rng);
        MumFamily fam = build_mum_family(s, mub_unitaries(d));
        std::vector<RotationFixingDiagonal> rot;
        for (int b = 0; b < fam.blocks(); ++b) rot.push_back(random_axis_rotation(s, rng));
        std::vector<int> blocks{0, 1};
        if (d > 2) blocks.push_back(d);
        const WitnessConfig cfg = make_config(std::move(fam), std::move(rot), std::move(blocks));
        const CMatrix mk = m_kappa(cfg);
        CHECK(std::abs(mk.trace()) < 1e-10);
        CHECK(is_hermitian(mk, 1e-10));
    }
}

TEST_CASE("witness expectation splits into the constant and the correlation part") {
    Rng rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + trial % 3;
        const double kappa = 1.0 / d + 0.8 * (1.0 - 1.0 / d);
        const Spectrum s = random_feasible_spectrum(d, kappa, rng);
        MumFamily fam = build_mum_family(s, mub_unitaries(d));
        std::vector<RotationFixingDiagonal> rot;
        for (int b = 0; b < fam.blocks(); ++b) rot.push_back(random_axis_rotation(s, rng));
        std::vector<int> blocks;
        for (int b = 0; b <= trial % fam.blocks(); ++b) blocks.push_back(b);
        const WitnessConfig cfg = make_config(std::move(fam), std::move(rot), std::move(blocks));

        const CMatrix w = witness_matrix(cfg);
        const CMatrix mk = m_kappa(cfg);
        const CMatrix rho = random_density_operator(d * d, rng);
        const double lhs = (w * rho).trace().real();
        const double rhs = (kappa - 1.0 / d) - (mk * rho).trace().real();
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("blockwise evaluation agrees with the assembled correlation matrix") {
    Rng rng(141);
    for (int trial = 0; trial < 15; ++trial) {
        const int d = 2 + trial % 3;
        const double kappa = 1.0 / d + (0.3 + 0.1 * (trial % 5)) * (1.0 - 1.0 / d);
        const Spectrum s = random_feasible_spectrum(d, kappa, rng);
        MumFamily fam = build_mum_family(s, mub_unitaries(d));
        std::vector<RotationFixingDiagonal> rot;
        for (int b = 0; b < fam.blocks(); ++b) rot.push_back(random_axis_rotation(s, rng));
        std::vector<int> blocks{0, 1 + trial % d};
        const WitnessConfig cfg = make_config(std::move(fam), std::move(rot), std::move(blocks));

        const DensityMatrix rho = make_density(d, d, random_density_operator(d * d, rng));
        const double via_blocks = evaluate(cfg, rho).m_total;
        const double via_operator = (m_kappa(cfg) * rho.matrix).trace().real();
        CHECK(std::abs(via_blocks - via_operator) < 1e-10);
    }
}

TEST_CASE("witness on the maximally mixed state gives the purity gap") {
    const WitnessConfig cfg = default_config(standard_family(4, 0.7));
    const CMatrix w = witness_matrix(cfg);
    const double value = (w * CMatrix::Identity(16, 16) / 16.0).trace().real();
    CHECK(value == doctest::Approx(0.7 - 0.25).epsilon(1e-12));

    const WitnessResult res = evaluate(cfg, make_density(4, 4, CMatrix::Identity(16, 16) / 16.0));
    for (double b : res.block_values) CHECK(std::abs(b) < 1e-12);
    CHECK(res.w_expectation == doctest::Approx(0.7 - 0.25).epsilon(1e-12));
    CHECK_FALSE(res.detected);
}

TEST_CASE("kappa = 1/d witness is identically zero") {
    Rng rng(139);
    const WitnessConfig cfg = default_config(standard_family(3, 1.0 / 3.0));
    const CMatrix w = witness_matrix(cfg);
    for (int i = 0; i < 5; ++i) {
        const CMatrix rho = random_density_operator(9, rng);
        CHECK(std::abs((w * rho).trace().real()) < 1e-12);
    }
}

TEST_CASE("maximally entangled state saturates every identity-rotation block") {
    for (double kappa : {0.6, 1.0}) {
        const WitnessConfig cfg = default_config(standard_family(3, kappa));
        const CVector phi = max_entangled(3);
        const WitnessResult res = evaluate(cfg, make_density(3, 3, CMatrix(phi * phi.adjoint())));
        for (double b : res.block_values)
            CHECK(b == doctest::Approx(kappa - 1.0 / 3.0).epsilon(1e-10));
        CHECK(res.w_expectation ==
              doctest::Approx((kappa - 1.0 / 3.0) * (1.0 - 4.0)).epsilon(1e-10));
        CHECK(res.detected == (kappa > 1.0 / 3.0));
    }
}

TEST_CASE("the PPT bound state is detected at theta = (pi, pi, 0, 0)") {
    const DensityMatrix rho = ppt_bound_state();
    for (double kappa : {0.5, 0.9, 1.0}) {
        MumFamily f = standard_family(3, kappa);
        std::vector<RotationFixingDiagonal> rot{rotation_d3(kPi), rotation_d3(kPi),
                                                identity_rotation(3), identity_rotation(3)};
        const WitnessResult res = evaluate(make_config(f, rot, {0, 1, 2, 3}), rho);
        CHECK(std::abs(res.w_expectation - (-(kappa - 1.0 / 3.0) / 5.0)) < 1e-9);
        CHECK(res.detected);
    }
}

TEST_CASE("entanglement monotone values and validation") {
    CHECK(entanglement_monotone(std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(0.0));
    CHECK(entanglement_monotone(std::vector<double>{0.25, 0.25, 0.25, 0.25}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(entanglement_monotone(std::vector<double>{2.0 / 3, 1.0 / 6, 1.0 / 6}, 4) ==
          doctest::Approx(5.0 / 9.0).epsilon(1e-13));
    CHECK_THROWS_AS(entanglement_monotone(std::vector<double>{0.5, 0.4}), ValidationError);
    CHECK_THROWS_AS(entanglement_monotone(std::vector<double>{1.5, -0.5}), ValidationError);
}

TEST_CASE("pure_state_values returns the aligned and complementary pair") {
    const auto [aligned, complement] = pure_state_values(std::vector<double>{1.0, 0.0, 0.0}, 0.9, 3);
    CHECK(aligned == doctest::Approx(0.9 - 1.0 / 3.0).epsilon(1e-14));
    CHECK(complement == doctest::Approx(0.0));

    const auto even = pure_state_values(std::vector<double>{0.25, 0.25, 0.25, 0.25}, 0.7, 4);
    CHECK(even.first == doctest::Approx(even.second).epsilon(1e-13));

    const auto dicke = pure_state_values(std::vector<double>{2.0 / 3, 1.0 / 6, 1.0 / 6}, 1.0, 4);
    CHECK(dicke.first == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(dicke.second == doctest::Approx(5.0 / 12.0).epsilon(1e-13));
}

TEST_CASE("aligned and complementary block values for random pure states") {
    Rng rng(149);
    for (int d : {2, 3, 5}) {
        for (double kappa : {0.6, 1.0}) {
            if (kappa <= 1.0 / d) continue;
            const Spectrum s = synthesize_spectrum(
                d, kappa, std::vector<double>(static_cast<std::size_t>(independent_param_count(d)), 0.0));
            MumFamily two = build_mum_family(s, {CMatrix::Identity(d, d), fourier_unitary(d)});
            const RotationFixingDiagonal preset = complementary_block_rotation(q_matrix(s));
            const WitnessConfig cfg =
                make_config(std::move(two), {identity_rotation(d), preset}, {0, 1});
            for (int trial = 0; trial < 10; ++trial) {
                const CVector psi = random_pure_state(d * d, rng);
                const SchmidtDecomposition sd = schmidt_decompose(psi, {d, d});
                const DensityMatrix aligned = schmidt_basis_pure_state(sd.coefficients, d);
                const WitnessResult res = evaluate(cfg, aligned);
                std::vector<double> lam(sd.coefficients.data(),
                                        sd.coefficients.data() + sd.coefficients.size());
                const auto [a, c] = pure_state_values(lam, kappa, d);
                CHECK(std::abs(res.block_values[0] - a) < 1e-10);
                CHECK(std::abs(res.block_values[1] - c) < 1e-8);
            }
        }
    }
}

TEST_CASE("anti-cyclic conjugated rotation zeroes the complementary block") {
    // under the conj(P) (x) P convention the Q-conjugated anti-cyclic
    // permutation belongs to the transposed frame and contributes nothing
    // to a complementary block in odd dimensions
    Rng rng(151);
    const int d = 3;
    const double kappa = 0.5;
    const Spectrum s = spectrum_d3(kappa, 0.4);
    MumFamily two = build_mum_family(s, {CMatrix::Identity(3, 3), fourier_unitary(3)});
    const QMatrix q = q_matrix(s);
    const RotationFixingDiagonal anti = conjugate_rotation(q, anticyclic_rotation(3));
    const WitnessConfig cfg = make_config(std::move(two), {identity_rotation(3), anti}, {0, 1});
    const RVector lam = random_schmidt_coefficients(d, rng);
    const WitnessResult res = evaluate(cfg, schmidt_basis_pure_state(lam, d));
    CHECK(std::abs(res.block_values[1]) < 1e-10);
}

TEST_CASE("E is Schur concave under finite differences") {
    Rng rng(157);
    std::uniform_int_distribution<int> dim(2, 6);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = dim(rng);
        const RVector lam = random_schmidt_coefficients(d, rng);
        std::vector<double> v(lam.data(), lam.data() + d);
        std::uniform_int_distribution<int> pick(0, d - 1);
        const int i = pick(rng);
        int j = pick(rng);
        if (i == j) continue;
        if (v[static_cast<std::size_t>(i)] < 1e-4 || v[static_cast<std::size_t>(j)] < 1e-4) continue;
        const double h = 1e-6;
        // central differences of the functional off the probability simplex
        auto e_raw = [&](const std::vector<double>& x) {
            double root = 0.0;
            for (double l : x) root += std::sqrt(std::max(0.0, l));
            double sum = 0.0;
            for (double l : x) sum += l;
            return (root * root - sum) / (d - 1);
        };
        auto partial = [&](int idx) {
            std::vector<double> up = v, dn = v;
            up[static_cast<std::size_t>(idx)] += h;
            dn[static_cast<std::size_t>(idx)] -= h;
            return (e_raw(up) - e_raw(dn)) / (2.0 * h);
        };
        const double lhs = (v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(j)]) *
                           (partial(i) - partial(j));
        CHECK(lhs <= 1e-10);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("spengler index endpoints and separable bound") {
    Rng rng(163);
    for (int d : {2, 3}) {
        const auto bases = mub_unitaries(d);
        std::vector<CMatrix> conj_bases;
        for (const CMatrix& u : bases) conj_bases.push_back(u.conjugate());

        const DensityMatrix mixed = make_density(
            d, d, CMatrix(CMatrix::Identity(d * d, d * d) / static_cast<double>(d * d)));
        const double at_mixed = spengler_index(bases, conj_bases, mixed);
        CHECK(at_mixed == doctest::Approx(static_cast<double>(bases.size()) / d).epsilon(1e-12));

        const CVector phi = max_entangled(d);
        const DensityMatrix ment = make_density(d, d, CMatrix(phi * phi.adjoint()));
        const double at_phi = spengler_index(bases, conj_bases, ment);
        CHECK(at_phi == doctest::Approx(static_cast<double>(bases.size())).epsilon(1e-12));

        const double bound = 1.0 + static_cast<double>(bases.size() - 1) / d;
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix prod = random_product_state(d, d, rng, trial % 2 == 0);
            CHECK(spengler_index(bases, conj_bases, prod) <= bound + 1e-10);
        }
    }

    std::vector<CMatrix> biased{CMatrix::Identity(3, 3), CMatrix::Identity(3, 3)};
    const DensityMatrix mixed9 = make_density(3, 3, CMatrix(CMatrix::Identity(9, 9) / 9.0));
    CHECK_THROWS_AS(spengler_index(biased, biased, mixed9), ValidationError);
}

TEST_CASE("chen index endpoints and separable bound") {
    Rng rng(167);
    for (int d : {2, 3}) {
        for (double kappa : {1.0 / d, 0.75}) {
            const MumFamily fam = standard_family(d, kappa);
            MumFamily conj_fam = fam;
            for (auto& u : conj_fam.unitaries) u = u.conjugate();
            for (auto& povm : conj_fam.povms)
                for (auto& p : povm.elements) p = p.conjugate();

            const DensityMatrix mixed = make_density(
                d, d, CMatrix(CMatrix::Identity(d * d, d * d) / static_cast<double>(d * d)));
            CHECK(chen_index(fam, conj_fam, mixed) ==
                  doctest::Approx((d + 1.0) / d).epsilon(1e-12));

            const CVector phi = max_entangled(d);
            const DensityMatrix ment = make_density(d, d, CMatrix(phi * phi.adjoint()));
            CHECK(chen_index(fam, conj_fam, ment) ==
                  doctest::Approx((d + 1.0) * kappa).epsilon(1e-12));

            for (int trial = 0; trial < 20; ++trial) {
                const DensityMatrix prod = random_product_state(d, d, rng, trial % 2 == 1);
                CHECK(chen_index(fam, conj_fam, prod) <= 1.0 + kappa + 1e-10);
            }
        }
    }

    // flat families assign the same value to every state
    const MumFamily flat = standard_family(3, 1.0 / 3.0);
    const CMatrix rho = random_density_operator(9, rng);
    CHECK(chen_index(flat, flat, make_density(3, 3, rho)) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    MumFamily partial = standard_family(3, 0.75);
    partial.povms.pop_back();
    partial.unitaries.pop_back();
    CHECK_THROWS_AS(chen_index(partial, standard_family(3, 0.75),
                               make_density(3, 3, CMatrix(CMatrix::Identity(9, 9) / 9.0))),
                    CompletenessError);
}

TEST_CASE("positive map preserves trace and positivity") {
    const WitnessConfig cfg = default_config(standard_family(3, 1.0));
    CHECK(max_diff(positive_map_apply(CMatrix::Identity(3, 3), cfg), CMatrix::Identity(3, 3)) <
          1e-12);

    Rng rng(173);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix x = random_density_operator(3, rng);
        const CMatrix out = positive_map_apply(x, cfg);
        CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
        CHECK(min_eigenvalue(out) >= -1e-10);
    }

    const WitnessConfig low = default_config(standard_family(3, 0.8));
    CHECK_THROWS_AS(positive_map_apply(CMatrix::Identity(3, 3), low), UnsupportedPurityError);
}

TEST_CASE("grid optimization recovers the known optima") {
    const MumFamily f = standard_family(3, 0.9);

    const DensityMatrix iso = isotropic(3, 0.6);
    const OptimizeResult iso_best =
        optimize_rotations_d3(f, iso, std::vector<int>{0, 1, 2, 3}, kPi / 90.0);
    for (double t : iso_best.thetas) CHECK(std::abs(t) < 1e-12);

    const DensityMatrix rho = ppt_bound_state();
    const OptimizeResult ppt_best =
        optimize_rotations_d3(f, rho, std::vector<int>{0, 1, 2, 3}, kPi / 180.0);
    CHECK(std::abs(ppt_best.thetas[0] - kPi) < kPi / 180.0 + 1e-12);
    CHECK(std::abs(ppt_best.thetas[1] - kPi) < kPi / 180.0 + 1e-12);
    CHECK(std::abs(ppt_best.thetas[2]) < 1e-12);
    CHECK(std::abs(ppt_best.thetas[3]) < 1e-12);
    CHECK(std::abs(ppt_best.best.w_expectation - (-(0.9 - 1.0 / 3.0) / 5.0)) < 1e-6);

    const DensityMatrix mixed = make_density(3, 3, CMatrix(CMatrix::Identity(9, 9) / 9.0));
    const OptimizeResult flat =
        optimize_rotations_d3(f, mixed, std::vector<int>{0, 1, 2, 3}, kPi / 6.0);
    for (double t : flat.thetas) CHECK(t == 0.0);
    CHECK(flat.best.w_expectation == doctest::Approx(0.9 - 1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("block values never exceed the purity gap") {
    Rng rng(179);
    for (int d : {2, 3, 4}) {
        const double kappa = 1.0 / d + 0.7 * (1.0 - 1.0 / d);
        const WitnessConfig cfg = default_config(standard_family(d, kappa));
        for (int trial = 0; trial < 70; ++trial) {
            DensityMatrix rho = (trial % 2 == 0)
                                    ? make_density(d, d, random_density_operator(d * d, rng))
                                    : random_product_state(d, d, rng, true);
            const WitnessResult res = evaluate(cfg, rho);
            for (double b : res.block_values) CHECK(b <= kappa - 1.0 / d + 1e-10);
        }
    }
}

TEST_CASE("aligned pure states saturate block zero") {
    Rng rng(181);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 3;
        const double kappa = 1.0 / d + 0.9 * (1.0 - 1.0 / d);
        const WitnessConfig cfg = default_config(standard_family(d, kappa));
        const CVector psi = random_pure_state(d * d, rng);
        const SchmidtDecomposition sd = schmidt_decompose(psi, {d, d});
        const WitnessResult res = evaluate(cfg, schmidt_basis_pure_state(sd.coefficients, d));
        CHECK(std::abs(res.block_values[0] - (kappa - 1.0 / d)) < 1e-10);
    }
}

TEST_CASE("witness is nonnegative on product states") {
    Rng rng(191);
    for (int d : {2, 3, 4}) {
        const double kappa = 1.0 / d + 0.85 * (1.0 - 1.0 / d);
        const Spectrum s = random_feasible_spectrum(d, kappa, rng);
        MumFamily fam = build_mum_family(s, mub_unitaries(d));
        std::vector<RotationFixingDiagonal> rot;
        for (int b = 0; b < fam.blocks(); ++b) rot.push_back(random_axis_rotation(s, rng));
        std::vector<int> all(static_cast<std::size_t>(fam.blocks()));
        for (int b = 0; b < fam.blocks(); ++b) all[static_cast<std::size_t>(b)] = b;
        const CMatrix w = witness_matrix(make_config(std::move(fam), std::move(rot), std::move(all)));
        for (int trial = 0; trial < 40; ++trial) {
            const DensityMatrix rho = random_product_state(d, d, rng, trial % 2 == 0);
            CHECK((w * rho.matrix).trace().real() >= -1e-10);
        }
    }
}
