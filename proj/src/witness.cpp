#include "mumkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mumkit {

namespace {

constexpr double kDetectionTol = 1e-10;

void validate_config(const WitnessConfig& cfg) {
    const int nb = cfg.family.blocks();
    if (nb == 0) throw ValidationError("witness config: family has no measurements");
    if (static_cast<int>(cfg.rotations.size()) != nb)
        throw ValidationError("witness config: rotation count " + std::to_string(cfg.rotations.size()) +
                              " != measurement count " + std::to_string(nb));
    for (const auto& o : cfg.rotations)
        if (o.d != cfg.family.d)
            throw InvalidShapeError("witness config: rotation dimension mismatch");
    if (cfg.included_blocks.empty()) throw ValidationError("witness config: no blocks included");
    for (std::size_t i = 0; i < cfg.included_blocks.size(); ++i) {
        const int b = cfg.included_blocks[i];
        if (b < 0 || b >= nb)
            throw ValidationError("witness config: block index " + std::to_string(b) + " out of range");
        if (i > 0 && cfg.included_blocks[i - 1] >= b)
            throw ValidationError("witness config: blocks must be strictly increasing");
    }
}

void validate_state(const WitnessConfig& cfg, const DensityMatrix& rho) {
    const int d = cfg.family.d;
    if (rho.da != d || rho.db != d)
        throw ValidationError("evaluate: state is " + std::to_string(rho.da) + "x" +
                              std::to_string(rho.db) + ", family needs " + std::to_string(d) + "x" +
                              std::to_string(d));
    if (!is_hermitian(rho.matrix, 1e-10) || std::abs(rho.matrix.trace().real() - 1.0) > 1e-08)
        throw ValidationError("evaluate: input is not a unit-trace Hermitian matrix");
}

/// sum_kl O_kl conj(M_l) (x) M_k over the base POVM's traceless parts.
CMatrix rotated_correlation(const MumFamily& f, int block_for_m, const RMatrix& o) {
    const int d = f.d;
    std::vector<CMatrix> m;
    m.reserve(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) m.push_back(f.traceless_part(block_for_m, n));
    CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            if (o(k, l) == 0.0) continue;
            out += o(k, l) * tensor(m[static_cast<std::size_t>(l)].conjugate(),
                                    m[static_cast<std::size_t>(k)]);
        }
    return out;
}

/// Tr{rho^(b) (conj(M_l^0) (x) M_k^0)} for all (k, l); the block value is the
/// contraction of this table with O^(b). The base operators are diagonal, so
/// only the diagonal of the rotated state enters.
RMatrix block_table(const WitnessConfig& cfg, const DensityMatrix& rho, int b) {
    const int d = cfg.family.d;
    const CMatrix& u = cfg.family.unitaries[static_cast<std::size_t>(b)];
    const CMatrix local = tensor(u.conjugate(), u);
    const CMatrix rotated = rho.matrix * local;
    RVector diag(static_cast<Eigen::Index>(d) * d);
    for (Eigen::Index i = 0; i < diag.size(); ++i)
        diag(i) = (local.col(i).adjoint() * rotated.col(i)).value().real();
    const RVector& mu = cfg.family.spectrum.mu;
    RMatrix table(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            double sum = 0.0;
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s)
                    sum += mu((l + r) % d) * mu((k + s) % d) * diag(static_cast<Eigen::Index>(r) * d + s);
            table(k, l) = sum;
        }
    return table;
}

WitnessResult assemble_result(const WitnessConfig& cfg, std::vector<double> block_values) {
    WitnessResult res;
    res.kappa = cfg.family.kappa;
    res.block_values = std::move(block_values);
    res.m_total = 0.0;
    for (double v : res.block_values) res.m_total += v;
    res.w_expectation = (cfg.family.kappa - 1.0 / cfg.family.d) - res.m_total;
    res.detected = res.w_expectation < -kDetectionTol;
    return res;
}

}  // namespace

WitnessConfig default_config(MumFamily family) {
    WitnessConfig cfg;
    const int nb = family.blocks();
    cfg.rotations.reserve(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) cfg.rotations.push_back(identity_rotation(family.d));
    cfg.included_blocks.resize(static_cast<std::size_t>(nb));
    for (int b = 0; b < nb; ++b) cfg.included_blocks[static_cast<std::size_t>(b)] = b;
    cfg.family = std::move(family);
    validate_config(cfg);
    return cfg;
}

WitnessConfig make_config(MumFamily family, std::vector<RotationFixingDiagonal> rotations,
                          std::vector<int> included_blocks) {
    WitnessConfig cfg{std::move(family), std::move(rotations), std::move(included_blocks)};
    validate_config(cfg);
    return cfg;
}

CMatrix m_kappa(const WitnessConfig& cfg) {
    validate_config(cfg);
    const int d = cfg.family.d;
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
    for (int b : cfg.included_blocks)
        m += rotated_correlation(cfg.family, b, cfg.rotations[static_cast<std::size_t>(b)].entries);
    return m;
}

CMatrix witness_matrix(const WitnessConfig& cfg) {
    validate_config(cfg);
    const int d = cfg.family.d;
    const auto s = static_cast<double>(cfg.included_blocks.size());
    const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
    CMatrix w = ((d * cfg.family.kappa + s - 1.0) / d) * CMatrix::Identity(dim, dim);
    for (int b : cfg.included_blocks) {
        const RMatrix& o = cfg.rotations[static_cast<std::size_t>(b)].entries;
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                if (o(k, l) == 0.0) continue;
                w -= o(k, l) *
                     tensor(cfg.family.element(b, l).conjugate(), cfg.family.element(b, k));
            }
    }
    return w;
}

WitnessResult evaluate(const WitnessConfig& cfg, const DensityMatrix& rho) {
    validate_config(cfg);
    validate_state(cfg, rho);
    std::vector<double> values;
    values.reserve(cfg.included_blocks.size());
    for (int b : cfg.included_blocks) {
        const RMatrix table = block_table(cfg, rho, b);
        values.push_back(
            (cfg.rotations[static_cast<std::size_t>(b)].entries.array() * table.array()).sum());
    }
    return assemble_result(cfg, std::move(values));
}

double entanglement_monotone(std::span<const double> schmidt, int d) {
    if (schmidt.empty()) throw ValidationError("entanglement_monotone: empty coefficient sequence");
    if (d == 0) d = static_cast<int>(schmidt.size());
    if (d < 2 || d < static_cast<int>(schmidt.size()))
        throw ValidationError("entanglement_monotone: invalid dimension " + std::to_string(d));
    double sum = 0.0, root_sum = 0.0;
    for (double l : schmidt) {
        if (l < -1e-12) throw ValidationError("entanglement_monotone: negative coefficient");
        sum += l;
        root_sum += std::sqrt(std::max(0.0, l));
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw ValidationError("entanglement_monotone: coefficients sum to " + std::to_string(sum));
    return (root_sum * root_sum - 1.0) / (d - 1);
}

std::pair<double, double> pure_state_values(std::span<const double> schmidt, double kappa, int d) {
    const double gap = kappa - 1.0 / d;
    return {gap, gap * entanglement_monotone(schmidt, d)};
}

double spengler_index(std::span<const CMatrix> bases_a, std::span<const CMatrix> bases_b,
                      const DensityMatrix& rho) {
    if (bases_a.size() != bases_b.size())
        throw ValidationError("spengler_index: basis counts differ");
    const MubReport ra = check_mub(bases_a);
    const MubReport rb = check_mub(bases_b);
    if (!ra.pass || !rb.pass)
        throw ValidationError("spengler_index: input bases are not mutually unbiased");
    const int d = static_cast<int>(bases_a[0].rows());
    if (rho.da != d || rho.db != d) throw InvalidShapeError("spengler_index: state dimension mismatch");
    double total = 0.0;
    for (std::size_t b = 0; b < bases_a.size(); ++b)
        for (int n = 0; n < d; ++n) {
            const CVector ea = bases_a[b].col(n);
            const CVector eb = bases_b[b].col(n);
            const CMatrix proj = tensor(CMatrix(ea * ea.adjoint()), CMatrix(eb * eb.adjoint()));
            total += (proj * rho.matrix).trace().real();
        }
    return total;
}

double chen_index(const MumFamily& family_a, const MumFamily& family_b, const DensityMatrix& rho) {
    const int d = family_a.d;
    if (family_b.d != d) throw InvalidShapeError("chen_index: family dimensions differ");
    if (family_a.blocks() != d + 1 || family_b.blocks() != d + 1)
        throw CompletenessError("chen_index: both families must have d + 1 measurements");
    if (std::abs(family_a.kappa - family_b.kappa) > 1e-10)
        throw ValidationError("chen_index: purities differ");
    if (rho.da != d || rho.db != d) throw InvalidShapeError("chen_index: state dimension mismatch");
    double total = 0.0;
    for (int b = 0; b <= d; ++b)
        for (int n = 0; n < d; ++n)
            total += (tensor(family_a.element(b, n), family_b.element(b, n)) * rho.matrix)
                         .trace()
                         .real();
    return total;
}

CMatrix positive_map_apply(const CMatrix& x, const WitnessConfig& cfg) {
    validate_config(cfg);
    const int d = cfg.family.d;
    if (x.rows() != d || x.cols() != d) throw InvalidShapeError("positive_map_apply: wrong input shape");
    if (std::abs(cfg.family.kappa - 1.0) > 1e-10)
        throw UnsupportedPurityError("positive_map_apply: map defined at kappa = 1 only");
    const CMatrix depolarized = (x.trace() / static_cast<double>(d)) * CMatrix::Identity(d, d);
    const CMatrix traceless = x - depolarized;
    CMatrix out = depolarized;
    for (int b : cfg.included_blocks) {
        const RMatrix& o = cfg.rotations[static_cast<std::size_t>(b)].entries;
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                if (o(k, l) == 0.0) continue;
                const Complex coeff = (traceless * cfg.family.element(b, l)).trace();
                out -= o(k, l) / (d - 1.0) * coeff * cfg.family.element(b, k);
            }
    }
    return out;
}

OptimizeResult optimize_rotations_d3(const MumFamily& family, const DensityMatrix& rho,
                                     std::span<const int> blocks, double grid_step) {
    if (family.d != 3) throw UnsupportedDimensionError("optimize_rotations_d3: d must be 3");
    if (grid_step <= 0.0) throw ValidationError("optimize_rotations_d3: grid step must be positive");
    std::vector<int> included(blocks.begin(), blocks.end());
    WitnessConfig probe;
    probe.family = family;
    for (int b = 0; b < family.blocks(); ++b) probe.rotations.push_back(identity_rotation(3));
    probe.included_blocks = included;
    validate_config(probe);
    validate_state(probe, rho);

    // The witness expectation is affine in each O^(b), so the blocks decouple
    // and each angle maximizes its own block value.
    const int steps = static_cast<int>(std::ceil(2.0 * std::numbers::pi / grid_step));
    OptimizeResult result;
    std::vector<double> best_values;
    for (int b : included) {
        const RMatrix table = block_table(probe, rho, b);
        double best_theta = 0.0;
        double best_value = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < steps; ++i) {
            const double theta = i * grid_step;
            if (theta >= 2.0 * std::numbers::pi) break;
            const double value = (rotation_d3(theta).entries.array() * table.array()).sum();
            if (value > best_value + 1e-15) {
                best_value = value;
                best_theta = theta;
            }
        }
        result.thetas.push_back(best_theta);
        best_values.push_back(best_value);
        probe.rotations[static_cast<std::size_t>(b)] = rotation_d3(best_theta);
    }
    result.best = assemble_result(probe, std::move(best_values));
    return result;
}

}  // namespace mumkit
