// mumkit command-line front end: build and verify measurement families,
// evaluate entanglement witnesses, reproduce the worked examples, run sweeps.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mumkit/io.hpp"
#include "mumkit/sampling.hpp"
#include "mumkit/witness.hpp"

namespace {

using namespace mumkit;

constexpr double kPi = std::numbers::pi;

struct GlobalOpts {
    double tol = 1e-10;
    unsigned long seed = 0;
    std::string out;
    std::string format = "json";
    std::string record;
};

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

/// "start:stop:step" inclusive of stop up to half a step of slack.
std::vector<double> parse_range(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(std::stod(tok));
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() != 3) throw ValidationError("range must be start:stop:step or a single value");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (step <= 0.0) throw ValidationError("range step must be positive");
    std::vector<double> out;
    for (double v = start; v <= stop + step / 2; v += step) out.push_back(std::min(v, stop));
    if (out.empty()) throw ValidationError("empty range");
    if (out.size() >= 2 && out[out.size() - 1] == out[out.size() - 2]) out.pop_back();
    return out;
}

Spectrum spectrum_from_opts(int dim, double kappa, const std::string& phases_csv, int even_sign) {
    std::vector<double> phases = parse_double_list(phases_csv);
    if (phases.empty()) phases.assign(static_cast<std::size_t>(independent_param_count(dim)), 0.0);
    return synthesize_spectrum(dim, kappa, phases, even_sign);
}

struct NamedState {
    DensityMatrix rho;
    std::string description;
};

NamedState parse_state(const std::string& spec) {
    if (spec.rfind("isotropic:", 0) == 0) {
        const auto args = parse_double_list(spec.substr(10));
        if (args.size() != 2) throw ValidationError("isotropic state needs d,alpha");
        return {isotropic(static_cast<int>(args[0]), args[1]), spec};
    }
    if (spec.rfind("dicke:", 0) == 0) {
        const auto args = parse_double_list(spec.substr(6));
        if (args.size() != 3) throw ValidationError("dicke state needs N,k,p");
        const auto n = static_cast<int>(args[0]);
        const auto k = static_cast<int>(args[1]);
        const DensityMatrix rho = noisy_dicke(n, k, args[2]);
        const SchmidtDecomposition sd = schmidt_decompose(dicke(n, k), {rho.da, rho.db});
        return {align_to_schmidt_basis(rho, sd), spec + " (Schmidt-aligned)"};
    }
    if (spec == "ppt3x3") return {ppt_bound_state(), spec};
    return {density_from_json(read_json_file(spec)), spec};
}

WitnessConfig config_from_opts(MumFamily family, const std::string& thetas_csv,
                               const std::string& blocks_csv) {
    const int nb = family.blocks();
    std::vector<RotationFixingDiagonal> rotations;
    const std::vector<double> thetas = parse_double_list(thetas_csv);
    if (!thetas.empty()) {
        if (family.d != 3) throw ValidationError("--thetas requires a d = 3 family");
        if (static_cast<int>(thetas.size()) != nb)
            throw ValidationError("need one theta per measurement (" + std::to_string(nb) + ")");
        for (double t : thetas) rotations.push_back(rotation_d3(t));
    } else {
        for (int b = 0; b < nb; ++b) rotations.push_back(identity_rotation(family.d));
    }
    std::vector<int> blocks = parse_int_list(blocks_csv);
    if (blocks.empty()) {
        blocks.resize(static_cast<std::size_t>(nb));
        for (int b = 0; b < nb; ++b) blocks[static_cast<std::size_t>(b)] = b;
    }
    return make_config(std::move(family), std::move(rotations), std::move(blocks));
}

void emit(const GlobalOpts& g, const Json& inputs, const Json& output, const std::string& command,
          double seconds) {
    std::cout << output.dump(2) << '\n';
    if (!g.out.empty()) write_json_file(g.out, output);
    if (!g.record.empty()) {
        Json rec{{"command", command}, {"inputs", inputs}, {"outputs", output}, {"timing_s", seconds}};
        write_json_file(g.record, rec);
    }
}

std::string csv_escape_bool(bool b) { return b ? "true" : "false"; }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(const GlobalOpts& g, int dim, double kappa, const std::string& phases, int even_sign) {
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum s = spectrum_from_opts(dim, kappa, phases, even_sign);
    const Json out = spectrum_to_json(s);
    const Json inputs{{"dim", dim}, {"kappa", kappa}, {"phases", phases}, {"even_sign", even_sign}};
    emit(g, inputs, out, "spectrum", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_build(const GlobalOpts& g, int dim, double kappa, const std::string& phases, int even_sign) {
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum s = spectrum_from_opts(dim, kappa, phases, even_sign);
    const MumFamily f = build_mum_family(s, mub_unitaries(dim));
    const Json out = family_to_json(f);
    const Json inputs{{"dim", dim}, {"kappa", kappa}, {"phases", phases}, {"even_sign", even_sign}};
    emit(g, inputs, out, "build", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& family_path, int product_check) {
    const auto t0 = std::chrono::steady_clock::now();
    MumFamily f;
    try {
        f = family_from_json(read_json_file(family_path));
    } catch (const MalformedInputError&) {
        throw;
    } catch (const Error& e) {
        // well-formed file, invalid family: a verification failure
        Json out{{"pass", false}, {"error", e.what()}};
        const Json inputs{{"family", family_path}, {"tol", g.tol}};
        emit(g, inputs, out, "verify",
             std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return 1;
    }
    const MumReport rep = verify_mum(f, g.tol);
    const GellMannBasis basis = gellmann_basis(f.d);
    const SimplexReport simplex = simplex_check(f, basis, g.tol);
    const SpectrumReport spec_rep = validate_spectrum(f.spectrum, g.tol);

    bool product_ok = true;
    double worst_product = std::numeric_limits<double>::infinity();
    if (product_check > 0) {
        Rng rng(g.seed);
        const CMatrix w = witness_matrix(default_config(f));
        for (int i = 0; i < product_check; ++i) {
            const DensityMatrix rho = random_product_state(f.d, f.d, rng, i % 2 == 0);
            const double v = (w * rho.matrix).trace().real();
            worst_product = std::min(worst_product, v);
            if (v < -g.tol) product_ok = false;
        }
    }

    const bool pass = rep.pass && simplex.pass && spec_rep.pass && product_ok;
    Json out{{"pass", pass},
             {"pairing_residual", rep.max_pairing_residual},
             {"trace_residual", rep.max_trace_residual},
             {"purity_residual", rep.max_purity_residual},
             {"min_eigenvalue", rep.min_eigenvalue},
             {"completeness_residual", rep.max_completeness_residual},
             {"spectrum_residual", spec_rep.max_residual()},
             {"simplex_pass", simplex.pass},
             {"tol", g.tol}};
    if (product_check > 0) {
        out["product_states_checked"] = product_check;
        out["min_product_expectation"] = worst_product;
    }
    const Json inputs{{"family", family_path}, {"tol", g.tol}, {"product_check", product_check}, {"seed", g.seed}};
    emit(g, inputs, out, "verify", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return pass ? 0 : 1;
}

int cmd_witness(const GlobalOpts& g, const std::string& family_path, const std::string& state_spec,
                const std::string& thetas, const std::string& blocks, bool optimize, double grid) {
    const auto t0 = std::chrono::steady_clock::now();
    const MumFamily f = family_from_json(read_json_file(family_path));
    const NamedState state = parse_state(state_spec);
    Json out;
    if (optimize) {
        if (f.d != 3) throw ValidationError("--optimize requires a d = 3 family");
        std::vector<int> included = parse_int_list(blocks);
        if (included.empty()) {
            included.resize(static_cast<std::size_t>(f.blocks()));
            for (int b = 0; b < f.blocks(); ++b) included[static_cast<std::size_t>(b)] = b;
        }
        const OptimizeResult res = optimize_rotations_d3(f, state.rho, included, grid);
        out = witness_result_to_json(res.best);
        Json th = Json::array();
        for (double t : res.thetas) th.push_back(t);
        out["thetas"] = std::move(th);
    } else {
        const WitnessConfig cfg = config_from_opts(f, thetas, blocks);
        out = witness_result_to_json(evaluate(cfg, state.rho));
    }
    const Json inputs{{"family", family_path}, {"state", state_spec},   {"thetas", thetas},
                      {"blocks", blocks},      {"optimize", optimize},  {"grid", grid}};
    emit(g, inputs, out, "witness", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_example_isotropic(const GlobalOpts& g, int dim, double alpha, double kappa) {
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum s = spectrum_from_opts(dim, kappa, "", 1);
    const WitnessConfig cfg = default_config(build_mum_family(s, mub_unitaries(dim)));
    const int delta = cfg.family.blocks() - 1;
    const WitnessResult res = evaluate(cfg, isotropic(dim, alpha));
    const double analytic = (kappa - 1.0 / dim) * (1.0 - alpha * (delta + 1));
    Json out{{"example", "isotropic"},
             {"analytic_w_expectation", analytic},
             {"numeric", witness_result_to_json(res)},
             {"difference", res.w_expectation - analytic},
             {"detection_boundary_alpha", 1.0 / (delta + 1)}};
    const Json inputs{{"dim", dim}, {"alpha", alpha}, {"kappa", kappa}};
    emit(g, inputs, out, "example isotropic",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_example_dicke(const GlobalOpts& g, int qubits, int excitations, double kappa, double p,
                      bool sweep_p, double grid) {
    const auto t0 = std::chrono::steady_clock::now();
    if (qubits % 2 != 0) throw ValidationError("example dicke: qubit count must be even");
    const int d = 1 << (qubits / 2);
    const Spectrum s = spectrum_from_opts(d, kappa, "", 1);
    const WitnessConfig cfg = default_config(build_mum_family(s, mub_unitaries(d)));
    const int delta = cfg.family.blocks() - 1;
    const SchmidtDecomposition sd = schmidt_decompose(dicke(qubits, excitations), {d, d});
    std::vector<double> lam(sd.coefficients.data(), sd.coefficients.data() + sd.coefficients.size());
    const double monotone = entanglement_monotone(lam, d);
    const double threshold = delta * monotone / (1.0 + delta * monotone);

    auto evaluate_at = [&](double noise) {
        const DensityMatrix rho = align_to_schmidt_basis(noisy_dicke(qubits, excitations, noise), sd);
        return evaluate(cfg, rho);
    };

    Json out{{"example", "dicke"},
             {"entanglement_monotone", monotone},
             {"analytic_threshold_p", threshold}};
    if (sweep_p) {
        // w(p) is affine in p, so bisection brackets the sign change exactly
        double lo = 0.0, hi = 1.0;
        const bool lo_detected = evaluate_at(lo).detected;
        const bool hi_detected = evaluate_at(hi).detected;
        bool found = lo_detected != hi_detected;
        while (found && hi - lo > grid) {
            const double mid = (lo + hi) / 2;
            if (evaluate_at(mid).detected == lo_detected)
                lo = mid;
            else
                hi = mid;
        }
        out["threshold_bracket"] = Json::array({lo, hi});
        out["bracket_found"] = found;
        out["grid"] = grid;
        out["difference"] = found ? (lo + hi) / 2 - threshold : 1.0;
    } else {
        const WitnessResult res = evaluate_at(p);
        const double analytic =
            (kappa - 1.0 / d) * (1.0 - (1.0 - p) * (1.0 + delta * monotone));
        out["p"] = p;
        out["analytic_w_expectation"] = analytic;
        out["numeric"] = witness_result_to_json(res);
        out["difference"] = res.w_expectation - analytic;
    }
    const Json inputs{{"qubits", qubits}, {"excitations", excitations}, {"kappa", kappa},
                      {"p", p},           {"sweep_p", sweep_p},          {"grid", grid}};
    emit(g, inputs, out, "example dicke",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_example_ppt(const GlobalOpts& g, double kappa, bool optimize, double grid) {
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum s = spectrum_from_opts(3, kappa, "", 1);
    const MumFamily f = build_mum_family(s, mub_unitaries(3));
    const DensityMatrix rho = ppt_bound_state();
    const double analytic = -(kappa - 1.0 / 3.0) / 5.0;

    std::vector<RotationFixingDiagonal> rotations{rotation_d3(kPi), rotation_d3(kPi),
                                                  identity_rotation(3), identity_rotation(3)};
    const WitnessConfig cfg = make_config(f, rotations, {0, 1, 2, 3});
    const WitnessResult fixed = evaluate(cfg, rho);

    Json out{{"example", "ppt"},
             {"analytic_w_expectation", analytic},
             {"thetas", Json::array({kPi, kPi, 0.0, 0.0})},
             {"numeric", witness_result_to_json(fixed)},
             {"difference", fixed.w_expectation - analytic}};
    if (optimize) {
        const OptimizeResult four = optimize_rotations_d3(f, rho, std::vector<int>{0, 1, 2, 3}, grid);
        Json th = Json::array();
        for (double t : four.thetas) th.push_back(t);
        out["optimized"] = Json{{"thetas", std::move(th)},
                                {"w_expectation", four.best.w_expectation}};
        const OptimizeResult three = optimize_rotations_d3(f, rho, std::vector<int>{1, 2, 3}, grid);
        Json th3 = Json::array();
        for (double t : three.thetas) th3.push_back(t);
        out["three_measurement_optimum"] = Json{{"blocks", Json::array({1, 2, 3})},
                                                {"thetas", std::move(th3)},
                                                {"w_expectation", three.best.w_expectation}};
    }
    const Json inputs{{"kappa", kappa}, {"optimize", optimize}, {"grid", grid}};
    emit(g, inputs, out, "example ppt",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_example_mixture(const GlobalOpts& g, int dim, double kappa, const std::string& weights_csv) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> weights = parse_double_list(weights_csv);
    if (weights.size() < 2) throw ValidationError("example mixture: need at least two weights");
    std::vector<MixtureComponent> components;
    std::vector<double> max_ent(static_cast<std::size_t>(dim), 1.0 / dim);
    std::vector<double> product(static_cast<std::size_t>(dim), 0.0);
    product[0] = 1.0;
    components.push_back({weights[0], max_ent});
    for (std::size_t i = 1; i < weights.size(); ++i) components.push_back({weights[i], product});
    const DensityMatrix rho = mub_schmidt_mixture(components, dim);

    const Spectrum s = spectrum_from_opts(dim, kappa, "", 1);
    MumFamily f = build_mum_family(s, mub_unitaries(dim));
    std::vector<RotationFixingDiagonal> rotations(static_cast<std::size_t>(f.blocks()),
                                                  identity_rotation(dim));
    WitnessConfig cfg = make_config(std::move(f), std::move(rotations), {0, 1});
    const WitnessResult res = evaluate(cfg, rho);
    const double analytic_m = (kappa - 1.0 / dim) * (2.0 * weights[0] + weights[1]);
    Json out{{"example", "mixture"},
             {"analytic_m_total", analytic_m},
             {"numeric", witness_result_to_json(res)},
             {"difference", res.m_total - analytic_m},
             {"detection_condition", "2*p0 + p1 > 1"},
             {"detection_lhs", 2.0 * weights[0] + weights[1]}};
    const Json inputs{{"dim", dim}, {"kappa", kappa}, {"weights", weights_csv}};
    emit(g, inputs, out, "example mixture",
         std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& axis, const std::string& range_spec,
              const std::string& state_spec, int dim, double kappa, double alpha,
              const std::string& thetas, const std::string& blocks, int theta_block) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> grid = parse_range(range_spec);
    std::vector<std::pair<double, WitnessResult>> rows;

    auto family_at = [&](int d, double k) {
        return build_mum_family(spectrum_from_opts(d, k, "", 1), mub_unitaries(d));
    };

    for (double v : grid) {
        WitnessResult res;
        if (axis == "kappa") {
            const NamedState st = parse_state(state_spec);
            res = evaluate(config_from_opts(family_at(st.rho.da, v), thetas, blocks), st.rho);
        } else if (axis == "alpha") {
            res = evaluate(config_from_opts(family_at(dim, kappa), thetas, blocks),
                           isotropic(dim, v));
        } else if (axis == "p") {
            // state template carries N,k; the axis supplies the noise weight
            const std::string base = state_spec.empty() ? "dicke:4,2" : state_spec;
            const NamedState probe = parse_state(base + "," + format_double(v));
            res = evaluate(config_from_opts(family_at(probe.rho.da, kappa), thetas, blocks), probe.rho);
        } else if (axis == "theta") {
            const NamedState st = parse_state(state_spec);
            if (st.rho.da != 3) throw ValidationError("theta sweep requires a 3x3-party state");
            MumFamily f = family_at(3, kappa);
            std::vector<RotationFixingDiagonal> rot;
            const std::vector<double> base = parse_double_list(thetas);
            for (int b = 0; b < f.blocks(); ++b) {
                double t = base.empty() ? 0.0 : base[static_cast<std::size_t>(b)];
                if (b == theta_block) t = v;
                rot.push_back(rotation_d3(t));
            }
            std::vector<int> inc = parse_int_list(blocks);
            if (inc.empty())
                for (int b = 0; b < f.blocks(); ++b) inc.push_back(b);
            res = evaluate(make_config(std::move(f), std::move(rot), std::move(inc)), st.rho);
        } else {
            throw ValidationError("unknown sweep axis " + axis);
        }
        rows.emplace_back(v, res);
    }

    Json out;
    if (g.format == "csv") {
        std::string csv = axis + ",kappa,m_total,w_expectation,detected\n";
        for (const auto& [v, res] : rows) {
            csv += format_double(v) + "," + format_double(res.kappa) + "," +
                   format_double(res.m_total) + "," + format_double(res.w_expectation) + "," +
                   csv_escape_bool(res.detected) + "\n";
        }
        std::cout << csv;
        if (!g.out.empty()) {
            std::ofstream f(g.out);
            f << csv;
        }
        return 0;
    }
    Json arr = Json::array();
    for (const auto& [v, res] : rows) {
        Json row = witness_result_to_json(res);
        Json ordered{{axis, v}};
        for (auto& [key, val] : row.items()) ordered[key] = val;
        arr.push_back(std::move(ordered));
    }
    out = Json{{"axis", axis}, {"rows", std::move(arr)}};
    const Json inputs{{"axis", axis},   {"range", range_spec}, {"state", state_spec},
                      {"dim", dim},     {"kappa", kappa},      {"alpha", alpha},
                      {"thetas", thetas}, {"blocks", blocks},  {"theta_block", theta_block}};
    emit(g, inputs, out, "sweep", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutually unbiased measurement toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--tol", g.tol, "verification tolerance");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--out", g.out, "also write the output JSON to this file");
    app.add_option("--format", g.format, "output format for sweep: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--record", g.record, "write a replayable run record to this file");

    int dim = 3;
    double kappa = 1.0;
    std::string phases;
    int even_sign = 1;
    auto* sc_spectrum = app.add_subcommand("spectrum", "synthesize an eigenvalue vector");
    sc_spectrum->add_option("--dim", dim)->required();
    sc_spectrum->add_option("--kappa", kappa)->required();
    sc_spectrum->add_option("--phases", phases, "comma-separated free phases (default all zero)");
    sc_spectrum->add_option("--even-sign", even_sign)->check(CLI::IsMember({-1, 1}));

    auto* sc_build = app.add_subcommand("build", "build a measurement family");
    sc_build->add_option("--dim", dim)->required();
    sc_build->add_option("--kappa", kappa)->required();
    sc_build->add_option("--phases", phases);
    sc_build->add_option("--even-sign", even_sign)->check(CLI::IsMember({-1, 1}));

    std::string family_path;
    int product_check = 0;
    auto* sc_verify = app.add_subcommand("verify", "verify a family file");
    sc_verify->add_option("family", family_path)->required();
    sc_verify->add_option("--product-check", product_check,
                          "also check the witness on this many random product states");

    std::string state_spec, thetas, blocks;
    bool optimize = false;
    double grid = kPi / 180.0;
    auto* sc_witness = app.add_subcommand("witness", "evaluate the witness on a state");
    sc_witness->add_option("--family", family_path)->required();
    sc_witness->add_option("--state", state_spec, "isotropic:d,a | dicke:N,k,p | ppt3x3 | file.json")
        ->required();
    sc_witness->add_option("--thetas", thetas, "rotation angles about the diagonal axis (d=3)");
    sc_witness->add_option("--blocks", blocks, "measurement subset, e.g. 0,2,3");
    sc_witness->add_flag("--optimize", optimize, "grid-search the angles (d=3)");
    sc_witness->add_option("--grid", grid, "grid step for --optimize");

    auto* sc_example = app.add_subcommand("example", "reproduce a worked example");
    sc_example->require_subcommand(1);
    double alpha = 0.5, p = 0.0;
    int qubits = 4, excitations = 2;
    bool sweep_p = false;
    std::string weights = "0.5,0.5";
    auto* ex_iso = sc_example->add_subcommand("isotropic");
    ex_iso->add_option("--dim", dim);
    ex_iso->add_option("--alpha", alpha);
    ex_iso->add_option("--kappa", kappa);
    auto* ex_dicke = sc_example->add_subcommand("dicke");
    ex_dicke->add_option("--qubits", qubits);
    ex_dicke->add_option("--excitations", excitations);
    ex_dicke->add_option("--kappa", kappa);
    ex_dicke->add_option("--p", p);
    ex_dicke->add_flag("--sweep-p", sweep_p);
    ex_dicke->add_option("--grid", grid);
    auto* ex_ppt = sc_example->add_subcommand("ppt");
    ex_ppt->add_option("--kappa", kappa);
    ex_ppt->add_flag("--optimize", optimize);
    ex_ppt->add_option("--grid", grid);
    auto* ex_mix = sc_example->add_subcommand("mixture");
    ex_mix->add_option("--dim", dim);
    ex_mix->add_option("--kappa", kappa);
    ex_mix->add_option("--weights", weights, "p0,p1,...: p0 maximally entangled, rest products");

    std::string axis, range_spec;
    int theta_block = 0;
    auto* sc_sweep = app.add_subcommand("sweep", "tabulate the witness along one axis");
    sc_sweep->add_option("--axis", axis)->required()->check(CLI::IsMember({"kappa", "alpha", "p", "theta"}));
    sc_sweep->add_option("--range", range_spec, "start:stop:step")->required();
    sc_sweep->add_option("--state", state_spec);
    sc_sweep->add_option("--dim", dim);
    sc_sweep->add_option("--kappa", kappa);
    sc_sweep->add_option("--alpha", alpha);
    sc_sweep->add_option("--thetas", thetas);
    sc_sweep->add_option("--blocks", blocks);
    sc_sweep->add_option("--theta-block", theta_block);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_spectrum->parsed()) return cmd_spectrum(g, dim, kappa, phases, even_sign);
        if (sc_build->parsed()) return cmd_build(g, dim, kappa, phases, even_sign);
        if (sc_verify->parsed()) return cmd_verify(g, family_path, product_check);
        if (sc_witness->parsed())
            return cmd_witness(g, family_path, state_spec, thetas, blocks, optimize, grid);
        if (sc_example->parsed()) {
            if (ex_iso->parsed()) return cmd_example_isotropic(g, dim, alpha, kappa);
            if (ex_dicke->parsed())
                return cmd_example_dicke(g, qubits, excitations, kappa, p, sweep_p, grid);
            if (ex_ppt->parsed()) return cmd_example_ppt(g, kappa, optimize, grid);
            if (ex_mix->parsed()) return cmd_example_mixture(g, dim, kappa, weights);
        }
        if (sc_sweep->parsed())
            return cmd_sweep(g, axis, range_spec, state_spec, dim, kappa, alpha, thetas, blocks,
                             theta_block);
    } catch (const MalformedInputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
