#include "mumkit/io.hpp"

#include <cmath>
#include <fstream>

namespace mumkit {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw MalformedInputError("json: " + what);
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json matrix_to_json(const RMatrix& m) { return matrix_to_json(CMatrix(m.cast<Complex>())); }

CMatrix matrix_from_json(const Json& j) {
    require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
            "matrix object needs rows, cols, entries");
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    require(entries.is_array() && static_cast<Eigen::Index>(entries.size()) == rows * cols,
            "entries length must equal rows*cols");
    CMatrix m(rows, cols);
    Eigen::Index idx = 0;
    for (const auto& e : entries) {
        require(e.is_array() && e.size() == 2, "each entry must be [re, im]");
        m(idx / cols, idx % cols) = Complex(e[0].get<double>(), e[1].get<double>());
        ++idx;
    }
    return m;
}

Json spectrum_to_json(const Spectrum& s) {
    Json mu = Json::array();
    for (Eigen::Index i = 0; i < s.mu.size(); ++i) mu.push_back(s.mu(i));
    return Json{{"d", s.d}, {"kappa", s.kappa}, {"mu", std::move(mu)}};
}

Spectrum spectrum_from_json(const Json& j) {
    require(j.is_object() && j.contains("d") && j.contains("kappa") && j.contains("mu"),
            "spectrum object needs d, kappa, mu");
    Spectrum s;
    s.d = j.at("d").get<int>();
    s.kappa = j.at("kappa").get<double>();
    const auto& mu = j.at("mu");
    require(mu.is_array() && static_cast<int>(mu.size()) == s.d, "mu length must equal d");
    s.mu = RVector(s.d);
    for (int i = 0; i < s.d; ++i) s.mu(i) = mu[static_cast<std::size_t>(i)].get<double>();
    return s;
}

Json family_to_json(const MumFamily& f) {
    Json j = spectrum_to_json(f.spectrum);
    Json unitaries = Json::array();
    for (const CMatrix& u : f.unitaries) unitaries.push_back(matrix_to_json(u));
    j["unitaries"] = std::move(unitaries);
    return j;
}

MumFamily family_from_json(const Json& j) {
    const Spectrum s = spectrum_from_json(j);
    require(j.contains("unitaries") && j.at("unitaries").is_array(), "family needs unitaries");
    std::vector<CMatrix> unitaries;
    for (const auto& u : j.at("unitaries")) unitaries.push_back(matrix_from_json(u));
    return build_mum_family(s, std::move(unitaries));
}

Json witness_result_to_json(const WitnessResult& r) {
    Json blocks = Json::array();
    for (double v : r.block_values) blocks.push_back(v);
    return Json{{"kappa", r.kappa},
                {"blocks", std::move(blocks)},
                {"m_total", r.m_total},
                {"w_expectation", r.w_expectation},
                {"detected", r.detected}};
}

Json density_to_json(const DensityMatrix& rho) {
    Json j = matrix_to_json(rho.matrix);
    return Json{{"dims", Json::array({rho.da, rho.db})},
                {"rows", j.at("rows")},
                {"cols", j.at("cols")},
                {"entries", j.at("entries")}};
}

DensityMatrix density_from_json(const Json& j) {
    CMatrix m = matrix_from_json(j);
    int da = 0, db = 0;
    if (j.contains("dims")) {
        const auto& dims = j.at("dims");
        require(dims.is_array() && dims.size() == 2, "dims must be [d_a, d_b]");
        da = dims[0].get<int>();
        db = dims[1].get<int>();
    } else {
        // square bipartition by default
        const auto n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
        require(static_cast<Eigen::Index>(n) * n == m.rows(), "cannot infer dims of non-square split");
        da = db = n;
    }
    return make_density(da, db, std::move(m));
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInputError("malformed json in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace mumkit
