#include "mfslice/report.hpp"

#include <sstream>

#include "mfslice/error.hpp"
#include "mfslice/version.hpp"

namespace mfslice {

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json complex_json(const std::vector<Complex>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_json(z));
    return out;
}

void CampaignConfig::validate() const {
    if (rank < 1 || rank > kMaxRank)
        throw ConfigError("rank " + std::to_string(rank) + " out of range 1.." + std::to_string(kMaxRank));
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (!(tolerance > 0.0 && tolerance <= 1e-2)) throw ConfigError("tolerance must lie in (0, 1e-2]");
}

Json config_json(const CampaignConfig& c) {
    Json j;
    j["type"] = std::string(1, type_char(c.type));
    j["rank"] = c.rank;
    j["shift"] = to_string(c.shift_kind);
    j["orbit"] = to_string(c.orbit_kind);
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["tolerance"] = c.tolerance;
    j["mode"] = to_string(c.mode);
    return j;
}

Json report_json(const CampaignConfig& config, const RankReport& report, bool timing) {
    Json j;
    j["config"] = config_json(config);
    j["algebra"] = {{"type", std::string(1, type_char(report.type))},
                    {"rank", report.rank},
                    {"n", report.n},
                    {"r", report.rank},
                    {"ell", report.ell}};
    j["orbit"] = {{"kind", to_string(report.orbit_kind)}, {"invariants", complex_json(report.orbit_invariants)}};
    Json trials = Json::array();
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const TrialResult& t = report.trials[i];
        Json row;
        row["index"] = i;
        row["rank"] = t.rank;
        row["expected"] = t.expected;
        row["drift"] = t.drift;
        row["annihilator_residual"] = t.annihilator_residual;
        row["ambient_rank"] = t.ambient_rank;
        row["gradient_rank"] = t.gradient_rank;
        row["invariant_rows"] = t.invariant_rows;
        row["digest"] = t.digest;
        row["degenerate"] = t.degenerate;
        row["resampled"] = t.resampled;
        trials.push_back(std::move(row));
    }
    j["trials"] = std::move(trials);
    j["resampled"] = report.resampled;
    j["verdict"] = report.passed ? "pass" : "fail";
    j["elapsed_ms"] = timing ? Json(report.elapsed_ms) : Json(nullptr);
    j["version"] = kVersion;
    return j;
}

std::string report_csv(const RankReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << "index,rank,expected,ambient_rank,gradient_rank,drift,annihilator_residual,invariant_rows,digest,degenerate,"
          "resampled\n";
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const TrialResult& t = report.trials[i];
        os << i << ',' << t.rank << ',' << t.expected << ',' << t.ambient_rank << ',' << t.gradient_rank << ','
           << t.drift << ',' << t.annihilator_residual << ',' << t.invariant_rows << ',' << t.digest << ','
           << (t.degenerate ? 1 : 0) << ',' << t.resampled << '\n';
    }
    return os.str();
}

Json structure_constants_json(const LieAlgebra& L) {
    Json j;
    j["n"] = L.dim();
    j["r"] = L.rank();
    j["type"] = std::string(1, type_char(L.type()));
    Json constants = Json::array();
    for (const auto& c : L.structure_constants())
        constants.push_back(
            Json::array({c.i, c.j, c.k, c.value.get_num().get_si(), c.value.get_den().get_si()}));
    j["constants"] = std::move(constants);
    return j;
}

namespace {

Json exact_vector_json(const ExactElement& x) {
    Json out = Json::array();
    for (const auto& z : x) out.push_back(z.str());
    return out;
}

}  // namespace

Json sl2_json(const LieAlgebra& L, const Sl2Triple& triple, const SlodowySlice& slice, const GradingCheck& grading) {
    Json j;
    j["algebra"] = {{"type", std::string(1, type_char(L.type()))},
                    {"rank", L.rank()},
                    {"n", L.dim()},
                    {"r", L.rank()},
                    {"ell", (L.dim() + L.rank()) / 2}};
    Json coefficients = Json::array();
    for (const auto& c : triple.coefficients) coefficients.push_back(c.get_str());
    j["coefficients"] = std::move(coefficients);
    j["xi"] = exact_vector_json(triple.xi);
    j["h"] = exact_vector_json(triple.h);
    j["eta"] = exact_vector_json(triple.eta);
    Json kernel = Json::array();
    for (const auto& w : slice.kernel_basis) kernel.push_back(exact_vector_json(w));
    j["slice_basis"] = std::move(kernel);
    j["slice_grades"] = slice.grades;
    j["grading_check"] = grading.passed;
    j["version"] = kVersion;
    return j;
}

}  // namespace mfslice
