#ifndef MFSLICE_REPORT_HPP
#define MFSLICE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfslice/liealg.hpp"
#include "mfslice/slodowy.hpp"
#include "mfslice/verifier.hpp"

namespace mfslice {

// Key order is insertion order, so serialized reports are stable.
using Json = nlohmann::ordered_json;

/// Complex scalars serialize as [re, im].
Json complex_json(const Complex& z);
Json complex_json(const std::vector<Complex>& v);

/// Settings of a verification campaign, echoed into its report.
struct CampaignConfig {
    TypeLabel type = TypeLabel::A;
    std::size_t rank = 2;
    SampleKind shift_kind = SampleKind::Mixed;
    SampleKind orbit_kind = SampleKind::Mixed;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    ArithmeticMode mode = ArithmeticMode::Float;

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

Json config_json(const CampaignConfig& config);

/// {config, algebra, orbit, trials, resampled, verdict, elapsed_ms, version}.
/// elapsed_ms is null unless `timing` is set, keeping reports byte-stable.
Json report_json(const CampaignConfig& config, const RankReport& report, bool timing);

/// One header line, then one line per trial.
std::string report_csv(const RankReport& report);

/// {n, r, type, constants: [[i, j, k, num, den], ...]}.
Json structure_constants_json(const LieAlgebra& L);

Json sl2_json(const LieAlgebra& L, const Sl2Triple& triple, const SlodowySlice& slice, const GradingCheck& grading);

}  // namespace mfslice

#endif  // MFSLICE_REPORT_HPP
