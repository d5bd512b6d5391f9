#include "mfslice/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mfslice/error.hpp"
#include "mfslice/invariants.hpp"
#include "mfslice/random.hpp"
#include "mfslice/report.hpp"
#include "mfslice/shift.hpp"
#include "mfslice/slodowy.hpp"
#include "mfslice/verifier.hpp"
#include "mfslice/version.hpp"

namespace mfslice::cli {

namespace {

struct Options {
    std::string type;
    std::size_t rank = 0;
    std::string shift = "mixed";
    std::string orbit = "mixed";
    std::size_t trials = 20;
    std::optional<std::uint64_t> seed;
    double tolerance = kDefaultTolerance;
    std::string mode = "float";
    std::string output;
    bool csv = false;
    bool timing = false;
    std::size_t threads = 1;
    std::size_t samples = 0;
    std::size_t random_samples = 100;
    std::size_t targets = 5;
    bool zero = false;
};

std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedVariable);
    if (env == nullptr || *env == '\0') return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string(kSeedVariable) + " is not an unsigned integer: '" + env + "'");
    }
}

std::uint64_t seed_of(const Options& o) { return o.seed ? *o.seed : default_seed(); }

void check_tolerance(double tol) {
    if (!(tol > 0.0 && tol <= 1e-2)) throw ConfigError("tolerance must lie in (0, 1e-2]");
}

std::shared_ptr<const LieAlgebra> algebra_of(const Options& o) {
    return LieAlgebra::build(parse_type(o.type), o.rank);
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + o.output + "'");
    file << text;
    if (!file) throw ConfigError("failed writing output file '" + o.output + "'");
}

void emit(const Json& j, const Options& o, std::ostream& out) { emit(j.dump(2) + "\n", o, out); }

int verdict(bool passed) { return passed ? kExitPass : kExitCheckFailed; }

int cmd_verify(const Options& o, std::ostream& out) {
    CampaignConfig config;
    config.type = parse_type(o.type);
    config.rank = o.rank;
    config.shift_kind = parse_sample_kind(o.shift);
    config.orbit_kind = parse_sample_kind(o.orbit);
    config.trials = o.trials;
    config.seed = seed_of(o);
    config.tolerance = o.tolerance;
    config.mode = parse_mode(o.mode);
    config.validate();

    CampaignOptions options;
    options.tolerance = config.tolerance;
    options.threads = o.threads;
    const auto L = LieAlgebra::build(config.type, config.rank);
    const RankReport report =
        config.mode == ArithmeticMode::Exact
            ? verify_completeness_exact(L, config.shift_kind, config.orbit_kind, config.trials, config.seed, options)
            : verify_completeness(L, config.shift_kind, config.orbit_kind, config.trials, config.seed, options);

    if (o.csv)
        emit(report_csv(report), o, out);
    else
        emit(report_json(config, report, o.timing), o, out);
    if (!o.output.empty()) {
        std::size_t hits = 0;
        for (const auto& t : report.trials) hits += t.rank == t.expected ? 1 : 0;
        out << L->label() << ' ' << config_json(config)["shift"].get<std::string>() << " x "
            << config_json(config)["orbit"].get<std::string>() << ": " << hits << '/' << report.trials.size()
            << " trials at rank " << report.expected_rank() << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
    }
    return verdict(report.passed);
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

int cmd_sl2(const Options& o, std::ostream& out) {
    const auto L = algebra_of(o);
    const Sl2Triple triple = principal_sl2(*L);
    const SlodowySlice slice = slodowy_slice(*L, triple);
    const GradingCheck grading = ad_h_eigen_check(*L, triple, slice);
    const StructuralCheck check = structural_check(L);

    std::ostringstream text;
    text << "algebra " << L->label() << " (n = " << L->dim() << ", r = " << L->rank() << ")\n";
    for (std::size_t k = 0; k < triple.coefficients.size(); ++k)
        text << "c_alpha" << k + 1 << " = " << triple.coefficients[k] << '\n';
    text << "[h, xi] = 2 xi, [h, eta] = -2 eta, [xi, eta] = h: " << mark(check.triple_relations) << '\n';
    text << "alpha(h) = -2 on simple roots: " << mark(check.simple_values) << '\n';
    text << "dim ker(ad_eta) = " << check.kernel_dim << ", contained in b_+: "
         << mark(check.kernel_dim == L->rank() && check.kernel_in_borel) << '\n';
    text << "slice grades:";
    for (int g : slice.grades) text << ' ' << g;
    text << "\nad_h eigenvalues on b_+ and ker(ad_eta) non-positive: " << mark(grading.passed) << '\n';
    out << text.str();
    if (!o.output.empty()) emit(sl2_json(*L, triple, slice, grading), o, std::cout);
    return verdict(check.passed && grading.passed);
}

int cmd_slice(const Options& o, std::ostream& out) {
    check_tolerance(o.tolerance);
    if (o.targets < 1) throw ConfigError("targets must be >= 1");
    const auto L = algebra_of(o);
    const std::uint64_t seed = seed_of(o);
    const InvariantSystem inv(L);
    const Sl2Triple triple = principal_sl2(*L);
    const SlodowySlice slice = slodowy_slice(*L, triple);
    const NewtonOptions newton;
    const Element xi = to_float(triple.xi);

    Json j;
    j["config"] = {{"type", std::string(1, type_char(L->type()))},
                   {"rank", L->rank()},
                   {"targets", o.zero ? 1 : o.targets},
                   {"zero", o.zero},
                   {"seed", seed},
                   {"tolerance", o.tolerance}};
    j["algebra"] = {{"type", std::string(1, type_char(L->type()))},
                    {"rank", L->rank()},
                    {"n", L->dim()},
                    {"r", L->rank()},
                    {"ell", inv.ell()}};
    Json results = Json::array();
    bool passed = true;
    const std::size_t count = o.zero ? 1 : o.targets;
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<Complex> values(inv.count(), Complex(0));
        if (!o.zero)
            values = inv.eval_all(regular_sample(*L, SampleKind::Mixed, derive_seed(seed, SeedStream::Orbit, t), o.tolerance));
        const SliceIntersection s = intersect_orbit(inv, slice, values, derive_seed(seed, SeedStream::Slice, t), newton);
        double distance = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) distance = std::max(distance, std::abs(s.point[i] - xi[i]));
        bool ok = s.residual <= newton.residual_tolerance && s.unique && is_regular(*L, s.point, o.tolerance);
        if (o.zero) ok = ok && distance <= 1e-10;
        passed = passed && ok;
        Json row;
        row["target"] = complex_json(values);
        row["parameters"] = complex_json(s.parameters);
        row["residual"] = s.residual;
        row["spread"] = s.spread;
        row["converged_starts"] = s.converged_starts;
        row["failed_starts"] = s.failed_starts;
        row["distance_to_xi"] = distance;
        row["passed"] = ok;
        results.push_back(std::move(row));
    }
    j["targets"] = std::move(results);
    j["verdict"] = passed ? "pass" : "fail";
    j["version"] = kVersion;
    emit(j, o, out);
    return verdict(passed);
}

int cmd_probe_singular(const Options& o, std::ostream& out) {
    check_tolerance(o.tolerance);
    const auto L = algebra_of(o);
    const std::uint64_t seed = seed_of(o);
    const SampleKind kind = parse_sample_kind(o.shift);
    const std::size_t samples = o.samples ? o.samples : 20;
    const InvariantSystem inv(L);
    const MFFamily family(inv, regular_sample(*L, kind, derive_seed(seed, SeedStream::Shift), o.tolerance), o.tolerance);
    const SingularProbeReport r = probe_singular_inclusion(family, samples, seed, o.random_samples, o.tolerance);

    Json j;
    j["config"] = {{"type", std::string(1, type_char(L->type()))}, {"rank", L->rank()}, {"shift", to_string(kind)},
                   {"samples", samples}, {"random_samples", o.random_samples}, {"seed", seed},
                   {"tolerance", o.tolerance}};
    j["algebra"] = {{"type", std::string(1, type_char(L->type()))}, {"rank", L->rank()}, {"n", L->dim()},
                    {"r", L->rank()}, {"ell", r.ell}};
    j["singular"] = {{"tested", r.singular_tested}, {"deficient", r.singular_deficient}};
    j["random"] = {{"tested", r.random_tested}, {"full_rank", r.random_full}};
    j["verdict"] = r.passed ? "pass" : "fail";
    j["version"] = kVersion;
    emit(j, o, out);
    return verdict(r.passed);
}

int cmd_probe_slice_regularity(const Options& o, std::ostream& out) {
    check_tolerance(o.tolerance);
    const auto L = algebra_of(o);
    const std::uint64_t seed = seed_of(o);
    const std::size_t samples = o.samples ? o.samples : 100;
    const SliceRegularityReport r = probe_slice_regularity(*L, principal_sl2(*L), samples, seed, o.tolerance);

    Json j;
    j["config"] = {{"type", std::string(1, type_char(L->type()))}, {"rank", L->rank()}, {"samples", samples},
                   {"seed", seed}, {"tolerance", o.tolerance}};
    j["algebra"] = {{"type", std::string(1, type_char(L->type()))}, {"rank", L->rank()}, {"n", L->dim()},
                    {"r", L->rank()}, {"ell", (L->dim() + L->rank()) / 2}};
    j["samples"] = r.samples;
    j["regular"] = r.regular;
    j["verdict"] = r.passed ? "pass" : "fail";
    j["version"] = kVersion;
    emit(j, o, out);
    return verdict(r.passed);
}

int cmd_selftest(const Options& o, std::ostream& out) {
    std::vector<std::pair<TypeLabel, std::size_t>> algebras;
    if (!o.type.empty() || o.rank != 0) {
        if (o.type.empty() || o.rank == 0) throw ConfigError("selftest: give both --type and --rank, or neither");
        algebras.emplace_back(parse_type(o.type), o.rank);
    } else {
        algebras = {{TypeLabel::A, 1}, {TypeLabel::A, 2}, {TypeLabel::A, 3}, {TypeLabel::A, 4},
                    {TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::C, 2}, {TypeLabel::C, 3}};
    }
    Json checks = Json::array();
    bool passed = true;
    for (const auto& [type, rank] : algebras) {
        const StructuralCheck c = structural_check(LieAlgebra::build(type, rank));
        passed = passed && c.passed;
        Json row;
        row["algebra"] = c.label;
        row["triple_relations"] = c.triple_relations;
        row["simple_values"] = c.simple_values;
        row["coefficients_positive"] = c.coefficients_positive;
        row["kernel_dim"] = c.kernel_dim;
        row["kernel_in_borel"] = c.kernel_in_borel;
        row["grading"] = c.grading;
        row["degree_sum"] = c.degree_sum;
        row["half_n_plus_r"] = c.half_n_plus_r;
        if (!c.error.empty()) row["error"] = c.error;
        row["passed"] = c.passed;
        checks.push_back(std::move(row));
    }
    Json j;
    j["checks"] = std::move(checks);
    j["verdict"] = passed ? "pass" : "fail";
    j["version"] = kVersion;
    emit(j, o, out);
    return verdict(passed);
}

int cmd_constants(const Options& o, std::ostream& out) {
    emit(structure_constants_json(*algebra_of(o)), o, out);
    return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Argument-shift integrability checks on classical Lie algebras", "mfslice"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options o;
    const auto algebra_flags = [&](CLI::App* sub, bool required) {
        auto* t = sub->add_option("--type", o.type, "Cartan type: A, B or C");
        auto* r = sub->add_option("--rank", o.rank, "Rank, 1.." + std::to_string(kMaxRank));
        if (required) {
            t->required();
            r->required();
        }
    };
    const auto common_flags = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, std::string("Campaign seed (default: $") + kSeedVariable + " or 0)");
        sub->add_option("--tolerance", o.tolerance, "Relative rank threshold")->capture_default_str();
        sub->add_option("-o,--output", o.output, "Write the report to this file");
    };

    auto* verify = app.add_subcommand("verify", "Restricted rank of the shifted family on a regular orbit");
    algebra_flags(verify, true);
    common_flags(verify);
    verify->add_option("--shift", o.shift, "Shift vector kind: semisimple, nilpotent, mixed")->capture_default_str();
    verify->add_option("--orbit", o.orbit, "Orbit base point kind: semisimple, nilpotent, mixed")->capture_default_str();
    verify->add_option("--trials", o.trials, "Orbit points to test")->capture_default_str();
    verify->add_option("--mode", o.mode, "Arithmetic: float or exact")->capture_default_str();
    verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
    verify->add_flag("--csv", o.csv, "Write trials as CSV instead of JSON");
    verify->add_flag("--timing", o.timing, "Record elapsed_ms in the report");

    auto* sl2 = app.add_subcommand("sl2", "Principal sl2-triple and slice checks");
    algebra_flags(sl2, true);
    sl2->add_option("-o,--output", o.output, "Also write the triple as JSON to this file");

    auto* slice = app.add_subcommand("slice", "Intersect regular orbits with the slice by Newton iteration");
    algebra_flags(slice, true);
    common_flags(slice);
    slice->add_option("--targets", o.targets, "Random target orbits")->capture_default_str();
    slice->add_flag("--zero", o.zero, "Target the orbit with all invariants zero");

    auto* singular = app.add_subcommand("probe-singular", "Rank deficiency on singular points plus multiples of a");
    algebra_flags(singular, true);
    common_flags(singular);
    singular->add_option("--shift", o.shift, "Shift vector kind")->capture_default_str();
    singular->add_option("--samples", o.samples, "Singular points tested (default 20)");
    singular->add_option("--random", o.random_samples, "Gaussian points tested")->capture_default_str();

    auto* regular = app.add_subcommand("probe-slice-regularity", "Regularity of xi + b_+");
    algebra_flags(regular, true);
    common_flags(regular);
    regular->add_option("--samples", o.samples, "Points tested (default 100)");

    auto* selftest = app.add_subcommand("selftest", "Exact structural checks");
    algebra_flags(selftest, false);
    selftest->add_option("-o,--output", o.output, "Write the report to this file");

    auto* constants = app.add_subcommand("constants", "Export structure constants as JSON");
    algebra_flags(constants, true);
    constants->add_option("-o,--output", o.output, "Write to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(o, out);
        if (*sl2) return cmd_sl2(o, out);
        if (*slice) return cmd_slice(o, out);
        if (*singular) return cmd_probe_singular(o, out);
        if (*regular) return cmd_probe_slice_regularity(o, out);
        if (*selftest) return cmd_selftest(o, out);
        if (*constants) return cmd_constants(o, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"mfslice"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mfslice::cli
