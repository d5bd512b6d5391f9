#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mfslice/cli.hpp"
#include "mfslice/invariants.hpp"
#include "mfslice/liealg.hpp"
#include "mfslice/report.hpp"
#include "mfslice/shift.hpp"
#include "mfslice/slodowy.hpp"
#include "mfslice/verifier.hpp"
#include "mfslice/version.hpp"

namespace py = pybind11;
using namespace mfslice;

namespace {

// Algebra plus its invariants; the Python-facing handle.
struct Algebra {
    std::shared_ptr<const LieAlgebra> L;
    InvariantSystem inv;

    Algebra(const std::string& type, std::size_t rank)
        : L(LieAlgebra::build(parse_type(type), rank)), inv(L) {}

    void check(const Element& x) const {
        if (x.size() != L->dim()) throw py::value_error("expected " + std::to_string(L->dim()) + " coordinates");
    }
};

struct Family {
    std::shared_ptr<Algebra> algebra;
    MFFamily family;
};

std::vector<std::string> strings(const ExactElement& x) {
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(v.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(mfslice, m) {
    m.doc() = "Argument-shift integrability checks on classical Lie algebras";
    m.attr("__version__") = kVersion;

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init<const std::string&, std::size_t>(), py::arg("type"), py::arg("rank"))
        .def_property_readonly("label", [](const Algebra& a) { return a.L->label(); })
        .def_property_readonly("dim", [](const Algebra& a) { return a.L->dim(); })
        .def_property_readonly("rank", [](const Algebra& a) { return a.L->rank(); })
        .def_property_readonly("ell", [](const Algebra& a) { return a.inv.ell(); })
        .def_property_readonly("degrees", [](const Algebra& a) { return a.inv.degrees(); })
        .def("structure_constants_json",
             [](const Algebra& a) { return structure_constants_json(*a.L).dump(); })
        .def("to_matrix",
             [](const Algebra& a, const Element& x) {
                 a.check(x);
                 const auto M = a.L->to_matrix(x);
                 std::vector<std::vector<Complex>> rows;
                 for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
                 return rows;
             })
        .def("bracket",
             [](const Algebra& a, const Element& x, const Element& y) {
                 a.check(x);
                 a.check(y);
                 return bracket(*a.L, x, y);
             })
        .def("killing",
             [](const Algebra& a, const Element& x, const Element& y) {
                 a.check(x);
                 a.check(y);
                 return killing(*a.L, x, y);
             })
        .def(
            "is_regular",
            [](const Algebra& a, const Element& x, double tol) {
                a.check(x);
                return is_regular(*a.L, x, tol);
            },
            py::arg("x"), py::arg("tolerance") = kDefaultTolerance)
        .def("orbit_push",
             [](const Algebra& a, const Element& x, const Element& y) {
                 a.check(x);
                 a.check(y);
                 return orbit_push(*a.L, x, y);
             })
        .def("invariants",
             [](const Algebra& a, const Element& x) {
                 a.check(x);
                 return a.inv.eval_all(x);
             })
        .def("invariant_gradient",
             [](const Algebra& a, std::size_t i, const Element& x) {
                 a.check(x);
                 return a.inv.gradient(i, x);
             })
        .def(
            "tangent_basis",
            [](const Algebra& a, const Element& x, double tol) {
                a.check(x);
                return tangent_basis(*a.L, x, tol);
            },
            py::arg("x"), py::arg("tolerance") = kDefaultTolerance)
        .def(
            "regular_sample",
            [](const Algebra& a, const std::string& kind, std::uint64_t seed) {
                return regular_sample(*a.L, parse_sample_kind(kind), seed);
            },
            py::arg("kind"), py::arg("seed"))
        .def("principal_sl2",
             [](const Algebra& a) {
                 const Sl2Triple t = principal_sl2(*a.L);
                 std::vector<std::string> c;
                 for (const auto& v : t.coefficients) c.push_back(v.get_str());
                 py::dict d;
                 d["xi"] = strings(t.xi);
                 d["h"] = strings(t.h);
                 d["eta"] = strings(t.eta);
                 d["coefficients"] = c;
                 return d;
             })
        .def("structural_check",
             [](const Algebra& a) {
                 const StructuralCheck c = structural_check(a.L);
                 py::dict d;
                 d["triple_relations"] = c.triple_relations;
                 d["simple_values"] = c.simple_values;
                 d["kernel_dim"] = c.kernel_dim;
                 d["kernel_in_borel"] = c.kernel_in_borel;
                 d["grading"] = c.grading;
                 d["degree_sum"] = c.degree_sum;
                 d["passed"] = c.passed;
                 return d;
             })
        .def(
            "intersect_orbit",
            [](const Algebra& a, const std::vector<Complex>& values, std::uint64_t seed) {
                const SlodowySlice slice = slodowy_slice(*a.L, principal_sl2(*a.L));
                const SliceIntersection s = intersect_orbit(a.inv, slice, values, seed);
                py::dict d;
                d["point"] = s.point;
                d["parameters"] = s.parameters;
                d["residual"] = s.residual;
                d["spread"] = s.spread;
                d["converged_starts"] = s.converged_starts;
                d["unique"] = s.unique;
                return d;
            },
            py::arg("values"), py::arg("seed") = 0);

    py::class_<Family>(m, "MFFamily")
        .def(py::init([](std::shared_ptr<Algebra> a, const Element& shift, double tol) {
                 a->check(shift);
                 return Family{a, MFFamily(a->inv, shift, tol)};
             }),
             py::arg("algebra"), py::arg("shift"), py::arg("tolerance") = kDefaultTolerance)
        .def_property_readonly("ell", [](const Family& f) { return f.family.ell(); })
        .def("eval", [](const Family& f, std::size_t i, std::size_t j, const Element& x) { return f.family.eval(i, j, x); })
        .def("eval_all", [](const Family& f, const Element& x) { return f.family.eval_all(x); })
        .def("gradients", [](const Family& f, const Element& x) { return f.family.gradients(x); })
        .def(
            "ambient_rank", [](const Family& f, const Element& x, double tol) { return ambient_rank(f.family, x, tol); },
            py::arg("x"), py::arg("tolerance") = kDefaultTolerance)
        .def(
            "restricted_rank",
            [](const Family& f, const Element& x, double tol) { return restricted_rank(f.family, x, tol); },
            py::arg("x"), py::arg("tolerance") = kDefaultTolerance);

    m.def(
        "verify",
        [](const std::string& type, std::size_t rank, const std::string& shift, const std::string& orbit,
           std::size_t trials, std::uint64_t seed, double tolerance, const std::string& mode, std::size_t threads) {
            CampaignConfig c;
            c.type = parse_type(type);
            c.rank = rank;
            c.shift_kind = parse_sample_kind(shift);
            c.orbit_kind = parse_sample_kind(orbit);
            c.trials = trials;
            c.seed = seed;
            c.tolerance = tolerance;
            c.mode = parse_mode(mode);
            c.validate();
            CampaignOptions o;
            o.tolerance = tolerance;
            o.threads = threads;
            RankReport r;
            {
                py::gil_scoped_release release;
                const auto L = LieAlgebra::build(c.type, c.rank);
                r = c.mode == ArithmeticMode::Exact
                        ? verify_completeness_exact(L, c.shift_kind, c.orbit_kind, trials, seed, o)
                        : verify_completeness(L, c.shift_kind, c.orbit_kind, trials, seed, o);
            }
            return report_json(c, r, false).dump();
        },
        py::arg("type"), py::arg("rank"), py::arg("shift") = "mixed", py::arg("orbit") = "mixed",
        py::arg("trials") = 20, py::arg("seed") = 0, py::arg("tolerance") = kDefaultTolerance,
        py::arg("mode") = "float", py::arg("threads") = 1,
        "Run a verification campaign and return the JSON report as a string.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a command-line subcommand; returns (exit code, stdout, stderr).");
}
