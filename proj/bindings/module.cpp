#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bmoa/symbolspec.hpp"
#include "bmoa/verify.hpp"
#include "bmoa/wco.hpp"

namespace py = pybind11;
using namespace bmoa;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hardy/BMOA norms and weighted composition operator estimates on the unit disc";

    py::register_exception<SelfMapViolation>(m, "SelfMapError", PyExc_ValueError);

    py::class_<DiscPoint>(m, "DiscPoint")
        .def(py::init<cplx>(), py::arg("value"))
        .def(py::init<double, double>(), py::arg("re"), py::arg("im") = 0.0)
        .def_property_readonly("value", &DiscPoint::value)
        .def("__abs__", &DiscPoint::abs)
        .def("__repr__", [](const DiscPoint& a) {
            return "DiscPoint(" + std::to_string(a.value().real()) + ", " +
                   std::to_string(a.value().imag()) + ")";
        });

    py::class_<AnalyticFunction>(m, "AnalyticFunction")
        .def(py::init<std::vector<cplx>>(), py::arg("coefficients"))
        .def_static("constant", &AnalyticFunction::constant)
        .def_static("identity", &AnalyticFunction::identity)
        .def_static("monomial", &AnalyticFunction::monomial, py::arg("n"),
                    py::arg("scale") = cplx(1.0, 0.0))
        .def_property_readonly("degree", &AnalyticFunction::degree)
        .def_property_readonly("coefficients", &AnalyticFunction::coefficients)
        .def("__call__", &AnalyticFunction::at, py::arg("z"))
        .def("is_constant", &AnalyticFunction::is_constant, py::arg("tol") = 0.0)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def("scaled", &AnalyticFunction::scaled);

    py::class_<BoundaryGrid>(m, "BoundaryGrid")
        .def(py::init<std::vector<cplx>>(), py::arg("samples"))
        .def_property_readonly("size", &BoundaryGrid::size)
        .def_property_readonly("samples", &BoundaryGrid::samples)
        .def("node", &BoundaryGrid::node)
        .def("__len__", &BoundaryGrid::size)
        .def("__getitem__", [](const BoundaryGrid& g, int j) {
            if (j < 0 || j >= g.size()) throw py::index_error();
            return g[j];
        });

    m.def("eval", &eval, py::arg("f"), py::arg("z"));
    m.def("boundary_grid", &boundary_grid, py::arg("f"), py::arg("M"));
    m.def("grid_product", &grid_product);
    m.def("dilate", &dilate, py::arg("f"), py::arg("r"));
    m.def("coefficients_from_grid", &coefficients_from_grid, py::arg("grid"), py::arg("degree"));

    m.def("sigma", &sigma, py::arg("a"), py::arg("z"));
    m.def("log_weight", &log_weight, py::arg("a"));
    m.def("poisson_kernel", py::overload_cast<const DiscPoint&, double>(&poisson_kernel),
          py::arg("a"), py::arg("theta"));
    m.def("s_factor", &s_factor, py::arg("r"));
    m.def("in_Q", &in_Q, py::arg("z"), py::arg("r"), py::arg("t"));

    py::class_<SupSearchConfig>(m, "SupSearchConfig")
        .def(py::init<>())
        .def_readwrite("radii", &SupSearchConfig::radii)
        .def_readwrite("angles_per_radius", &SupSearchConfig::angles_per_radius)
        .def_readwrite("refine_rounds", &SupSearchConfig::refine_rounds)
        .def_readwrite("refine_factor", &SupSearchConfig::refine_factor)
        .def_readwrite("radius_cap", &SupSearchConfig::radius_cap);

    py::class_<SupResult>(m, "SupResult")
        .def_readonly("value", &SupResult::value)
        .def_readonly("argmax", &SupResult::argmax)
        .def("__float__", [](const SupResult& r) { return r.value; })
        .def("__repr__", [](const SupResult& r) {
            return "SupResult(value=" + std::to_string(r.value) + ")";
        });

    py::enum_<TransformMethod>(m, "TransformMethod")
        .value("Auto", TransformMethod::Auto)
        .value("PoissonQuadrature", TransformMethod::PoissonQuadrature)
        .value("SigmaPullback", TransformMethod::SigmaPullback)
        .value("ClosedForm", TransformMethod::ClosedForm);

    m.def("hardy_norm", &hardy_norm, py::arg("grid"), py::arg("p"));
    m.def("transform_norm",
          py::overload_cast<const AnalyticFunction&, const DiscPoint&, double, int,
                            TransformMethod>(&transform_norm),
          py::arg("f"), py::arg("a"), py::arg("p") = 2.0, py::arg("M") = 1024,
          py::arg("method") = TransformMethod::Auto);
    m.def("transform_norm_grid",
          py::overload_cast<const BoundaryGrid&, const DiscPoint&, double>(&transform_norm),
          py::arg("grid"), py::arg("a"), py::arg("p") = 2.0);
    m.def("bmoa_seminorm",
          py::overload_cast<const AnalyticFunction&, double, const SupSearchConfig&>(
              &bmoa_seminorm),
          py::arg("f"), py::arg("p") = 2.0, py::arg("config") = SupSearchConfig{});
    m.def("bmoa_seminorm_grid",
          py::overload_cast<const BoundaryGrid&, double, const SupSearchConfig&>(&bmoa_seminorm),
          py::arg("grid"), py::arg("p") = 2.0, py::arg("config") = SupSearchConfig{});
    m.def("bmoa_norm", py::overload_cast<const AnalyticFunction&, const SupSearchConfig&>(&bmoa_norm),
          py::arg("f"), py::arg("config") = SupSearchConfig{});
    m.def("vmoa_profile", &vmoa_profile, py::arg("f"), py::arg("radii"),
          py::arg("angles_per_radius") = 64);

    py::class_<SymbolPair>(m, "SymbolPair")
        .def(py::init<AnalyticFunction, AnalyticFunction>(), py::arg("psi"), py::arg("phi"))
        .def_readonly("psi", &SymbolPair::psi)
        .def_readonly("phi", &SymbolPair::phi)
        .def_readonly("phi_sup_estimate", &SymbolPair::phi_sup_estimate)
        .def("strictly_interior", &SymbolPair::strictly_interior, py::arg("margin") = 1e-4);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("value", &EstimateReport::value)
        .def_readonly("parts", &EstimateReport::parts)
        .def_readonly("warnings", &EstimateReport::warnings)
        .def("to_json", [](const EstimateReport& r) { return r.to_json().dump(); })
        .def("__repr__", [](const EstimateReport& r) {
            return "EstimateReport(value=" + std::to_string(r.value) + ")";
        });

    py::class_<TailSup>(m, "TailSup")
        .def_readonly("value", &TailSup::value)
        .def_readonly("argmax_index", &TailSup::argmax_index)
        .def_readonly("nonincreasing", &TailSup::nonincreasing)
        .def_readonly("nondecreasing", &TailSup::nondecreasing);

    m.def("apply_wco", &apply_wco, py::arg("pair"), py::arg("f"), py::arg("M"));
    m.def("alpha", &alpha, py::arg("pair"), py::arg("a"));
    m.def("beta", &beta, py::arg("pair"), py::arg("a"));
    m.def("power_seminorm_seq", &power_seminorm_seq, py::arg("pair"), py::arg("n_max"),
          py::arg("config") = SupSearchConfig{});
    m.def("tail_sup", &tail_sup, py::arg("seq"), py::arg("window_start"));
    m.def("norm_estimate_powers", &norm_estimate_powers, py::arg("pair"),
          py::arg("config") = SupSearchConfig{}, py::arg("n_max") = 64);
    m.def("norm_estimate_classic", &norm_estimate_classic, py::arg("pair"),
          py::arg("config") = SupSearchConfig{});
    m.def("essnorm_estimate_powers", &essnorm_estimate_powers, py::arg("pair"),
          py::arg("config") = SupSearchConfig{},
          py::arg("rho_list") = std::vector<double>{0.9, 0.95, 0.99}, py::arg("n_max") = 64);
    m.def("essnorm_estimate_boundary", &essnorm_estimate_boundary, py::arg("pair"),
          py::arg("config") = SupSearchConfig{},
          py::arg("rho_list") = std::vector<double>{0.9, 0.95, 0.99});

    py::enum_<Compactness>(m, "Compactness")
        .value("Compact", Compactness::Compact)
        .value("NonCompact", Compactness::NonCompact)
        .value("Inconclusive", Compactness::Inconclusive);

    py::class_<ClassifyThresholds>(m, "ClassifyThresholds")
        .def(py::init<>())
        .def_readwrite("eps_c", &ClassifyThresholds::eps_c);

    py::class_<ClassifyResult>(m, "ClassifyResult")
        .def_readonly("verdict", &ClassifyResult::verdict)
        .def_readonly("power_proxy", &ClassifyResult::power_proxy)
        .def_readonly("beta_proxy", &ClassifyResult::beta_proxy)
        .def_readonly("power_seq", &ClassifyResult::power_seq)
        .def_readonly("beta_shells", &ClassifyResult::beta_shells)
        .def_property_readonly("verdict_name",
                               [](const ClassifyResult& r) { return to_string(r.verdict); })
        .def("to_json", [](const ClassifyResult& r) { return r.to_json().dump(); });

    m.def("classify_compactness", &classify_compactness, py::arg("pair"),
          py::arg("config") = SupSearchConfig{}, py::arg("thresholds") = ClassifyThresholds{},
          py::arg("n_max") = 64);

    py::class_<TestFunctionF>(m, "TestFunctionF")
        .def_readonly("b", &TestFunctionF::b)
        .def("__call__", &TestFunctionF::operator())
        .def("truncated", &TestFunctionF::truncated, py::arg("degree"));
    py::class_<TestFunctionG>(m, "TestFunctionG")
        .def_readonly("b", &TestFunctionG::b)
        .def("__call__", &TestFunctionG::operator())
        .def("h", &TestFunctionG::h);
    m.def("test_f", &test_f, py::arg("pair"), py::arg("a"));
    m.def("test_g", &test_g, py::arg("pair"), py::arg("a"));

    py::enum_<BoundarySet>(m, "BoundarySet")
        .value("E", BoundarySet::E)
        .value("ETilde", BoundarySet::ETilde);
    m.def("boundary_set_integral", &boundary_set_integral, py::arg("pair"), py::arg("a"),
          py::arg("t"), py::arg("variant") = BoundarySet::E, py::arg("M") = 4096);

    py::class_<TailQuantityResult>(m, "TailQuantityResult")
        .def_readonly("value", &TailQuantityResult::value)
        .def("to_json", [](const TailQuantityResult& r) { return r.proxy_metadata.dump(); });
    m.def("tail_quantity", &tail_quantity, py::arg("pair"), py::arg("r"), py::arg("t_list"),
          py::arg("config") = SupSearchConfig{});

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("check_id", &CheckReport::check_id)
        .def_readonly("lhs", &CheckReport::lhs)
        .def_readonly("rhs", &CheckReport::rhs)
        .def_readonly("ratio", &CheckReport::ratio)
        .def_readonly("pass_", &CheckReport::pass)
        .def_readonly("inputs_digest", &CheckReport::inputs_digest)
        .def_readonly("notes", &CheckReport::notes)
        .def("to_json", [](const CheckReport& r) { return r.to_json().dump(); });

    py::class_<SymbolFamily>(m, "SymbolFamily")
        .def(py::init<>())
        .def_readwrite("name", &SymbolFamily::name)
        .def_readwrite("seed", &SymbolFamily::seed)
        .def_readwrite("count", &SymbolFamily::count)
        .def_readwrite("degree_bound", &SymbolFamily::degree_bound)
        .def_readwrite("coefficient_scale", &SymbolFamily::coefficient_scale)
        .def_readwrite("include_deterministic", &SymbolFamily::include_deterministic)
        .def("pairs", &SymbolFamily::pairs)
        .def_static("single_pair", &SymbolFamily::single_pair);

    py::class_<VerifyConfig>(m, "VerifyConfig")
        .def(py::init<>())
        .def_readwrite("sup", &VerifyConfig::sup)
        .def_readwrite("n_max", &VerifyConfig::n_max)
        .def_readwrite("rho_list", &VerifyConfig::rho_list);

    m.def("check_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : check_catalog()) ids.push_back(c.id);
        return ids;
    });
    m.def("run_check", &run_check, py::arg("id"), py::arg("family"),
          py::arg("config") = VerifyConfig{});
    m.def("estimate_constant", &estimate_constant, py::arg("id"), py::arg("family"),
          py::arg("config") = VerifyConfig{});
    m.def("reports_jsonl", &to_jsonl, py::arg("reports"));
    m.def("reports_summary_csv", &summary_csv, py::arg("reports"));

    py::class_<SymbolSpec>(m, "SymbolSpec")
        .def_static("parse", &SymbolSpec::parse, py::arg("text"))
        .def("materialize",
             [](const SymbolSpec& s, int degree) {
                 double err = 0.0;
                 const AnalyticFunction f = s.materialize(degree, &err);
                 return py::make_tuple(f, err);
             },
             py::arg("truncation_degree") = 128)
        .def("describe", &SymbolSpec::describe);
}
