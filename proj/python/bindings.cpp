#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <mutex>

#include "mollify/characters.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"
#include "mollify/kloosterman.hpp"
#include "mollify/lfunctions.hpp"
#include "mollify/moments.hpp"
#include "mollify/optimizer.hpp"

namespace py = pybind11;
using namespace mollify;

namespace {

Polynomial to_poly(const std::vector<double>& c) { return Polynomial(c); }

std::vector<double> from_poly(const Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

const LFunctionEngine& engine_for(int K) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<LFunctionEngine>> engines;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = engines[K];
  if (!slot) {
    LFunctionOptions opts;
    opts.kernel = KernelConfig::with_pole_kill_count(K);
    slot = std::make_unique<LFunctionEngine>(opts);
  }
  return *slot;
}

DirichletCharacter character_at(int q, int index) {
  const CharacterGroup g(q);
  if (index < 0 || index >= g.size()) throw PreconditionError("character index out of range");
  return g.character(index);
}

py::dict result_dict(const OptimizationResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["coefficients"] = std::vector<double>(r.coefficients.data(), r.coefficients.data() + r.coefficients.size());
  d["min_eigenvalue"] = r.condition_diagnostic;
  d["spec"] = r.spec;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mollified moments of Dirichlet L-functions";

  auto base = py::register_exception<Error>(m, "MollifyError", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<DegenerateError>(m, "DegenerateError", pre.ptr());
  py::register_exception<ConditioningError>(m, "ConditioningError", base.ptr());
  py::register_exception<AccuracyError>(m, "AccuracyError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());

  py::class_<MollifierSpec>(m, "MollifierSpec")
      .def(py::init([](double t1, double t2, double t3, std::vector<double> p1, std::vector<double> p2,
                       std::vector<double> p3) {
             MollifierSpec s;
             s.theta1 = t1;
             s.theta2 = t2;
             s.theta3 = t3;
             s.P1 = to_poly(p1);
             s.P2 = to_poly(p2);
             s.P3 = to_poly(p3);
             return s;
           }),
           py::arg("theta1") = 0.5, py::arg("theta2") = 0.163, py::arg("theta3") = 0.5,
           py::arg("P1") = std::vector<double>{}, py::arg("P2") = std::vector<double>{},
           py::arg("P3") = std::vector<double>{})
      .def_static("reference", &MollifierSpec::reference)
      .def_readwrite("theta1", &MollifierSpec::theta1)
      .def_readwrite("theta2", &MollifierSpec::theta2)
      .def_readwrite("theta3", &MollifierSpec::theta3)
      .def_property(
          "P1", [](const MollifierSpec& s) { return from_poly(s.P1); },
          [](MollifierSpec& s, const std::vector<double>& c) { s.P1 = to_poly(c); })
      .def_property(
          "P2", [](const MollifierSpec& s) { return from_poly(s.P2); },
          [](MollifierSpec& s, const std::vector<double>& c) { s.P2 = to_poly(c); })
      .def_property(
          "P3", [](const MollifierSpec& s) { return from_poly(s.P3); },
          [](MollifierSpec& s, const std::vector<double>& c) { s.P3 = to_poly(c); })
      .def("__repr__", [](const MollifierSpec& s) {
        return "MollifierSpec(theta=(" + std::to_string(s.theta1) + ", " + std::to_string(s.theta2) + ", " +
               std::to_string(s.theta3) + "))";
      });

  m.def("s1_constant", &s1_constant);
  m.def("s2_constant", &s2_constant);
  m.def("kappa", &kappa);
  m.def("lambda_functional", &lambda_functional);
  m.def("proportion", [](const MollifierSpec& s, bool formal) {
    return proportion(s, formal ? ThetaDomain::kFormal : ThetaDomain::kSecondMoment);
  }, py::arg("spec"), py::arg("formal") = false);
  m.def("is_proportion", &is_proportion);
  m.def("mv_proportion", &mv_proportion);

  m.def("optimize", [](int d1, int d2, int d3, std::array<double, 3> thetas, bool formal) {
    const auto model = assemble_quadratic_model(d1, d2, d3, thetas, formal ? ThetaDomain::kFormal : ThetaDomain::kSecondMoment);
    return result_dict(maximize_rayleigh(model));
  }, py::arg("d1"), py::arg("d2"), py::arg("d3"), py::arg("thetas") = std::array<double, 3>{0.5, 0.163, 0.5},
     py::arg("formal") = false);

  m.def("reproduce", [] {
    const auto r = reproduce_reference();
    py::dict d;
    d["spec"] = r.spec;
    d["s1"] = r.s1;
    d["s2"] = r.s2;
    d["kappa"] = r.kappa;
    d["lambda"] = r.lambda;
    d["proportion"] = r.fixed_value;
    d["meets_claimed_bound"] = r.meets_claimed_bound();
    d["optimized"] = result_dict(r.optimized);
    return d;
  });

  m.def("scan_theta2", [](std::vector<double> grid, std::array<int, 3> degrees, unsigned workers) {
    ScanTable t;
    {
      py::gil_scoped_release release;
      t = scan_theta2(grid, degrees, workers);
    }
    py::list rows;
    for (const auto& r : t.rows) {
      py::dict d;
      d["theta2"] = r.theta2;
      d["value"] = r.value;
      d["min_eigenvalue"] = r.condition_diagnostic;
      d["error"] = r.error;
      rows.append(d);
    }
    return rows;
  }, py::arg("grid"), py::arg("degrees") = std::array<int, 3>{5, 5, 2}, py::arg("workers") = 1);

  m.def("kernel", [](const std::string& kind, double x, int K, std::optional<double> sigma) {
    const Kernel k(parse_kernel_kind(kind), KernelConfig::with_pole_kill_count(K));
    return sigma ? k.eval_on_line(x, *sigma) : k.eval(x);
  }, py::arg("kind"), py::arg("x"), py::arg("pole_kill_count") = 2, py::arg("sigma") = py::none());

  m.def("characters", [](int q) {
    py::list out;
    for (const auto& c : enumerate(q)) {
      py::dict d;
      d["index"] = c.index();
      d["conductor"] = c.conductor();
      d["order"] = c.order();
      d["even"] = c.is_even();
      d["primitive"] = c.is_primitive();
      d["values"] = c.values();
      out.append(d);
    }
    return out;
  });
  m.def("phi_star", &phi_star);
  m.def("phi_plus", &phi_plus);
  m.def("gauss_sum", [](int q, int index) { return gauss_sum(character_at(q, index)); });
  m.def("root_number", [](int q, int index) { return root_number(character_at(q, index)); });
  m.def("ramanujan_sum", &ramanujan_sum);
  m.def("even_primitive_pair_sum", &even_primitive_pair_sum);

  m.def("central_value", [](int q, int index, int K) { return central_value(character_at(q, index), engine_for(K)); },
        py::arg("q"), py::arg("index"), py::arg("pole_kill_count") = 2);
  m.def("central_value_sq", [](int q, int index, int K) { return central_value_sq(character_at(q, index), engine_for(K)); },
        py::arg("q"), py::arg("index"), py::arg("pole_kill_count") = 2);
  m.def("identity_residual", [](int q, int index, double T) {
    return vf_identity_residual(character_at(q, index), T, engine_for(2));
  }, py::arg("q"), py::arg("index"), py::arg("T") = 1.0);

  m.def("compute_moments", [](double Q, std::optional<MollifierSpec> spec, int stride, unsigned workers) {
    SweepOptions opts;
    opts.stride = stride;
    opts.workers = workers;
    MomentReport r;
    {
      py::gil_scoped_release release;
      r = compute_moments(Q, spec ? *spec : MollifierSpec::reference(), default_psi(), opts);
    }
    py::dict d;
    d["Q"] = r.Q;
    d["S1"] = r.S1;
    d["S2"] = r.S2;
    d["norm"] = r.norm;
    d["predicted_s1"] = r.predicted_s1;
    d["predicted_s2"] = r.predicted_s2;
    d["lower_bound"] = r.lower_bound;
    d["weighted_nonzero"] = r.weighted_nonzero;
    d["census_total"] = r.census_total;
    d["census_nonzero"] = r.census_nonzero;
    py::list parts;
    for (const auto& p : r.partials) {
      py::dict e;
      e["q"] = p.q;
      e["weight"] = p.weight;
      e["phi_plus"] = p.phi_plus;
      e["nonzero"] = p.nonzero;
      e["s1"] = p.s1;
      e["s2"] = p.s2;
      parts.append(e);
    }
    d["partials"] = parts;
    return d;
  }, py::arg("Q"), py::arg("spec") = py::none(), py::arg("stride") = 1, py::arg("workers") = 1);

  m.def("kloosterman_sum", &kloosterman_sum);
  m.def("reciprocity_check", &reciprocity_check);
  m.def("di_bound", &di_bound);
  m.def("weil_check", [](int p_max) {
    const auto r = weil_check(p_max);
    py::dict d;
    d["primes_checked"] = r.primes_checked;
    d["sums_checked"] = r.sums_checked;
    d["worst_ratio"] = r.worst_ratio;
    return d;
  });
  m.def("kloosterman_bench", [](int scale, std::uint64_t seed) {
    py::list out;
    for (const auto& r : kloosterman_bench(scale, seed)) {
      out.append(py::make_tuple(r.C, r.D, r.N, r.R, r.S, r.form_abs, r.bound, r.ratio));
    }
    return out;
  }, py::arg("scale"), py::arg("seed") = 1);
}
