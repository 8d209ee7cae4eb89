#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathgpd/axioms.hpp"
#include "pathgpd/io.hpp"
#include "pathgpd/kraus.hpp"

namespace py = pybind11;
using namespace pathgpd;

namespace {

// groupoids are shared immutable; hold the pointer in a value wrapper
struct PyGroupoid {
  GroupoidPtr p;
};

GroupoidPtr groupoid_by_spec(const std::string& spec) {
  for (const auto& e : standard_objects())
    if (e.name == spec) return e.groupoid;
  if (spec.rfind("discrete:", 0) == 0) return discrete_groupoid(std::stoi(spec.substr(9)));
  if (spec.rfind("indiscrete:", 0) == 0) return indiscrete_groupoid(std::stoi(spec.substr(11)));
  if (spec.rfind("delooping:", 0) == 0) {
    auto g = group_by_name(spec.substr(10));
    if (!g) throw std::invalid_argument("unknown group in spec: " + spec);
    return delooping(*g);
  }
  throw std::invalid_argument("unknown groupoid spec: " + spec);
}

FiniteGroup group_by_spec(const std::string& name) {
  auto g = group_by_name(name);
  if (!g) throw std::invalid_argument("unknown group: " + name);
  return *g;
}

std::vector<std::string> violations_to_strings(const std::vector<Violation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.law + ": " + v.detail);
  return out;
}

} // namespace

PYBIND11_MODULE(_pathgpd, mod) {
  mod.doc() = "finite groupoid verification engine";

  py::class_<PyGroupoid>(mod, "Groupoid")
      .def_property_readonly("num_objects", [](const PyGroupoid& g) { return g.p->num_objects(); })
      .def_property_readonly("num_morphisms",
                             [](const PyGroupoid& g) { return g.p->num_morphisms(); })
      .def("src", [](const PyGroupoid& g, int m) { return g.p->src(m); })
      .def("dst", [](const PyGroupoid& g, int m) { return g.p->dst(m); })
      .def("compose", [](const PyGroupoid& g, int a, int b) { return g.p->compose(a, b); })
      .def("validate",
           [](const PyGroupoid& g) { return violations_to_strings(validate_groupoid(*g.p)); })
      .def("to_json", [](const PyGroupoid& g) { return groupoid_to_json(*g.p).dump(2); })
      .def("__repr__", [](const PyGroupoid& g) {
        return "<Groupoid " + std::to_string(g.p->num_objects()) + " objects, " +
               std::to_string(g.p->num_morphisms()) + " morphisms>";
      });

  py::class_<GroupoidMap>(mod, "Map")
      .def_property_readonly("dom", [](const GroupoidMap& f) { return PyGroupoid{f.dom}; })
      .def_property_readonly("cod", [](const GroupoidMap& f) { return PyGroupoid{f.cod}; })
      .def_readonly("object_map", &GroupoidMap::object_map)
      .def_readonly("morphism_map", &GroupoidMap::morphism_map)
      .def("validate", [](const GroupoidMap& f) { return violations_to_strings(validate_map(f)); })
      .def("classify",
           [](const GroupoidMap& f, const std::string& property) {
             auto cert = classify(f, property);
             if (cert.precondition_failed)
               throw std::invalid_argument("precondition failed: " + cert.precondition_detail);
             return cert.verdict;
           })
      .def("to_json", [](const GroupoidMap& f) { return map_to_json(f).dump(2); })
      .def("__repr__", [](const GroupoidMap& f) {
        return "<Map on " + std::to_string(f.object_map.size()) + " objects>";
      });

  mod.def("groupoid", [](const std::string& spec) { return PyGroupoid{groupoid_by_spec(spec)}; },
          "standard name, discrete:N, indiscrete:N, or delooping:GROUP");
  mod.def("groupoid_from_json", [](const std::string& text) {
    return PyGroupoid{groupoid_from_json(json::parse(text))};
  });
  mod.def("map_from_json",
          [](const std::string& text) { return map_from_json(json::parse(text)); });

  mod.def("identity", [](const PyGroupoid& g) { return identity_map(g.p); });
  mod.def("compose_maps", &compose_maps);
  mod.def("to_terminal", [](const PyGroupoid& g) { return to_terminal(g.p); });
  mod.def("point", [](const PyGroupoid& g, int obj) { return point_map(g.p, obj); });
  mod.def("maps_equal", &maps_equal);

  mod.def("find_homotopy", [](const GroupoidMap& f, const GroupoidMap& g) -> py::object {
    auto res = find_natural_iso(f, g);
    if (!res.found()) return py::none();
    return py::cast(res.value->components);
  });

  mod.def("path_object", [](const PyGroupoid& b) {
    auto pb = path_object(b.p);
    py::dict d;
    d["total"] = PyGroupoid{pb.total};
    d["r"] = pb.r;
    d["p0"] = pb.p0;
    d["p1"] = pb.p1;
    return d;
  });

  mod.def("factor", [](const GroupoidMap& f) {
    auto fac = factor_we_fib(f);
    py::dict d;
    d["middle"] = PyGroupoid{fac.middle};
    d["we_part"] = fac.we_part;
    d["fib_part"] = fac.fib_part;
    return d;
  });

  mod.def("truncate", [](const GroupoidMap& f) {
    auto tr = truncate(f);
    py::dict d;
    d["truncated"] = PyGroupoid{tr.truncated};
    d["i"] = tr.i;
    d["f_prime"] = tr.f_prime;
    return d;
  });

  mod.def("pullback", [](const GroupoidMap& f, const GroupoidMap& g) {
    auto sq = pullback(f, g);
    py::dict d;
    d["apex"] = PyGroupoid{sq.apex};
    d["top"] = sq.top;
    d["left"] = sq.left;
    d["certified"] = sq.certified;
    return d;
  });

  mod.def(
      "solve_lifting",
      [](const GroupoidMap& m, const GroupoidMap& f, const GroupoidMap& top,
         const GroupoidMap& bottom, long long cap) -> py::object {
        LiftingProblem p{m, f, top, bottom};
        auto res = solve_lifting(p, cap);
        if (res.capped()) throw std::runtime_error("search cap exceeded");
        if (!res.found()) return py::none();
        return py::cast(*res.value);
      },
      py::arg("m"), py::arg("f"), py::arg("top"), py::arg("bottom"), py::arg("cap") = kDefaultCap);

  mod.def("truncation_mono_check", [](const std::string& group) {
    auto rep = truncation_mono_check(group_by_spec(group));
    py::dict d;
    d["group_order"] = rep.group_order;
    d["monic"] = rep.monic;
    d["matches"] = rep.matches();
    d["counterexample"] = rep.counterexample;
    return d;
  });

  mod.def("abelian_homogeneity_check", [](const std::string& group) {
    auto hw = abelian_theta(group_by_spec(group));
    return validate_homogeneity_witness(hw).empty();
  });

  mod.def("complete_group_check", [](const std::string& group) {
    auto rep = is_complete_group(group_by_spec(group));
    py::dict d;
    d["verdict"] = rep.verdict;
    d["automorphisms"] = rep.automorphism_count;
    d["inner"] = rep.inner_count;
    d["centre_size"] = static_cast<int>(rep.centre.size());
    return d;
  });

  mod.def(
      "run_axiom_suite",
      [](unsigned seed, int runs) {
        auto rep = run_axiom_suite(seed, runs);
        py::dict d;
        d["runs"] = rep.runs;
        d["failures"] = rep.failures;
        d["pass"] = rep.pass();
        d["details"] = rep.failure_details;
        return d;
      },
      py::arg("seed") = 0, py::arg("runs") = 50);
}
