// Python module _brauerq. Fields, classes and algebras are wrapped as opaque
// objects; reports come back as plain dicts in the same shape as the CLI JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "brauerq/cli.hpp"
#include "brauerq/error.hpp"
#include "brauerq/geo.hpp"
#include "brauerq/json_codec.hpp"

namespace py = pybind11;
using namespace brauerq;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

NumberField field_from(const std::string& poly, const std::string& flags) {
  FieldOptions o;
  if (!flags.empty()) o.flags = TrustedFlags::parse(flags);
  return build_field(poly, o);
}

std::vector<std::pair<Place, QmodZ>> assignments_from(const std::map<std::string, std::string>& inv) {
  std::vector<std::pair<Place, QmodZ>> out;
  for (const auto& [place, value] : inv) out.emplace_back(Place::parse(place), QmodZ::parse(value));
  return out;
}

std::vector<Place> places_from(const std::vector<std::string>& names) {
  std::vector<Place> out;
  for (const auto& n : names) out.push_back(Place::parse(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_brauerq, m) {
  m.doc() = "Exact Brauer-class and quaternion-algebra computations over number fields";
  m.attr("__version__") = kToolVersion;

  // Raised for every library error; `kind` holds the error kind name.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::exception<Error>(m, "BrauerqError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<NumberField>(m, "NumberField")
      .def(py::init(&field_from), py::arg("poly"), py::arg("flags") = "")
      .def_property_readonly("degree", &NumberField::degree)
      .def_property_readonly("signature",
                             [](const NumberField& k) { return std::make_pair(k.signature().r1, k.signature().r2); })
      .def_property_readonly("polynomial", [](const NumberField& k) { return k.defining_poly().to_string(); })
      .def_property_readonly("input_polynomial", [](const NumberField& k) { return k.input_poly().to_string(); })
      .def_property_readonly("reduction_factor", [](const NumberField& k) { return k.reduction_factor().get_str(); })
      .def_property_readonly("polyhash", &NumberField::polyhash)
      .def("summary", [](const NumberField& k) { return to_py(field_summary(k)); })
      .def("splitting_type",
           [](const NumberField& k, u64 p) {
             std::vector<std::pair<int, int>> out;
             for (const auto& pr : splitting_type(k, p).pairs) out.emplace_back(pr.e, pr.f);
             return out;
           })
      .def("inertia_gcd", [](const NumberField& k, u64 p) { return inertia_gcd(k, p); })
      .def("splits_completely", [](const NumberField& k, u64 p) { return split_predicates(k, p).splits_completely; })
      .def("__repr__", [](const NumberField& k) { return "NumberField('" + k.defining_poly().to_string() + "')"; });

  m.def("compare_splitting_types", [](const NumberField& a, const NumberField& b, u64 bound) {
    return to_py(to_json(compare_splitting_types(a, b, bound)));
  });
  m.def("compare_inertia_gcds", [](const NumberField& a, const NumberField& b, u64 bound) {
    return to_py(to_json(compare_inertia_gcds(a, b, bound)));
  });
  m.def("galois_fingerprint",
        [](const NumberField& k, u64 bound) { return to_py(to_json(galois_fingerprint(k, bound))); });

  py::class_<BrauerClass>(m, "BrauerClass")
      .def_property_readonly("field", &BrauerClass::field)
      .def_property_readonly("support",
                             [](const BrauerClass& c) {
                               std::map<std::string, std::string> out;
                               for (const auto& [place, value] : c.support()) out[place.to_string()] = value.to_string();
                               return out;
                             })
      .def("is_trivial", &BrauerClass::is_trivial)
      .def("to_dict", [](const BrauerClass& c) { return to_py(to_json(c)); });

  m.def(
      "make_class",
      [](const NumberField& k, const std::map<std::string, std::string>& inv) { return make_class(k, assignments_from(inv)); },
      py::arg("field"), py::arg("invariants"));
  m.def("rational_class", [](const std::map<std::string, std::string>& inv) {
    return make_class(rationals(), assignments_from(inv));
  });
  m.def("class_index", [](const BrauerClass& c) { return class_index(c).get_str(); });
  m.def("add", &add);
  m.def("restrict_from_Q", &restrict_from_Q);
  m.def("restrict_relative", &restrict_relative);
  m.def("transport_phi", &transport_phi);
  m.def("classes_equal", &classes_equal, py::arg("a"), py::arg("b"), py::arg("up_to_block_matching") = false);

  py::class_<QuaternionAlgebra>(m, "QuaternionAlgebra")
      .def_property_readonly("field", &QuaternionAlgebra::field)
      .def_property_readonly("ram",
                             [](const QuaternionAlgebra& a) {
                               std::vector<std::string> out;
                               for (const auto& p : a.ram()) out.push_back(p.to_string());
                               return out;
                             })
      .def("is_split", &QuaternionAlgebra::is_split)
      .def("to_dict", [](const QuaternionAlgebra& a) { return to_py(to_json(a)); })
      .def("__str__", &QuaternionAlgebra::to_string)
      .def("__eq__", [](const QuaternionAlgebra& a, const QuaternionAlgebra& b) { return a == b; });

  m.def("quat_make", [](const NumberField& k, const std::vector<std::string>& ram) { return quat_make(k, places_from(ram)); });
  m.def(
      "rational_quat", [](const std::vector<u64>& primes, bool inf) { return rational_quat(primes, inf); },
      py::arg("primes"), py::arg("infinity") = false);
  m.def("to_brauer", &to_brauer);
  m.def("base_change", &base_change);
  m.def("tensor_matches", &tensor_matches);
  m.def(
      "enumerate_matching",
      [](const QuaternionAlgebra& a, u64 bound, bool indefinite, std::size_t max_listed) {
        const auto e = enumerate_matching(a, bound, indefinite, kMaxRamPlaces, max_listed);
        py::dict out;
        out["space"] = to_py(to_json(e.space));
        py::list listed;
        for (const auto& b : e.matching) listed.append(b.to_string());
        out["matching"] = listed;
        out["total"] = py::int_(py::str(e.total.get_str()));
        out["truncated"] = e.truncated;
        return out;
      },
      py::arg("algebra"), py::arg("bound"), py::arg("indefinite") = false, py::arg("max_listed") = kMaxListed);
  m.def("distinguisher_search", [](const QuaternionAlgebra& b0, const NumberField& k1, const NumberField& k2, u64 bound) {
    const auto t = distinguisher_search(b0, k1, k2, bound);
    return t ? to_py(to_json(*t)) : py::object(py::none());
  });
  m.def("same_subalgebra_report", [](const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound) {
    return to_py(to_json(same_subalgebra_report(a1, a2, bound)));
  });

  m.def("symmetric_space_shape", [](const QuaternionAlgebra& a) {
    const auto s = symmetric_space_shape(a);
    return std::make_pair(s.s, s.r2);
  });
  m.def(
      "surface_classes",
      [](const QuaternionAlgebra& a, u64 bound) {
        std::vector<std::string> out;
        for (const auto& s : surface_classes(CommClass(a), bound).classes) out.push_back(s.b.to_string());
        return out;
      },
      py::arg("algebra"), py::arg("bound"));
  m.def("compare_surface_sets", [](const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound) {
    return to_py(to_json(compare_surface_sets(CommClass(a1), CommClass(a2), bound).match));
  });
  m.def(
      "commensurable",
      [](const QuaternionAlgebra& a1, const QuaternionAlgebra& a2, u64 bound) {
        return to_py(to_json(commensurable(CommClass(a1), CommClass(a2), bound)));
      },
      py::arg("a1"), py::arg("a2"), py::arg("bound") = 1000);
  m.def("preset_audit", [](const std::string& name, u64 bound) {
    return to_py(to_json(run_preset_audit(find_preset(name), FieldOptions{}, bound)));
  });

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
