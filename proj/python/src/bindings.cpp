#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "toricschubert/classify.hpp"
#include "toricschubert/errors.hpp"
#include "toricschubert/fan.hpp"
#include "toricschubert/oracles.hpp"
#include "toricschubert/partition.hpp"

namespace py = pybind11;
using namespace toricschubert;

namespace {

Permutation perm(const std::string& text) { return Permutation::parse(text); }

std::vector<std::vector<long long>> rays_of(const Fan& f) {
  std::vector<std::vector<long long>> out;
  for (const auto& r : f.rays) {
    std::vector<long long> row;
    for (const auto& x : r) row.push_back(x.convert_to<long long>());
    out.push_back(std::move(row));
  }
  return out;
}

Fan make_fan(std::size_t ambient_dim, const std::vector<std::vector<long long>>& rays,
             const std::vector<std::vector<std::size_t>>& max_cones) {
  Fan f;
  f.ambient_dim = ambient_dim;
  f.space = SpaceTag::Grassmannian;
  for (const auto& r : rays) {
    if (r.size() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "ray has the wrong length");
    LatticeVector v;
    for (long long x : r) v.emplace_back(x);
    f.rays.push_back(std::move(v));
  }
  for (auto cone : max_cones) {
    for (std::size_t i : cone) {
      if (i >= f.rays.size()) throw Error(ErrorCode::MismatchedData, "cone refers to a missing ray");
    }
    std::sort(cone.begin(), cone.end());
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

py::dict report_json(const ClassificationReport& r) {
  return py::module_::import("json").attr("loads")(to_json(r).dump());
}

py::dict cartier(const Fan& f) {
  const auto outcome = anticanonical_cartier(f);
  const auto* data = std::get_if<CartierData>(&outcome);
  const bool fano = data != nullptr && is_fano(f, *data);
  return py::module_::import("json").attr("loads")(to_json(outcome, fano).dump());
}

py::dict oracle_dict(const OracleReport& r) {
  py::dict d;
  d["comparisons"] = r.comparisons;
  d["classes"] = r.classes;
  d["size_sum"] = r.size_sum;
  d["identity_pieces"] = r.identity_pieces;
  d["counterexample"] = r.counterexample ? py::object(py::str(*r.counterexample)) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toric Schubert varieties in Grassmannians";

  py::register_exception<Error>(m, "ToricSchubertError", PyExc_ValueError);

  m.def("perm_from_word", [](const std::vector<int>& word, int n) { return perm_from_word(word, n).to_string(); },
        py::arg("word"), py::arg("n"));
  m.def("length", [](const std::string& w) { return length(perm(w)); }, py::arg("perm"));
  m.def("bruhat_leq", [](const std::string& u, const std::string& w) { return bruhat_leq(perm(u), perm(w)); },
        py::arg("u"), py::arg("w"));
  m.def(
      "lambda_of",
      [](const std::string& w, int d) {
        const Partition lambda = lambda_of(perm(w), d);
        return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
      },
      py::arg("perm"), py::arg("d"));
  m.def("perm_of", [](const std::vector<int>& parts, int d, int n) { return perm_of(Partition(parts), d, n).to_string(); },
        py::arg("partition"), py::arg("d"), py::arg("n"));
  m.def("is_toric", [](const std::string& w, int d, int n) { return is_toric(perm(w), d, n); }, py::arg("perm"),
        py::arg("d"), py::arg("n"));
  m.def("is_smooth", [](const std::string& w, int d, int n) { return is_smooth(perm(w), d, n); }, py::arg("perm"),
        py::arg("d"), py::arg("n"));
  m.def("is_gorenstein", [](const std::string& w, int d, int n) { return is_gorenstein(perm(w), d, n); },
        py::arg("perm"), py::arg("d"), py::arg("n"));
  m.def("classify", [](const std::string& w, int d, int n) { return report_json(classify_report(perm(w), d, n)); },
        py::arg("perm"), py::arg("d"), py::arg("n"));
  m.def("coset_classes",
        [](const std::vector<int>& word, int n, int d) {
          std::vector<std::pair<std::string, std::vector<IndexSet>>> out;
          for (const auto& c : coset_classes(ReducedWord(word, n), d)) {
            out.emplace_back(c.representative.to_string(), c.members);
          }
          return out;
        },
        py::arg("word"), py::arg("n"), py::arg("d"));
  m.def("lifts_of_v_closed_form", &lifts_of_v_closed_form, py::arg("d"), py::arg("a"), py::arg("b"));

  py::class_<Fan>(m, "Fan")
      .def(py::init(&make_fan), py::arg("ambient_dim"), py::arg("rays"), py::arg("max_cones"))
      .def_readonly("ambient_dim", &Fan::ambient_dim)
      .def_property_readonly("rays", &rays_of)
      .def_readonly("max_cones", &Fan::max_cones)
      .def_property_readonly("labels",
                             [](const Fan& f) {
                               std::vector<std::string> out;
                               for (const auto& l : f.labels) out.push_back(l.to_string());
                               return out;
                             })
      .def("to_json", [](const Fan& f) { return to_json(f).dump(); })
      .def("__repr__", [](const Fan& f) {
        return "<Fan dim=" + std::to_string(f.ambient_dim) + " rays=" + std::to_string(f.rays.size()) +
               " cones=" + std::to_string(f.max_cones.size()) + ">";
      });

  m.def("flag_fan", [](const std::vector<int>& word, int n) { return flag_fan(ReducedWord(word, n)); },
        py::arg("word"), py::arg("n"));
  m.def("grassmannian_fan", [](const std::string& w, int d, int n) { return grassmannian_fan(perm(w), d, n); },
        py::arg("perm"), py::arg("d"), py::arg("n"));
  m.def("wd_fan", &wd_fan, py::arg("d"));
  m.def("verify_ray_relations", &verify_ray_relations, py::arg("d"));
  m.def("anticanonical_cartier", &cartier, py::arg("fan"),
        "Dict with keys gorenstein, fano and m (rationals as strings).");
  m.def("is_complete_sampled", &is_complete_sampled, py::arg("fan"), py::arg("samples") = 10000,
        py::arg("seed") = 42);
  m.def("is_projective_space_fan", &is_projective_space_fan, py::arg("fan"));

  m.def("check_bruhat_subwords", [](int n) { return oracle_dict(check_bruhat_subwords(n)); }, py::arg("n"));
  m.def("check_lifts", [](int d) { return oracle_dict(check_lifts(d)); }, py::arg("d"));
  m.def("check_cones", [](int d) { return oracle_dict(check_cones(d)); }, py::arg("d"));
}
