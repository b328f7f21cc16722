// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reports cross the boundary as JSON text; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "vamos/certificates.hpp"
#include "vamos/error.hpp"
#include "vamos/io.hpp"
#include "vamos/matroid.hpp"
#include "vamos/polynomial.hpp"
#include "vamos/proof.hpp"
#include "vamos/stability.hpp"

namespace py = pybind11;
using namespace vamos;

namespace {

std::string rayleigh_text(const Matroid& m, int i, int j, std::vector<int> deletions,
                          std::vector<int> contractions) {
  TargetRecipe r{"", std::move(deletions), std::move(contractions), i, j};
  return format_poly_text(target_polynomial(m, r));
}

std::string verify_certificate_json(const std::filesystem::path& path) {
  const auto cert = read_certificate_file(path);
  if (!cert.target) throw DomainError(path.string() + " has no target recipe");
  const auto base = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto target = target_polynomial(resolve_matroid(cert.target->matroid, base), *cert.target);
  const auto identity = verify_gram_identity(cert, target);
  const auto psd = verify_psd(cert.gram);
  Json doc{{"target", describe(*cert.target)},
           {"identity", identity.holds},
           {"psd", psd.is_psd},
           {"rank", psd.rank},
           {"reason", identity.reason}};
  return doc.dump();
}

std::string claims_json(const std::filesystem::path& data_dir) {
  Json out = Json::array();
  for (const auto& c : verify_isomorphism_claims(data_dir)) {
    out.push_back(Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}, {"labeling", c.labeling}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact matroid, polynomial and certificate routines";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<StructuralError> structural_error(m, "StructuralError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<LoadError> load_error(m, "LoadError", PyExc_OSError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const StructuralError& e) {
      py::set_error(structural_error, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const LoadError& e) {
      py::set_error(load_error, e.what());
    }
  });

  py::class_<Matroid>(m, "Matroid")
      .def(py::init([](int n, int rank, const std::vector<std::vector<int>>& bases) {
             return Matroid::from_lists(n, rank, bases);
           }),
           py::arg("n"), py::arg("rank"), py::arg("bases"))
      .def_property_readonly("n", &Matroid::size)
      .def_property_readonly("rank", &Matroid::rank)
      .def_property_readonly("bases", &Matroid::sorted_basis_lists)
      .def("__len__", &Matroid::basis_count)
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("to_json", [](const Matroid& a) { return format_matroid(a); })
      .def("__repr__", [](const Matroid& a) {
        return "Matroid(n=" + std::to_string(a.size()) + ", rank=" + std::to_string(a.rank()) +
               ", bases=" + std::to_string(a.basis_count()) + ")";
      });

  m.def("vamos_matroid", &vamos_matroid, py::arg("half_n"));
  m.def("uniform_matroid", &uniform_matroid, py::arg("rank"), py::arg("n"));
  m.def("matroid_from_json", [](const std::string& text) { return matroid_from_json(Json::parse(text)); });
  m.def("resolve_matroid", &resolve_matroid, py::arg("ref"), py::arg("base_dir") = std::filesystem::path("."));
  m.def("is_matroid", [](const Matroid& a) { return check_basis_exchange(a).holds; });
  m.def("check_three_partition", &check_three_partition);
  m.def("delete_element", &delete_element);
  m.def("contract_element", &contract_element);
  m.def("dual", &dual);
  m.def("minor", [](const Matroid& a, std::vector<int> deletions, std::vector<int> contractions) {
    return minor(LabeledMatroid::identity(a), deletions, contractions).matroid;
  }, py::arg("matroid"), py::arg("deletions") = std::vector<int>{}, py::arg("contractions") = std::vector<int>{});
  m.def("are_isomorphic", [](const Matroid& a, const Matroid& b) -> std::optional<std::vector<int>> {
    if (auto pi = are_isomorphic(a, b)) return pi->image();
    return std::nullopt;
  });
  m.def("has_v8_minor", [](const Matroid& a) -> std::optional<std::pair<std::vector<int>, std::vector<int>>> {
    if (auto w = has_v8_minor(a)) return std::make_pair(elements_of(w->deleted), elements_of(w->contracted));
    return std::nullopt;
  });

  m.def("basis_polynomial", [](const Matroid& a) { return format_poly_text(basis_generating_poly(a)); });
  m.def("rayleigh_difference", &rayleigh_text, py::arg("matroid"), py::arg("i"), py::arg("j"),
        py::arg("deletions") = std::vector<int>{}, py::arg("contractions") = std::vector<int>{});

  m.def("verify_certificate_json", &verify_certificate_json, py::arg("path"));
  m.def("certify_v10_json", [](const std::filesystem::path& data_dir, int jobs) {
    return report_to_json(check_tree(builtin_v10_tree(data_dir), jobs)).dump();
  }, py::arg("data_dir"), py::arg("jobs") = 1);
  m.def("certify_tree_json", [](const std::filesystem::path& tree, const std::filesystem::path& cert_dir,
                                const std::filesystem::path& matroid_dir, int jobs) {
    return report_to_json(check_tree(load_proof_tree(tree, cert_dir, matroid_dir), jobs)).dump();
  }, py::arg("tree"), py::arg("cert_dir"), py::arg("matroid_dir"), py::arg("jobs") = 1);
  m.def("isomorphism_claims_json", &claims_json, py::arg("data_dir"));

  m.def("sample_stability_json", [](const Matroid& a, int trials, std::uint64_t seed, int jobs) {
    return report_to_json(sample_stability(basis_generating_poly(a), trials, seed, jobs)).dump();
  }, py::arg("matroid"), py::arg("trials"), py::arg("seed"), py::arg("jobs") = 1);
  m.def("rayleigh_spot_check_json", [](const Matroid& a, int i, int j, int trials, std::uint64_t seed) {
    return report_to_json(rayleigh_spot_check(basis_generating_poly(a), i, j, trials, seed)).dump();
  }, py::arg("matroid"), py::arg("i"), py::arg("j"), py::arg("trials"), py::arg("seed"));

  m.attr("DEFAULT_DATA_DIR") = default_data_dir().string();
}
