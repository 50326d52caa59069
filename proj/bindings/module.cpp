// Python bindings for the main operations: scenes, pairings, periods,
// amoeba numerics, homology and lattice computations.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropper/amoeba.hpp"
#include "tropper/homology.hpp"
#include "tropper/lemmas.hpp"
#include "tropper/period.hpp"
#include "tropper/walls.hpp"

namespace py = pybind11;
using namespace tropper;

namespace {

const Cycle& pick_cycle(const Scene& s, const std::string& id) {
  const Cycle* c = id.empty() && !s.cycles.empty() ? &s.cycles.front() : s.find_cycle(id);
  if (!c) throw std::invalid_argument("no cycle " + (id.empty() ? "in scene" : id));
  return *c;
}

const Slab& pick_slab(const Scene& s, const std::string& id) {
  const Slab* b = id.empty() && !s.slabs.empty() ? &s.slabs.front() : s.find_slab(id);
  if (!b) throw std::invalid_argument("no slab " + (id.empty() ? "in scene" : id));
  return *b;
}

Series parse_input(const std::string& text, const std::vector<std::string>& vars, int k) {
  return parse_series(text, vars, std::max(k, 8));
}

}  // namespace

PYBIND11_MODULE(_tropper, m) {
  m.doc() = "combinatorial period evaluation for wall structures";

  py::class_<Scene>(m, "Scene")
      .def_readonly("dim", &Scene::dim)
      .def_readonly("k", &Scene::k)
      .def("cycle_ids",
           [](const Scene& s) {
             std::vector<std::string> out;
             for (const auto& c : s.cycles) out.push_back(c.id);
             return out;
           })
      .def("slab_ids", [](const Scene& s) {
        std::vector<std::string> out;
        for (const auto& b : s.slabs) out.push_back(b.id);
        return out;
      });

  m.def("load_scene", &load_scene, py::arg("path"));
  m.def("validate", [](const Scene& s) {
    std::vector<std::string> bad = validate_scene(s);
    for (const auto& v : check_consistency_codim1(s)) bad.push_back(v);
    for (const auto& c : s.cycles)
      for (const auto& v : check_balancing(s, c)) bad.push_back(v);
    return bad;
  });

  m.def(
      "period_json",
      [](const Scene& s, const std::string& cycle, int k) {
        return period_to_json(period(s, pick_cycle(s, cycle), k ? k : s.k));
      },
      py::arg("scene"), py::arg("cycle") = "", py::arg("k") = 0);
  m.def(
      "pair_c1",
      [](const Scene& s, const std::string& cycle) { return pair_c1(s, pick_cycle(s, cycle)); },
      py::arg("scene"), py::arg("cycle") = "");
  m.def(
      "monodromy",
      [](const Scene& s, const std::string& cycle) { return monodromy(s, pick_cycle(s, cycle)); },
      py::arg("scene"), py::arg("cycle") = "");
  m.def(
      "pair_gluing",
      [](const Scene& s, const std::string& cycle) {
        return pair_gluing(s, pick_cycle(s, cycle)).str();
      },
      py::arg("scene"), py::arg("cycle") = "");
  m.def(
      "ronkin_log",
      [](const Scene& s, const std::string& slab, const std::vector<long>& order, int k) {
        return ronkin_series(pick_slab(s, slab), order, k ? k : s.k).str();
      },
      py::arg("scene"), py::arg("slab"), py::arg("order"), py::arg("k") = 0);

  m.def(
      "normalize_slab",
      [](const std::string& f, const std::vector<std::string>& vars, int k) {
        return normalize_slab(parse_input(f, vars, k), k).str();
      },
      py::arg("f"), py::arg("vars"), py::arg("k"));
  m.def(
      "complement_order",
      [](const std::string& f, const std::vector<std::string>& vars,
         const std::vector<double>& x, const std::map<std::string, double>& params, double t) {
        return complement_order(parse_input(f, vars, 8), x, params, t).m;
      },
      py::arg("f"), py::arg("vars"), py::arg("x"),
      py::arg("params") = std::map<std::string, double>{}, py::arg("t") = 0.0);
  m.def(
      "ronkin_numeric",
      [](const std::string& f, const std::vector<std::string>& vars, const std::vector<long>& order,
         const std::vector<double>& x, const std::map<std::string, double>& params, double t) {
        return ronkin_numeric(parse_input(f, vars, 8), order, x, params, t);
      },
      py::arg("f"), py::arg("vars"), py::arg("order"), py::arg("x"),
      py::arg("params") = std::map<std::string, double>{}, py::arg("t") = 0.0);

  m.def(
      "homology",
      [](const std::string& json_text, int q) {
        HomologyGroup h = homology(complex_from_json(json_text), q);
        std::vector<long> torsion;
        for (const auto& d : h.torsion) torsion.push_back(d.get_si());
        return py::make_tuple(h.rank, torsion);
      },
      py::arg("complex_json"), py::arg("q"));
  m.def(
      "picard",
      [](const std::vector<long>& c1, const std::vector<std::string>& gluing) {
        std::vector<MultValue> glue;
        for (const auto& g : gluing) glue.push_back(parse_mult_value(g));
        PicardLattice p = picard_sublattice(c1, glue);
        std::vector<std::vector<long>> basis;
        for (int j = 0; j < p.basis.cols; ++j) {
          std::vector<long> col;
          for (int i = 0; i < p.basis.rows; ++i) col.push_back(p.basis.at(i, j).get_si());
          basis.push_back(col);
        }
        return py::make_tuple(p.rank, basis);
      },
      py::arg("c1"), py::arg("gluing"));

  m.def("alternating_roots", &alternating_roots, py::arg("m"), py::arg("n"));
  m.def(
      "gamma_v_fraction", [](long v) { return gamma_v_fraction(v).get_str(); }, py::arg("valency"));
}
