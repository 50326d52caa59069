// tropctl: command line front end for the tropper library.
#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropper/amoeba.hpp"
#include "tropper/cycle.hpp"
#include "tropper/homology.hpp"
#include "tropper/lemmas.hpp"
#include "tropper/period.hpp"
#include "tropper/scene.hpp"
#include "tropper/series.hpp"
#include "tropper/walls.hpp"

using namespace tropper;

namespace {

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value: " + item);
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

std::vector<long> parse_longs(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_out);
    if (!out) throw std::runtime_error("cannot write " + json_out);
    out << text << "\n";
  }
}

struct Options {
  std::string scene_path, cycle_id, slab_id, params, json_out;
  int k = 4;
};

Scene load(const Options& o) {
  if (o.scene_path.empty()) throw CLI::RequiredError("--scene");
  Scene s = load_scene(o.scene_path);
  for (const auto& [k, v] : parse_params(o.params)) s.param_values[k] = v;
  return s;
}

const Cycle& pick_cycle(const Scene& s, const Options& o) {
  if (!o.cycle_id.empty()) {
    const Cycle* c = s.find_cycle(o.cycle_id);
    if (!c) throw std::invalid_argument("no cycle named " + o.cycle_id);
    return *c;
  }
  if (s.cycles.size() == 1) return s.cycles[0];
  throw std::invalid_argument("scene has several cycles; pass --cycle");
}

const Slab& pick_slab(const Scene& s, const Options& o) {
  if (!o.slab_id.empty()) {
    const Slab* b = s.find_slab(o.slab_id);
    if (!b) throw std::invalid_argument("no slab named " + o.slab_id);
    return *b;
  }
  if (s.slabs.size() == 1) return s.slabs[0];
  throw std::invalid_argument("scene has several slabs; pass --slab");
}

// Standalone Laurent expression from --f/--vars, with scene-independent params.
Series parse_f(const std::string& expr, const std::string& vars, int k) {
  if (expr.empty()) throw CLI::RequiredError("--f");
  return parse_series(expr, parse_names(vars), k);
}

nlohmann::json cycle_json(const Cycle& c) {
  nlohmann::json j;
  j["id"] = c.id;
  for (const auto& v : c.vertices) {
    nlohmann::json vj;
    vj["id"] = v.id;
    vj["at"] = v.at;
    for (const auto& x : v.pos) vj["pos"].push_back(x.get_str());
    j["vertices"].push_back(vj);
  }
  for (const auto& e : c.edges) {
    nlohmann::json ej;
    ej["tail"] = e.tail;
    ej["head"] = e.head;
    ej["cell"] = e.cell;
    for (const auto& x : e.xi) ej["xi"].push_back(x.get_si());
    j["edges"].push_back(ej);
  }
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"period integrals of toric degenerations from wall structures"};
  app.require_subcommand(1);
  Options o;
  std::string f_expr, vars, xs, ms, loop_text, complex_path, pairings_path;
  std::string svg_path, csv_path, bbox = "-3,3,-3,3", lemma_kind = "all";
  int resolution = 60, q_deg = 1;
  long max_mn = 40;
  double t_value = 0.0;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--scene", o.scene_path, "scene TOML file");
    c->add_option("--cycle", o.cycle_id, "cycle id within the scene");
    c->add_option("--slab", o.slab_id, "slab id within the scene");
    c->add_option("-k", o.k, "truncation order")->capture_default_str();
    c->add_option("--params", o.params, "parameter values, e.g. a=0.3,b=0.25");
    c->add_option("--json-out", o.json_out, "write JSON to a file instead of stdout");
    c->add_option("--f", f_expr, "Laurent expression (standalone mode)");
    c->add_option("--vars", vars, "comma-separated lattice variable names");
    c->add_option("--x", xs, "point of the Log base, comma-separated");
    c->add_option("--m", ms, "complement order, comma-separated");
    c->add_option("--t", t_value, "numeric value of t")->capture_default_str();
  };

  int rc = 0;
  std::string verdict;

  auto* validate = app.add_subcommand("validate", "check a scene file");
  add_common(validate);
  validate->callback([&] {
    Scene s = load(o);
    std::vector<std::string> bad = validate_scene(s);
    for (const auto& v : check_consistency_codim1(s)) bad.push_back(v);
    for (const auto& c : s.cycles)
      for (const auto& v : check_balancing(s, c)) bad.push_back("cycle " + c.id + ": " + v);
    if (bad.empty()) {
      emit("ok", o.json_out);
    } else {
      for (const auto& v : bad) std::cerr << v << "\n";
      rc = 1;
    }
  });

  auto* per = app.add_subcommand("period", "exponentiated period of a cycle");
  add_common(per);
  per->callback([&] {
    Scene s = load(o);
    emit(period_to_json(period(s, pick_cycle(s, o), o.k)), o.json_out);
  });

  auto* pc1 = app.add_subcommand("pair-c1", "c1 pairing of a cycle");
  add_common(pc1);
  pc1->callback([&] {
    Scene s = load(o);
    emit(std::to_string(pair_c1(s, pick_cycle(s, o))), o.json_out);
  });

  auto* mon = app.add_subcommand("monodromy", "Picard-Lefschetz t-coefficient");
  add_common(mon);
  mon->callback([&] {
    Scene s = load(o);
    emit(std::to_string(monodromy(s, pick_cycle(s, o))), o.json_out);
  });

  auto* pgl = app.add_subcommand("pair-gluing", "gluing pairing of a cycle");
  add_common(pgl);
  pgl->callback([&] {
    Scene s = load(o);
    emit(pair_gluing(s, pick_cycle(s, o)).str(), o.json_out);
  });

  auto ronkin_series_cmd = [&] {
    Scene s = load(o);
    const Slab& b = pick_slab(s, o);
    std::vector<long> m;
    if (!ms.empty()) {
      m = parse_longs(ms);
    } else if (!xs.empty()) {
      m = complement_order(b.f, parse_doubles(xs), s.param_values, 0.0).m;
    } else {
      throw std::invalid_argument("pass --m or --x");
    }
    RonkinValue r = ronkin_series(b, m, o.k);
    nlohmann::json j;
    j["m"] = m;
    j["log"] = r.str();
    j["exponentiated"] = r.exponentiated();
    j["tail"] = nlohmann::json::parse(series_to_json(r.tail));
    emit(j.dump(2), o.json_out);
  };
  auto* ron = app.add_subcommand("ronkin", "Ronkin series of a slab");
  add_common(ron);
  ron->callback(ronkin_series_cmd);

  auto* nor = app.add_subcommand("normalize", "normalize a cycle, or a slab with --slab");
  add_common(nor);
  nor->callback([&] {
    Scene s = load(o);
    if (!o.slab_id.empty()) {
      Series g = normalize_slab(pick_slab(s, o).f, o.k);
      nlohmann::json j;
      j["g"] = nlohmann::json::parse(series_to_json(g));
      j["text"] = g.str();
      emit(j.dump(2), o.json_out);
    } else {
      emit(cycle_json(normalize_cycle(s, pick_cycle(s, o))).dump(2), o.json_out);
    }
  });

  auto* fac = app.add_subcommand("factor", "binomial factorization of a slab or expression");
  add_common(fac);
  fac->callback([&] {
    Series f = !f_expr.empty() ? parse_f(f_expr, vars, o.k) : pick_slab(load(o), o).f;
    BinomialFactorization bf = factorize_binomials(f, o.k);
    nlohmann::json j;
    j["unit_coeff"] = bf.coeff.str();
    j["unit"] = bf.unit.str();
    j["exact"] = bf.exact;
    for (const auto& fct : bf.factors) j["factors"].push_back(fct.str());
    j["remainder"] = bf.remainder.str();
    emit(j.dump(2), o.json_out);
  });

  auto order_cmd = [&] {
    std::map<std::string, double> pv = parse_params(o.params);
    Series f;
    if (!f_expr.empty()) {
      f = parse_f(f_expr, vars, o.k);
    } else {
      Scene s = load(o);
      pv = s.param_values;
      f = pick_slab(s, o).f;
    }
    ComplementOrder co = complement_order(f, parse_doubles(xs), pv, t_value);
    nlohmann::json j;
    j["m"] = co.m;
    j["residual"] = co.residual;
    emit(j.dump(2), o.json_out);
  };
  auto* ord = app.add_subcommand("order", "amoeba complement order at a point");
  add_common(ord);
  ord->callback(order_cmd);

  auto ronkin_numeric_cmd = [&] {
    std::map<std::string, double> pv = parse_params(o.params);
    Series f = parse_f(f_expr, vars, o.k);
    std::vector<double> x = parse_doubles(xs);
    std::vector<long> m = !ms.empty() ? parse_longs(ms) : complement_order(f, x, pv, t_value).m;
    std::complex<double> v = ronkin_numeric(f, m, x, pv, t_value);
    std::ostringstream out;
    out.precision(12);
    out << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    emit(out.str(), o.json_out);
  };

  auto plot_cmd = [&] {
    std::map<std::string, double> pv = parse_params(o.params);
    Series f;
    if (!f_expr.empty()) {
      f = parse_f(f_expr, vars, o.k);
    } else {
      Scene s = load(o);
      pv = s.param_values;
      f = pick_slab(s, o).f;
    }
    AmoebaRaster r = amoeba_raster(f, pv, t_value, parse_doubles(bbox), resolution);
    if (!svg_path.empty()) {
      std::ofstream out(svg_path);
      out << raster_svg(r);
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << raster_csv(r);
    }
    if (svg_path.empty() && csv_path.empty()) emit(raster_csv(r), o.json_out);
  };
  auto* plt = app.add_subcommand("amoeba-plot", "raster the amoeba of a function");
  add_common(plt);
  plt->add_option("--bbox", bbox, "x0,x1,y0,y1")->capture_default_str();
  plt->add_option("--resolution", resolution, "grid points per axis")->capture_default_str();
  plt->add_option("--svg", svg_path, "write an SVG raster");
  plt->add_option("--csv", csv_path, "write a CSV raster");
  plt->callback(plot_cmd);

  auto* amo = app.add_subcommand("amoeba", "order | ronkin | plot");
  amo->require_subcommand(1);
  auto* amo_ord = amo->add_subcommand("order", "complement order at a point");
  add_common(amo_ord);
  amo_ord->callback(order_cmd);
  auto* amo_ron = amo->add_subcommand("ronkin", "numeric complex Ronkin value");
  add_common(amo_ron);
  amo_ron->callback(ronkin_numeric_cmd);
  auto* amo_plt = amo->add_subcommand("plot", "raster the amoeba");
  add_common(amo_plt);
  amo_plt->add_option("--bbox", bbox, "x0,x1,y0,y1");
  amo_plt->add_option("--resolution", resolution, "grid points per axis");
  amo_plt->add_option("--svg", svg_path, "write an SVG raster");
  amo_plt->add_option("--csv", csv_path, "write a CSV raster");
  amo_plt->callback(plot_cmd);

  auto* hom = app.add_subcommand("homology", "homology of a chain complex from JSON");
  add_common(hom);
  hom->add_option("--complex", complex_path, "chain complex JSON file")->required();
  hom->add_option("--q", q_deg, "degree")->capture_default_str();
  hom->callback([&] {
    HomologyGroup h = homology(complex_from_json(read_file(complex_path)), q_deg);
    nlohmann::json j;
    j["rank"] = h.rank;
    for (const auto& d : h.torsion) j["torsion"].push_back(d.get_si());
    if (h.torsion.empty()) j["torsion"] = nlohmann::json::array();
    emit(j.dump(2), o.json_out);
  });

  auto* pic = app.add_subcommand("picard", "Picard sublattice from a pairing table");
  add_common(pic);
  pic->add_option("--pairings", pairings_path, "JSON with c1 list and gluing strings")
      ->required();
  pic->callback([&] {
    nlohmann::json in = nlohmann::json::parse(read_file(pairings_path));
    std::vector<long> c1;
    for (const auto& v : in.at("c1")) c1.push_back(v.get<long>());
    std::vector<MultValue> glue;
    for (const auto& v : in.at("gluing")) glue.push_back(parse_mult_value(v.get<std::string>()));
    PicardLattice lat = picard_sublattice(c1, glue);
    nlohmann::json j;
    j["rank"] = lat.rank;
    for (int c = 0; c < lat.basis.cols; ++c) {
      nlohmann::json col;
      for (int r = 0; r < lat.basis.rows; ++r) col.push_back(lat.basis.at(r, c).get_si());
      j["basis"].push_back(col);
    }
    if (lat.rank == 0) j["basis"] = nlohmann::json::array();
    emit(j.dump(2), o.json_out);
  });

  auto* con = app.add_subcommand("consistency", "wall-crossing consistency checks");
  add_common(con);
  con->add_option("--loop", loop_text, "signed wall loop, e.g. wx:+1,wd:+1,wy:+1");
  con->callback([&] {
    Scene s = load(o);
    nlohmann::json j;
    std::vector<std::string> codim1 = check_consistency_codim1(s);
    j["codim1_ok"] = codim1.empty();
    for (const auto& v : codim1) j["codim1_violations"].push_back(v);
    bool ok = codim1.empty();
    if (!loop_text.empty()) {
      std::vector<std::pair<std::string, int>> loop;
      for (const auto& item : parse_names(loop_text)) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("expected wall:+1 or wall:-1, got " + item);
        loop.emplace_back(item.substr(0, colon), std::stoi(item.substr(colon + 1)));
      }
      bool c0 = check_consistency_codim0(s, loop, o.k);
      j["codim0_ok"] = c0;
      ok = ok && c0;
    }
    j["consistent"] = ok;
    emit(j.dump(2), o.json_out);
  });

  auto* lem = app.add_subcommand("lemmas", "verifiable lemma checks");
  add_common(lem);
  lem->add_option("kind", lemma_kind, "alternating | gamma | all")->capture_default_str();
  lem->add_option("--max", max_mn, "range bound")->capture_default_str();
  lem->callback([&] {
    bool all = true;
    std::ostringstream out;
    if (lemma_kind == "alternating" || lemma_kind == "all") {
      for (long m = 1; m <= max_mn; ++m)
        for (long n = 1; n <= max_mn; ++n)
          if (!alternating_roots(m, n)) {
            all = false;
            out << "alternation fails at (" << m << "," << n << ")\n";
          }
    }
    if (lemma_kind == "gamma" || lemma_kind == "all") {
      for (long v = 3; v <= std::max<long>(12, max_mn); ++v)
        out << "gamma(" << v << ") = " << gamma_v_fraction(v).get_str() << "\n";
    }
    out << (all ? "all pass" : "FAIL");
    emit(out.str(), o.json_out);
    if (!all) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("TROPPER_THREADS")) (void)threads;  // single-threaded
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
