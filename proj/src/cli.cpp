#include "vosa/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "vosa/constructions.hpp"
#include "vosa/json_io.hpp"

namespace vosa::cli {
namespace {

using nlohmann::json;

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Emits scalars as term lists in JSON mode and as rendered strings in text mode.
struct Emitter {
  bool text = false;
  json scalar(const Scalar& s) const { return text ? json(s.to_string()) : scalar_to_json(s); }
  json vector(GradedModule& m, const StateVector& v) const {
    json arr = json::array();
    for (const auto& [id, c] : v) arr.push_back({{"state", m.format(id)}, {"coef", scalar(c)}});
    return arr;
  }
};

Rational parse_rational(const std::string& s, const char* what) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw BadInput(std::string("malformed ") + what + " '" + s + "'");
  q.canonicalize();
  return q;
}

HalfInt parse_half(const std::string& s, const char* what) {
  try {
    return HalfInt::parse(s);
  } catch (const std::exception&) {
    throw BadInput(std::string("malformed ") + what + " '" + s + "'");
  }
}

json read_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw BadInput("cannot open '" + arg + "'");
  return json::parse(in);
}

std::shared_ptr<const LieAlgebraData> load_algebra(const std::string& arg) {
  if (arg == "sl2") return std::make_shared<LieAlgebraData>(sl2_basis());
  return std::make_shared<LieAlgebraData>(lie_algebra_from_json(read_json_arg(arg)));
}

HalfInt resolve_depth(const RunConfig& cfg, HalfInt fallback) {
  if (cfg.depth) return parse_half(*cfg.depth, "depth");
  if (const char* env = std::getenv("VOSA_DEPTH")) return parse_half(env, "VOSA_DEPTH");
  return fallback;
}

HalfInt module_depth(const RunConfig& cfg) {
  const HalfInt d = resolve_depth(cfg, HalfInt(2));
  if (d < kHalf) throw BadInput("depth must be at least 1/2");
  return d;
}

json check_json(const std::string& relation, HalfInt depth, const CheckResult& r) {
  json j{{"relation", relation}, {"depth", depth.to_string()}, {"status", r.ok ? "pass" : "fail"},
         {"checked", r.checked}};
  if (!r.ok) j["failure"] = r.failure;
  return j;
}

json checks_json(const std::vector<RelationCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(check_json(c.relation, c.depth, c.result));
  return arr;
}

int count_failures(const json& checks) {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const json& c) { return c.at("status") != "pass"; }));
}

bool is_flat(const json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); });
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(std::ostream& os, const json& j, int indent);

// Arrays of flat objects with identical keys print as aligned tables.
bool render_table(std::ostream& os, const json& arr, int indent) {
  if (arr.empty() || !std::all_of(arr.begin(), arr.end(), is_flat)) return false;
  std::vector<std::string> keys;
  for (auto it = arr[0].begin(); it != arr[0].end(); ++it) keys.push_back(it.key());
  for (const auto& row : arr)
    if (row.size() != keys.size()) return false;
  std::vector<std::size_t> width;
  for (const auto& k : keys) {
    std::size_t w = k.size();
    for (const auto& row : arr) w = std::max(w, cell(row.value(k, json())).size());
    width.push_back(w);
  }
  const std::string pad(indent, ' ');
  os << pad;
  for (std::size_t i = 0; i < keys.size(); ++i) os << std::left << std::setw(static_cast<int>(width[i]) + 2) << keys[i];
  os << '\n';
  for (const auto& row : arr) {
    os << pad;
    for (std::size_t i = 0; i < keys.size(); ++i)
      os << std::left << std::setw(static_cast<int>(width[i]) + 2) << cell(row.value(keys[i], json()));
    os << '\n';
  }
  return true;
}

void render_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_primitive()) {
        os << pad << it.key() << ": " << cell(v) << '\n';
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
        os << pad << it.key() << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << cell(v[i]);
        os << "]\n";
      } else {
        os << pad << it.key() << ":\n";
        render_text(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    if (render_table(os, j, indent)) return;
    for (const auto& e : j) {
      if (e.is_primitive()) {
        os << pad << "- " << cell(e) << '\n';
      } else {
        os << pad << "-\n";
        render_text(os, e, indent + 2);
      }
    }
  } else {
    os << pad << cell(j) << '\n';
  }
}

struct Named {
  std::string name;
  FieldPtr field;
};

// Builds a named instance and the fields whose pairs the bracket suite checks.
struct System {
  VosaInstance vosa;
  std::vector<Named> fields;
  std::shared_ptr<void> keep;  // owner of auxiliary data
};

System build_system(const RunConfig& cfg) {
  System sys;
  auto color = [](const char* base, std::size_t a) { return std::string(base) + "^" + std::to_string(a); };
  if (cfg.system == "fermion") {
    sys.vosa = fermion_vosa(1);
    sys.fields = {{"psi", sys.vosa.generators[0]}, {"L", sys.vosa.fields->field_of_state(sys.vosa.omega)}};
  } else if (cfg.system == "g-fermion") {
    auto fs = std::make_shared<FermionSystem>(g_fermion_system(load_algebra(cfg.algebra)));
    sys.vosa = fs->vosa;
    for (std::size_t a = 0; a < fs->currents.size(); ++a) {
      sys.fields.push_back({color("psi", a), fs->vosa.generators[a]});
      sys.fields.push_back({color("S", a), fs->currents[a]});
    }
    sys.fields.push_back({"L", sys.vosa.fields->field_of_state(sys.vosa.omega)});
    sys.keep = fs;
  } else if (cfg.system == "sugawara") {
    sys.vosa = boson_sugawara(load_algebra(cfg.algebra), Scalar(parse_rational(cfg.level, "level")));
    for (std::size_t a = 0; a < sys.vosa.generators.size(); ++a) sys.fields.push_back({color("X", a), sys.vosa.generators[a]});
    sys.fields.push_back({"L", sys.vosa.fields->field_of_state(sys.vosa.omega)});
  } else if (cfg.system == "super") {
    auto sc = std::make_shared<SuperConstruction>(
        super_construction(load_algebra(cfg.algebra), Scalar(parse_rational(cfg.level, "level"))));
    sys.vosa = sc->vosa;
    for (std::size_t a = 0; a < sc->psi.size(); ++a) {
      sys.fields.push_back({color("psi", a), sc->psi[a]});
      if (!sc->level.is_zero()) sys.fields.push_back({color("X", a), sc->x[a]});
      sys.fields.push_back({color("S", a), sc->currents[a]});
      sys.fields.push_back({color("B", a), sc->b[a]});
    }
    sys.fields.push_back({"L", sc->L});
    sys.fields.push_back({"G", sc->G});
    sys.keep = sc;
  } else {
    throw BadInput("unknown system '" + cfg.system + "' (fermion, g-fermion, sugawara, super)");
  }
  return sys;
}

ModulePtr load_module(const RunConfig& cfg) {
  if (cfg.module.empty()) throw BadInput("--module is required");
  return module_from_json(read_json_arg(cfg.module));
}

json cmd_validate(const RunConfig& cfg, const Emitter& em, int& status) {
  auto lie = load_algebra(cfg.algebra);
  const auto rep = validate(*lie);
  json v = json::array();
  for (const auto& x : rep.violations) v.push_back({{"kind", x.kind}, {"indices", x.indices}, {"detail", x.detail}});
  json out{{"algebra", lie->name()}, {"dim", lie->dim()}, {"ok", rep.ok()}, {"violations", v}};
  if (rep.ok()) out["dual_coxeter"] = em.scalar(dual_coxeter(*lie));
  status = rep.ok() ? 0 : 1;
  return out;
}

json cmd_catalog() {
  json rows = json::array();
  for (const auto& e : catalog()) rows.push_back({{"family", e.family}, {"dim", e.dim}, {"dual_coxeter", e.dual_coxeter}});
  return {{"catalog", rows}};
}

json cmd_gram(const RunConfig& cfg, const Emitter& em) {
  auto m = load_module(cfg);
  const HalfInt level = parse_half(cfg.grade, "level");
  const auto& basis = m->basis(level);
  json names = json::array();
  for (StateId id : basis) names.push_back(m->format(id));
  const Matrix g = m->gram(level);
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(em.scalar(g(i, j)));
    rows.push_back(row);
  }
  return {{"level", level.to_string()}, {"basis", names}, {"gram", rows}};
}

json cmd_nullvec(const RunConfig& cfg, const Emitter& em) {
  auto m = load_module(cfg);
  const HalfInt level = parse_half(cfg.grade, "level");
  json vecs = json::array();
  for (const auto& v : m->kernel(level)) vecs.push_back(em.vector(*m, v));
  return {{"level", level.to_string()}, {"dim", m->dim(level)}, {"rank", m->quotient_dim(level)}, {"null_vectors", vecs}};
}

json cmd_ghosts(const RunConfig& cfg) {
  const Rational c = parse_rational(cfg.c, "c"), h = parse_rational(cfg.h, "h");
  const HalfInt depth = module_depth(cfg);
  json rows = json::array();
  bool ghost = false;
  for (const auto& r : ghost_report(c, h, depth)) {
    rows.push_back({{"level", r.level.to_string()},
                    {"positive", r.inertia.positive},
                    {"zero", r.inertia.zero},
                    {"negative", r.inertia.negative}});
    ghost = ghost || r.inertia.negative > 0;
  }
  return {{"c", c.get_str()}, {"h", h.get_str()}, {"depth", depth.to_string()}, {"ghost", ghost}, {"levels", rows}};
}

json cmd_ope(const RunConfig& cfg, const Emitter& em, int& status) {
  ModulePtr m = cfg.module.empty() ? make_fermion_module(1) : load_module(cfg);
  const HalfInt depth = module_depth(cfg);
  const FieldPtr a = field_from_json(read_json_arg(cfg.field_a), *m);
  const FieldPtr b = field_from_json(read_json_arg(cfg.field_b), *m);
  const auto loc = locality_order(a, b, depth);
  json out{{"a", a->tree()}, {"b", b->tree()}, {"depth", depth.to_string()}, {"local", loc.found}};
  status = loc.found ? 0 : 1;
  if (!loc.found) return out;
  out["order"] = loc.order;
  out["parity"] = loc.parity;
  json terms = json::array();
  for (const auto& t : ope_singular_part(a, b, loc.order)) {
    json term{{"n", t.n}, {"field", t.field->tree()}};
    if (m->floor().dim == 1) term["state"] = em.vector(*m, t.field->mode(-1, m->vacuum()));
    terms.push_back(term);
  }
  out["singular_part"] = terms;
  return out;
}

json cmd_brackets(const RunConfig& cfg, int& status) {
  const HalfInt depth = module_depth(cfg);
  System sys = build_system(cfg);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sys.fields.size(); ++i)
    for (std::size_t j = 0; j < sys.fields.size(); ++j) pairs.emplace_back(i, j);
  if (cfg.samples > 0 && static_cast<std::size_t>(cfg.samples) < pairs.size()) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(cfg.samples);
    std::sort(pairs.begin(), pairs.end());
  }
  json checks = json::array();
  for (const auto& [i, j] : pairs) {
    const auto r = cross_check_bracket(sys.fields[i].field, sys.fields[j].field, depth);
    checks.push_back(check_json("[" + sys.fields[i].name + ", " + sys.fields[j].name + "] from OPE", depth, r));
  }
  status = count_failures(checks) ? 1 : 0;
  return {{"system", sys.vosa.name}, {"seed", cfg.seed}, {"checks", checks}};
}

json cmd_sugawara(const RunConfig& cfg, const Emitter& em, int& status) {
  auto lie = load_algebra(cfg.algebra);
  const Scalar level(parse_rational(cfg.level, "level"));
  const HalfInt depth = module_depth(cfg);
  auto inst = boson_sugawara(lie, level);
  const auto cc = central_charges(*lie, level);
  json checks = checks_json(check_sugawara(inst, cc.c_boson, depth));
  status = count_failures(checks) ? 1 : 0;
  return {{"algebra", lie->name()}, {"level", cfg.level}, {"c_boson", em.scalar(cc.c_boson)}, {"checks", checks}};
}

json charges_json(const CentralCharges& cc, const Emitter& em) {
  return {{"c_fermion", em.scalar(cc.c_fermion)},
          {"c_boson", em.scalar(cc.c_boson)},
          {"c_total", em.scalar(cc.c_total)},
          {"h", em.scalar(cc.h)}};
}

json cmd_susy(const RunConfig& cfg, const Emitter& em, int& status) {
  auto lie = load_algebra(cfg.algebra);
  const Scalar level(parse_rational(cfg.level, "level"));
  const HalfInt depth = module_depth(cfg);
  auto sc = super_construction(lie, level);
  json out = charges_json(sc.charges, em);
  out["checks"] = checks_json(check_super_relations(sc, depth));
  status = count_failures(out["checks"]) ? 1 : 0;
  return out;
}

json cmd_module(const RunConfig& cfg, const Emitter& em, int& status) {
  auto lie = load_algebra(cfg.algebra);
  const Scalar level(parse_rational(cfg.level, "level"));
  const HalfInt spin = parse_half(cfg.spin, "spin");
  const HalfInt depth = module_depth(cfg);
  auto sc = super_construction(lie, level);
  auto vm = vertex_module(sc, spin);
  json out = charges_json(central_charges(*lie, level, spin), em);
  json checks = checks_json(check_vertex_module(vm, sc, depth));
  const auto got = minimal_submodule_dims(*vm.module, {vm.L, vm.G}, StateVector::basis(vm.top), depth);
  auto verma = make_ns_verma(vm.c, vm.h);
  const auto want = irreducible_dims(*verma, depth);
  json dims = json::array();
  CheckResult dim_check;
  for (std::size_t k = 0; k < got.size(); ++k) {
    dims.push_back({{"level", got[k].level.to_string()}, {"dim", got[k].irreducible}, {"irreducible_ns", want[k].irreducible}});
    ++dim_check.checked;
    if (got[k].irreducible != want[k].irreducible) dim_check.fail("level " + got[k].level.to_string());
  }
  checks.push_back(check_json("minimal submodule dims = dims of L(c,h)", depth, dim_check));
  out["checks"] = checks;
  out["minimal_submodule"] = dims;
  status = count_failures(checks) ? 1 : 0;
  return out;
}

json cmd_cocycle(const RunConfig& cfg, const Emitter& em, int& status) {
  const HalfInt depth = resolve_depth(cfg, HalfInt(12));
  const int n = depth.floor();
  if (n < 3) throw BadInput("cocycle depth must be at least 3");
  const Rational c = parse_rational(cfg.c, "c");
  const auto basis = cocycle_basis(n);
  json vecs = json::array();
  for (const auto& v : basis.basis) {
    json row = json::array();
    for (const auto& q : v) row.push_back(em.scalar(Scalar(q)));
    vecs.push_back(row);
  }
  CheckResult even;
  even.checked = 2;
  if (!basis.spans_linear_cubic) even.fail("solutions do not span {n, n^3}");
  if (!basis.pinned_is_cubic_minus_linear) even.fail("A(1) = 0 does not force n^3 - n");
  json checks = json::array({check_json("even cocycle space = span{n, n^3}", depth, even),
                             check_json("odd cocycle C(s) = c/3 (s^2 - 1/4)", depth, verify_odd_cocycle(c, depth))});
  status = count_failures(checks) ? 1 : 0;
  return {{"depth", n}, {"c", c.get_str()}, {"basis", vecs}, {"checks", checks}};
}

json cmd_axioms(const RunConfig& cfg, int& status) {
  const HalfInt depth = module_depth(cfg);
  System sys = build_system(cfg);
  const auto rep = check_vosa_axioms(sys.vosa, depth);
  json ax = json::array();
  for (const auto& a : rep.axioms) {
    json j = check_json(a.name, depth, a.result);
    j["axiom"] = a.axiom;
    ax.push_back(j);
  }
  status = rep.ok() ? 0 : 1;
  return {{"system", sys.vosa.name}, {"central_charge", sys.vosa.central_charge.to_string()}, {"axioms", ax}};
}

std::string summarize(const std::string& command, const json& report, int status) {
  std::ostringstream os;
  os << "vosa " << command << ": ";
  const json* checks = nullptr;
  if (report.contains("checks")) checks = &report["checks"];
  if (report.contains("axioms")) checks = &report["axioms"];
  if (checks) {
    const int bad = count_failures(*checks);
    os << checks->size() - bad << "/" << checks->size() << " checks pass";
    for (const auto& c : *checks)
      if (c.at("status") != "pass") os << "\n  FAIL " << cell(c.at("relation")) << ": " << cell(c.value("failure", json("")));
  } else {
    os << (status == 0 ? "ok" : "failed");
  }
  os << '\n';
  return os.str();
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  const Emitter em{cfg.format == "text"};
  try {
    if (cfg.format != "json" && cfg.format != "text") throw BadInput("format must be json or text");
    json report;
    int status = 0;
    const std::string& c = cfg.command;
    if (c == "validate") report = cmd_validate(cfg, em, status);
    else if (c == "catalog") report = cmd_catalog();
    else if (c == "gram") report = cmd_gram(cfg, em);
    else if (c == "nullvec") report = cmd_nullvec(cfg, em);
    else if (c == "ghosts") report = cmd_ghosts(cfg);
    else if (c == "ope") report = cmd_ope(cfg, em, status);
    else if (c == "brackets") report = cmd_brackets(cfg, status);
    else if (c == "sugawara") report = cmd_sugawara(cfg, em, status);
    else if (c == "susy-check") report = cmd_susy(cfg, em, status);
    else if (c == "module") report = cmd_module(cfg, em, status);
    else if (c == "cocycle") report = cmd_cocycle(cfg, em, status);
    else if (c == "axioms") report = cmd_axioms(cfg, status);
    else throw BadInput("unknown command '" + c + "'");
    std::ostringstream os;
    if (em.text) render_text(os, report, 0);
    else os << report.dump(2) << '\n';
    res.out = os.str();
    res.status = status;
    res.err = summarize(c, report, status);
  } catch (const std::invalid_argument& e) {
    res.status = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const json::exception& e) {
    res.status = 2;
    res.err = std::string("error: malformed JSON: ") + e.what() + "\n";
  } catch (const std::domain_error& e) {
    res.status = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

int main(int argc, char** argv) {
  CLI::App app{"Exact vertex operator superalgebra calculations"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string depth;
  auto add_depth = [&](CLI::App* sub) { sub->add_option("--depth", depth, "Truncation depth (default $VOSA_DEPTH or 2)"); };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "sl2 or a path to algebra JSON");
  };
  auto add_level = [&](CLI::App* sub) { sub->add_option("--level", cfg.level, "Affine level"); };

  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled sweeps");

  auto* validate = app.add_subcommand("validate", "Check structure constants");
  add_algebra(validate);
  app.add_subcommand("catalog", "Simple Lie algebras with dims and dual Coxeter numbers");
  for (const char* name : {"gram", "nullvec"}) {
    auto* sub = app.add_subcommand(name, name == std::string("gram") ? "Gram matrix of one level" : "Null vectors of one level");
    sub->add_option("--module", cfg.module, "Module descriptor JSON or path")->required();
    sub->add_option("--level", cfg.grade, "Level");
  }
  auto* ghosts = app.add_subcommand("ghosts", "Gram inertia of the NS Verma module per level");
  ghosts->set_help_flag("--help", "Print this help message and exit");  // frees -h for the weight
  ghosts->add_option("--c", cfg.c, "Central charge");
  ghosts->add_option("--h", cfg.h, "Highest weight");
  add_depth(ghosts);
  auto* ope = app.add_subcommand("ope", "Locality order and OPE singular part of two fields");
  ope->add_option("--module", cfg.module, "Module descriptor (default one fermion)");
  ope->add_option("--a", cfg.field_a, "Field tree JSON");
  ope->add_option("--b", cfg.field_b, "Field tree JSON");
  add_depth(ope);
  for (const char* name : {"brackets", "axioms"}) {
    auto* sub = app.add_subcommand(name, name == std::string("brackets") ? "OPE brackets against direct commutators"
                                                                        : "Vertex operator superalgebra axioms");
    sub->add_option("--system", cfg.system, "fermion, g-fermion, sugawara or super");
    add_algebra(sub);
    add_level(sub);
    add_depth(sub);
    if (name == std::string("brackets")) sub->add_option("--samples", cfg.samples, "Random subset of field pairs");
  }
  auto* sug = app.add_subcommand("sugawara", "Sugawara construction checks");
  auto* susy = app.add_subcommand("susy-check", "Neveu-Schwarz and supersymmetry relations");
  auto* mod = app.add_subcommand("module", "Vertex module checks");
  for (auto* sub : {sug, susy, mod}) {
    add_algebra(sub);
    add_level(sub);
    add_depth(sub);
  }
  mod->add_option("--spin", cfg.spin, "sl2 spin of the floor");
  auto* coc = app.add_subcommand("cocycle", "Two-cocycle recursion and the odd cocycle");
  coc->add_option("--c", cfg.c, "Central charge for the odd cocycle");
  coc->add_option("--depth", depth, "Largest n (default 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!depth.empty()) cfg.depth = depth;
  const RunResult r = run(cfg);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}

}  // namespace vosa::cli
