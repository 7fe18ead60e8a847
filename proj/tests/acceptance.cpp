// Acceptance suite: one PASS/FAIL line per criterion with its wall time.
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vosa/constructions.hpp"

using namespace vosa;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) detail = why;
    ok = ok && cond;
  }
  void require(const CheckResult& r, const std::string& what) {
    require(r.ok, what + ": " + r.failure);
    checked += r.checked;
  }
  std::size_t checked = 0;
};

std::shared_ptr<const LieAlgebraData> sl2() { return std::make_shared<LieAlgebraData>(sl2_basis()); }

Outcome fermion_central_charge() {
  Outcome o;
  auto f = fermion_vosa(1);
  GradedModule& m = *f.module;
  const Scalar c = Scalar(2) * m.inner(f.omega, f.omega);
  o.require(c == Scalar::fraction(1, 2) && f.central_charge == c, "c = " + c.to_string());
  const FieldPtr L = f.fields->field_of_state(f.omega);
  CheckResult r;
  for (StateId s : m.basis_up_to(HalfInt(4)))
    for (int p = -3; p <= 3; ++p)
      for (int q = -3; q <= 3; ++q) {
        StateVector want = L->mode(p + q + 1, s);
        want.scale(Scalar(p - q));
        if (p + q == 0) want.add_term(s, c * Scalar::fraction(p * p * p - p, 12));
        ++r.checked;
        if (graded_commutator(L, L, p + 1, q + 1, 0, s) != want)
          r.fail("[L_" + std::to_string(p) + ", L_" + std::to_string(q) + "] on " + m.format(s));
      }
  o.require(r, "Virasoro bracket");
  return o;
}

Outcome locality_orders() {
  Outcome o;
  auto f = fermion_vosa(1);
  const FieldPtr psi = f.generators[0], L = f.fields->field_of_state(f.omega);
  const HalfInt depth(4);
  struct Want {
    FieldPtr a, b;
    int order, parity;
    const char* name;
  };
  for (const auto& w : {Want{psi, psi, 1, 1, "(psi, psi)"}, Want{psi, L, 2, 0, "(psi, L)"}, Want{L, L, 4, 0, "(L, L)"}}) {
    const auto r = locality_order(w.a, w.b, depth);
    o.checked += r.checked;
    o.require(r.found && r.order == w.order && r.parity == w.parity,
              std::string(w.name) + " gave N = " + std::to_string(r.order) + ", parity " + std::to_string(r.parity));
  }
  return o;
}

Outcome g_fermion() {
  Outcome o;
  auto sys = g_fermion_system(sl2());
  o.require(dual_coxeter(*sys.lie) == Scalar(2), "g != 2");
  o.require(sys.vosa.central_charge == Scalar::fraction(3, 2), "c != 3/2");
  for (const auto& c : check_fermion_currents(sys, HalfInt(2))) o.require(c.result, c.relation);
  return o;
}

Outcome sugawara() {
  Outcome o;
  auto lie = sl2();
  for (auto [l, c] : {std::pair{1, Scalar(1)}, std::pair{2, Scalar::fraction(3, 2)}}) {
    auto inst = boson_sugawara(lie, Scalar(l));
    const Scalar measured = Scalar(2) * inst.module->inner(inst.omega, inst.omega);
    const Scalar closed = central_charges(*lie, Scalar(l)).c_boson;
    o.require(measured == c && closed == c, "level " + std::to_string(l) + ": measured " + measured.to_string() +
                                               ", closed form " + closed.to_string());
    for (const auto& r : check_sugawara(inst, closed, HalfInt(2))) o.require(r.result, r.relation);
  }
  return o;
}

Outcome supersymmetry() {
  Outcome o;
  auto sc = super_construction(sl2(), Scalar(1));
  o.require(sc.charges.c_total == Scalar::fraction(5, 2), "c != 5/2");
  for (const auto& c : check_super_relations(sc, HalfInt(2))) o.require(c.result, c.relation);
  return o;
}

Outcome module_ch() {
  Outcome o;
  auto sc = super_construction(sl2(), Scalar(1));
  auto vm = vertex_module(sc, HalfInt::from_twice(1));
  o.require(vm.h == Scalar::fraction(1, 4), "h = " + vm.h.to_string());
  GradedModule& m = *vm.module;
  CheckResult d;
  for (StateId s : m.basis_up_to(HalfInt(2))) {
    const StateVector b = StateVector::basis(s);
    StateVector want = m.operator_D(b);
    want.add(b, vm.h);
    ++d.checked;
    if (!m.equal(vm.L->mode(1, s), want)) d.fail("L_0 != D + h on " + m.format(s));
  }
  o.require(d, "D = L_0 - h Id");
  for (const auto& c : check_vertex_module(vm, sc, HalfInt(2))) o.require(c.result, c.relation);
  return o;
}

Outcome minimal_submodule() {
  Outcome o;
  auto f = fermion_vosa(1);
  const FieldPtr L = f.fields->field_of_state(f.omega);
  const HalfInt depth(5);
  const auto got = minimal_submodule_dims(*f.module, {L}, f.vacuum, depth);
  auto verma = make_virasoro_verma(Scalar::fraction(1, 2), Scalar(0));
  const auto want = irreducible_dims(*verma, depth);
  o.require(got.size() == want.size(), "level count");
  std::string seq;
  for (std::size_t k = 0; k < got.size() && k < want.size(); ++k) {
    ++o.checked;
    seq += std::to_string(got[k].irreducible) + " ";
    o.require(got[k].irreducible == want[k].irreducible, "level " + got[k].level.to_string());
  }
  return o;
}

Outcome borcherds() {
  Outcome o;
  auto f = fermion_vosa(1);
  const auto states = f.module->basis_up_to(HalfInt(2));
  for (StateId a : states)
    for (StateId b : states)
      for (StateId v : states)
        o.require(check_borcherds(*f.fields, StateVector::basis(a), StateVector::basis(b), v, HalfInt(3)),
                  "(" + f.module->format(a) + ", " + f.module->format(b) + ", " + f.module->format(v) + ")");
  return o;
}

Outcome cocycles() {
  Outcome o;
  const auto b = cocycle_basis(12);
  o.require(b.basis.size() == 2 && b.spans_linear_cubic, "even cocycles are not span{n, n^3}");
  o.require(b.pinned_is_cubic_minus_linear, "A(1) = 0 does not force n^3 - n");
  for (const auto& c : {Rational(0), Rational(1, 2), Rational(5, 2)})
    o.require(verify_odd_cocycle(c, HalfInt::from_twice(11)), "odd cocycle at c = " + c.get_str());
  return o;
}

Outcome ghosts() {
  Outcome o;
  const std::vector<Rational> cs{-3, -1, Rational(-1, 2), 0, Rational(1, 2), Rational(7, 10), 1, Rational(3, 2), 3};
  const std::vector<Rational> hs{Rational(-1, 2), Rational(-1, 10), 0, Rational(1, 10), Rational(1, 2), 1};
  for (const auto& c : cs)
    for (const auto& h : hs) {
      // Smallest level at which the closed forms predict a negative norm.
      HalfInt predicted(-1);
      if (h < 0) predicted = HalfInt::from_twice(1);
      for (int n = 1; n <= 8 && predicted < HalfInt(0); ++n)
        if (2 * n * h + c * n * (n * n - 1) / 12 < 0) predicted = HalfInt(n);
      // The closed form is the Gram entry of L_{-n} Omega.
      auto verma = make_ns_verma(Scalar(c), Scalar(h));
      for (int n = 1; n <= 8; ++n) {
        const StateVector v = verma->apply(Mode::vir(-n), StateVector::basis(verma->vacuum()));
        Rational want = 2 * n * h + c * n * (n * n - 1) / 12;
        want.canonicalize();
        ++o.checked;
        o.require(verma->inner(v, v) == Scalar(want), "norm of L_{-" + std::to_string(n) + "} Omega");
      }
      if (predicted < HalfInt(0)) continue;
      bool negative = false;
      for (const auto& row : ghost_report(c, h, predicted)) negative = negative || row.inertia.negative > 0;
      ++o.checked;
      o.require(negative, "no ghost reported for c = " + c.get_str() + ", h = " + h.get_str());
    }
  return o;
}

Outcome cross_check() {
  Outcome o;
  const HalfInt depth(2);
  auto run = [&](GradedModule& m, const std::vector<FieldPtr>& gens, const std::string& name) {
    const auto cl = generate_closure(m, gens, depth);
    o.require(cl.spans && !cl.budget_exceeded, name + " closure does not span");
    for (const auto& a : cl.fields)
      for (const auto& b : cl.fields)
        o.require(cross_check_bracket(a.field, b.field, depth), name + " [" + a.field->label() + ", " + b.field->label() + "]");
  };
  auto f = fermion_vosa(1);
  run(*f.module, f.generators, "fermion");
  auto sc = super_construction(sl2(), Scalar(1));
  run(*sc.vosa.module, sc.vosa.generators, "super");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "fermion central charge and Virasoro bracket", 10, fermion_central_charge},
      {2, "locality orders", 10, locality_orders},
      {3, "g-fermion identities", 30, g_fermion},
      {4, "Sugawara central charges", 30, sugawara},
      {5, "supersymmetry suite", 300, supersymmetry},
      {6, "vertex module (c,h)", 120, module_ch},
      {7, "minimal Virasoro submodule", 120, minimal_submodule},
      {8, "Borcherds associativity", 60, borcherds},
      {9, "cocycle identities", 5, cocycles},
      {10, "ghost boundary", 30, ghosts},
      {11, "OPE brackets against direct commutators", 300, cross_check},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s %2d %-45s %8.2fs (limit %.0fs, %zu checks)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_s, o.checked, o.ok ? "" : " ", o.ok ? (in_time ? "" : " over time limit") : o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
