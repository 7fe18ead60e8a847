#include "vosa/constructions.hpp"

#include <deque>
#include <stdexcept>

namespace vosa {
namespace {

const HalfInt kOne(1);

// Field slot of the mode with the given index.
int slot(HalfInt index, HalfInt weight) { return (index + weight - kOne).whole(); }

StateVector act(GradedModule& m, const Mode& mode, const StateVector& v) { return m.apply(mode, v); }

void expect_zero(CheckResult& r, GradedModule& m, const StateVector& v, const std::string& what) {
  ++r.checked;
  if (!vanishes(m, v)) r.fail(what);
}

std::string idx(HalfInt h) { return h.to_string(); }

// Modes with |index| <= bound for a field of the given weight: integers, or
// half-odd values for odd-weight fields.
std::vector<HalfInt> indices(HalfInt weight, int bound) {
  std::vector<HalfInt> out;
  const bool half = !weight.is_integer();
  for (int t = -2 * bound - 1; t <= 2 * bound + 1; ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    if (h.is_integer() == half) continue;
    if (!half && (t > 2 * bound || t < -2 * bound)) continue;
    out.push_back(h);
  }
  return out;
}

// A(m) with m a mode index rather than a slot.
StateVector mode_at(const FieldPtr& f, HalfInt index, StateId s) { return f->mode(slot(index, f->weight()), s); }

StateVector graded_bracket(const FieldPtr& a, HalfInt m, const FieldPtr& b, HalfInt n, StateId s) {
  const int eps = (a->parity() > 0 && b->parity() > 0) ? 1 : 0;
  return graded_commutator(a, b, slot(m, a->weight()), slot(n, b->weight()), eps, s);
}

Scalar rational_level(const Scalar& level) {
  if (!level.is_rational() || level.rational() < 0) throw std::invalid_argument("level must be a non-negative rational");
  return level;
}

// [L_m, L_n], [G_r, L_n], [G_r, G_s]_+ and the adjoint relations.
void ns_relations(std::vector<RelationCheck>& out, GradedModule& mod, const FieldPtr& L, const FieldPtr& G,
                  const Scalar& c, HalfInt depth, int max_mode) {
  const auto states = mod.basis_up_to(depth);
  const auto lm = indices(HalfInt(2), max_mode);
  const auto gm = indices(HalfInt::from_twice(3), max_mode);
  CheckResult ll, gl, gg, adj;
  for (StateId s : states) {
    for (HalfInt m : lm)
      for (HalfInt n : lm) {
        StateVector want = mode_at(L, m + n, s);
        want.scale(Scalar((m - n).to_rational()));
        if (m + n == HalfInt(0)) {
          const Rational mr = m.to_rational();
          want.add_term(s, c * Scalar(Rational((mr * mr * mr - mr) / 12)));
        }
        expect_zero(ll, mod, graded_bracket(L, m, L, n, s) - want,
                    "[L_" + idx(m) + ", L_" + idx(n) + "] on " + mod.format(s));
      }
    if (!G) continue;
    for (HalfInt r : gm)
      for (HalfInt n : lm) {
        StateVector want = mode_at(G, r + n, s);
        want.scale(Scalar((r.to_rational() - n.to_rational() / 2)));
        expect_zero(gl, mod, graded_bracket(G, r, L, n, s) - want,
                    "[G_" + idx(r) + ", L_" + idx(n) + "] on " + mod.format(s));
      }
    for (HalfInt r : gm)
      for (HalfInt q : gm) {
        StateVector want = mode_at(L, r + q, s);
        want.scale(Scalar(2));
        if (r + q == HalfInt(0)) {
          const Rational rr = r.to_rational();
          want.add_term(s, c * Scalar(Rational((rr * rr - Rational(1, 4)) / 3)));
        }
        expect_zero(gg, mod, graded_bracket(G, r, G, q, s) - want,
                    "[G_" + idx(r) + ", G_" + idx(q) + "]_+ on " + mod.format(s));
      }
  }
  auto adjoint = [&](const FieldPtr& f, const std::vector<HalfInt>& ms, const char* name) {
    for (StateId a : states)
      for (HalfInt m : ms) {
        const HalfInt target = mod.grade(a) - m;
        if (target < HalfInt(0) || target > depth) continue;
        const StateVector fa = mode_at(f, m, a);
        for (StateId b : mod.basis(target)) {
          ++adj.checked;
          if (mod.inner(fa, StateVector::basis(b)) != mod.inner(StateVector::basis(a), mode_at(f, -m, b)))
            adj.fail(std::string(name) + "_" + idx(m) + "* != " + name + "_" + idx(-m));
        }
      }
  };
  adjoint(L, lm, "L");
  out.push_back({"[L_m, L_n] = (m-n)L_{m+n} + c/12 (m^3-m) delta", depth, ll});
  if (G) {
    adjoint(G, gm, "G");
    out.push_back({"[G_m, L_n] = (m-n/2)G_{m+n}", depth, gl});
    out.push_back({"[G_m, G_n]_+ = 2L_{m+n} + c/3 (m^2-1/4) delta", depth, gg});
  }
  out.push_back({G ? "L_n* = L_{-n}, G_m* = G_{-m}" : "L_n* = L_{-n}", depth, adj});
}

// [L_m, A_n] = -n A_{m+n} + shift for generator fields of weight 1 or 1/2.
CheckResult virasoro_action(GradedModule& mod, const FieldPtr& L, const std::vector<FieldPtr>& fields, HalfInt depth,
                            int max_mode) {
  CheckResult r;
  const auto lm = indices(HalfInt(2), max_mode);
  for (const auto& a : fields) {
    const auto am = indices(a->weight(), max_mode);
    const Rational w1 = (a->weight() - kOne).to_rational();
    for (StateId s : mod.basis_up_to(depth))
      for (HalfInt m : lm)
        for (HalfInt n : am) {
          // [L_m, A_n] = ((weight-1)m - n) A_{m+n}
          StateVector want = mode_at(a, m + n, s);
          want.scale(Scalar(w1 * m.to_rational() - n.to_rational()));
          expect_zero(r, mod, graded_bracket(L, m, a, n, s) - want,
                      "[L_" + idx(m) + ", " + a->label() + "_" + idx(n) + "] on " + mod.format(s));
        }
  }
  return r;
}

Scalar measured_c(GradedModule& mod, const StateVector& omega) { return Scalar(2) * mod.inner(omega, omega); }

CheckResult scalar_equal(const Scalar& got, const Scalar& want, const std::string& what) {
  CheckResult r;
  r.checked = 1;
  if (got != want) r.fail(what + ": " + got.to_string() + " != " + want.to_string());
  return r;
}

std::vector<StateVector> current_states(GradedModule& mod, const LieAlgebraData& lie) {
  const int n = lie.dim();
  const StateVector vac = StateVector::basis(mod.vacuum());
  const Scalar coef = -Scalar::i() * Scalar::fraction(1, 2);
  std::vector<StateVector> s(n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Scalar& g = lie.gamma(a, b, c);
        if (g.is_zero()) continue;
        const StateVector v = act(mod, Mode::psi(a, -kHalf), act(mod, Mode::psi(b, -kHalf), vac));
        s[c].add(v, coef * g);
      }
  return s;
}

StateVector fermion_omega(GradedModule& mod, int colors) {
  const StateVector vac = StateVector::basis(mod.vacuum());
  StateVector w;
  for (int a = 0; a < colors; ++a)
    w.add(act(mod, Mode::psi(a, -HalfInt::from_twice(3)), act(mod, Mode::psi(a, -kHalf), vac)), Scalar::fraction(1, 2));
  return w;
}

StateVector boson_omega(GradedModule& mod, int dim, const Scalar& d) {
  const StateVector vac = StateVector::basis(mod.vacuum());
  StateVector w;
  const Scalar coef = (Scalar(2) * d).inv();
  for (int a = 0; a < dim; ++a) w.add(act(mod, Mode::boson(a, -1), act(mod, Mode::boson(a, -1), vac)), coef);
  return w;
}

}  // namespace

bool all_pass(const std::vector<RelationCheck>& checks) {
  for (const auto& c : checks)
    if (!c.result.ok) return false;
  return true;
}

CentralCharges central_charges(const LieAlgebraData& lie, const Scalar& level, HalfInt spin) {
  rational_level(level);
  const Scalar g = dual_coxeter(lie);
  const Scalar dim(lie.dim());
  const Scalar d = level + g;
  CentralCharges out;
  out.c_fermion = dim * Scalar::fraction(1, 2);
  out.c_boson = level * dim * d.inv();
  out.c_total = out.c_fermion + out.c_boson;
  if (spin != HalfInt(0)) {
    if (lie.name() != "sl2" || lie.dim() != 3) throw std::invalid_argument("non-trivial floors are only known for sl2");
    if (spin.to_rational() * 2 > level.rational()) throw std::invalid_argument("spin exceeds level/2");
    out.h = casimir_constant_sl2(spin) * (Scalar(2) * d).inv();
  }
  return out;
}

VosaInstance fermion_vosa(int colors) {
  VosaInstance inst;
  inst.name = colors == 1 ? "fermion" : "fermion^" + std::to_string(colors);
  inst.module = make_fermion_module(colors);
  inst.fields = std::make_shared<StateFieldMap>(*inst.module);
  for (int a = 0; a < colors; ++a) inst.generators.push_back(inst.fields->generator(ModeKind::fermion, a));
  inst.vacuum = StateVector::basis(inst.module->vacuum());
  inst.omega = fermion_omega(*inst.module, colors);
  inst.central_charge = Scalar::fraction(colors, 2);
  return inst;
}

FermionSystem g_fermion_system(std::shared_ptr<const LieAlgebraData> lie) {
  if (!validate(*lie).ok()) throw std::invalid_argument("structure constants fail validation");
  FermionSystem sys;
  sys.lie = lie;
  sys.vosa = fermion_vosa(lie->dim());
  sys.vosa.name = lie->name() + "-fermion";
  sys.s = current_states(*sys.vosa.module, *lie);
  for (const auto& s : sys.s) sys.currents.push_back(sys.vosa.fields->field_of_state(s));
  return sys;
}

std::vector<RelationCheck> check_fermion_currents(FermionSystem& sys, HalfInt depth) {
  GradedModule& mod = *sys.vosa.module;
  const LieAlgebraData& lie = *sys.lie;
  const Scalar g = dual_coxeter(lie);
  const int n = lie.dim();
  const auto states = mod.basis_up_to(depth);
  std::vector<RelationCheck> out;
  out.push_back({"c = 2|omega|^2 = dim/2", depth,
                 scalar_equal(measured_c(mod, sys.vosa.omega), Scalar::fraction(n, 2), "fermionic central charge")});

  CheckResult aff, act_psi, omega4g;
  const auto sm = indices(kOne, 2);
  for (StateId s : states)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (HalfInt p : sm)
          for (HalfInt q : sm) {
            StateVector want;
            for (int c = 0; c < n; ++c)
              if (!lie.gamma(a, b, c).is_zero())
                want.add(mode_at(sys.currents[c], p + q, s), Scalar::i() * lie.gamma(a, b, c));
            if (a == b && p + q == HalfInt(0)) want.add_term(s, Scalar(p.to_rational()) * g);
            expect_zero(aff, mod, graded_bracket(sys.currents[a], p, sys.currents[b], q, s) - want,
                        "[S^" + std::to_string(a) + "_" + idx(p) + ", S^" + std::to_string(b) + "_" + idx(q) + "]");
          }
        const FieldPtr psi = sys.vosa.generators[a];
        for (HalfInt p : indices(kHalf, 2))
          for (HalfInt q : sm) {
            StateVector want;
            for (int c = 0; c < n; ++c)
              if (!lie.gamma(a, b, c).is_zero())
                want.add(mode_at(sys.vosa.generators[c], p + q, s), Scalar::i() * lie.gamma(a, b, c));
            expect_zero(act_psi, mod, graded_bracket(psi, p, sys.currents[b], q, s) - want,
                        "[psi^" + std::to_string(a) + "_" + idx(p) + ", S^" + std::to_string(b) + "_" + idx(q) + "]");
          }
      }
  StateVector sum;
  for (int a = 0; a < n; ++a) sum.add(sys.currents[a]->mode(-1, sys.currents[a]->mode(-1, mod.vacuum())));
  StateVector want = sys.vosa.omega;
  want.scale(Scalar(4) * g);
  expect_zero(omega4g, mod, sum - want, "sum_a (S^a_{-1})^2 Omega != 4g omega");
  out.push_back({"[S^a_m, S^b_n] = i Gamma_ab^c S^c_{m+n} + m g delta", depth, aff});
  out.push_back({"[psi^a_m, S^b_n] = i Gamma_ab^c psi^c_{m+n}", depth, act_psi});
  out.push_back({"sum_a (S^a_{-1})^2 Omega = 4g omega", depth, omega4g});
  return out;
}

VosaInstance boson_sugawara(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level) {
  rational_level(level);
  const Scalar d = level + dual_coxeter(*lie);
  VosaInstance inst;
  inst.name = lie->name() + "-sugawara";
  inst.module = make_affine_module(lie, level, HalfInt(0), true);
  inst.fields = std::make_shared<StateFieldMap>(*inst.module);
  for (int a = 0; a < lie->dim(); ++a) inst.generators.push_back(inst.fields->generator(ModeKind::boson, a));
  inst.vacuum = StateVector::basis(inst.module->vacuum());
  inst.omega = boson_omega(*inst.module, lie->dim(), d);
  inst.central_charge = central_charges(*lie, level).c_boson;
  return inst;
}

std::vector<RelationCheck> check_sugawara(VosaInstance& inst, const Scalar& closed_form_c, HalfInt depth) {
  GradedModule& mod = *inst.module;
  std::vector<RelationCheck> out;
  out.push_back({"c = 2|omega|^2 = l dim/(l+g)", depth,
                 scalar_equal(measured_c(mod, inst.omega), closed_form_c, "Sugawara central charge")});
  const FieldPtr L = inst.fields->field_of_state(inst.omega);
  ns_relations(out, mod, L, nullptr, closed_form_c, depth, 2);
  out.push_back({"[L_m, X^a_n] = -n X^a_{m+n}", depth, virasoro_action(mod, L, inst.generators, depth, 2)});
  return out;
}

SuperConstruction super_construction(std::shared_ptr<const LieAlgebraData> lie, const Scalar& level) {
  if (!validate(*lie).ok()) throw std::invalid_argument("structure constants fail validation");
  rational_level(level);
  SuperConstruction sc;
  sc.lie = lie;
  sc.level = level;
  sc.d = level + dual_coxeter(*lie);
  sc.sqrt_d = Scalar::sqrt(sc.d.rational());
  sc.charges = central_charges(*lie, level);
  const int n = lie->dim();
  const bool trivial = level.is_zero();

  VosaInstance& v = sc.vosa;
  v.name = lie->name() + "-super";
  v.module = trivial ? make_fermion_module(n)
                     : make_tensor({make_affine_module(lie, level, HalfInt(0), true), make_fermion_module(n)});
  GradedModule& mod = *v.module;
  v.fields = std::make_shared<StateFieldMap>(mod);
  for (int a = 0; a < n; ++a) {
    sc.psi.push_back(v.fields->generator(ModeKind::fermion, a));
    sc.x.push_back(trivial ? zero_field(mod) : v.fields->generator(ModeKind::boson, a));
  }
  v.generators = sc.psi;
  if (!trivial) v.generators.insert(v.generators.end(), sc.x.begin(), sc.x.end());
  v.vacuum = StateVector::basis(mod.vacuum());
  v.omega = fermion_omega(mod, n);
  if (!trivial) v.omega.add(boson_omega(mod, n, sc.d));
  v.central_charge = sc.charges.c_total;

  sc.s = current_states(mod, *lie);
  for (int a = 0; a < n; ++a) {
    sc.currents.push_back(v.fields->field_of_state(sc.s[a]));
    sc.b.push_back(sum(sc.x[a], sc.currents[a]));
    const Mode pa = Mode::psi(a, -kHalf);
    if (!trivial) sc.tau1.add(act(mod, pa, act(mod, Mode::boson(a, -1), v.vacuum)));
    sc.tau2.add(act(mod, pa, sc.s[a]), Scalar::fraction(1, 3));
  }
  StateVector tau = sc.tau1 + sc.tau2;
  tau.scale(sc.sqrt_d.inv());
  v.tau = tau;
  sc.L = v.fields->field_of_state(v.omega);
  sc.G = v.fields->field_of_state(tau);
  return sc;
}

std::vector<RelationCheck> check_super_relations(SuperConstruction& sc, HalfInt depth, int max_mode) {
  GradedModule& mod = *sc.vosa.module;
  const Scalar& c = sc.charges.c_total;
  std::vector<RelationCheck> out;
  out.push_back({"c = 2|omega|^2 = 3/2 (l+g/3)/(l+g) dim", depth,
                 scalar_equal(measured_c(mod, sc.vosa.omega), c, "total central charge")});

  const FieldPtr id = sc.vosa.fields->identity();
  const FieldPtr zero = zero_field(mod);
  auto ope = [&](const FieldPtr& a, const FieldPtr& b, const std::vector<FieldPtr>& want) {
    CheckResult r;
    for (std::size_t k = 0; k < want.size(); ++k)
      r.merge(fields_agree(nth_product(a, b, static_cast<int>(k)), want[k], depth));
    return r;
  };
  out.push_back({"L(z)L(w) ~ (c/2)/(z-w)^4 + 2L/(z-w)^2 + L'/(z-w)", depth,
                 ope(sc.L, sc.L,
                     {derivative(sc.L), scaled(Scalar(2), sc.L), zero, scaled(c * Scalar::fraction(1, 2), id), zero,
                      zero})});
  out.push_back({"L(z)G(w) ~ (3/2)G/(z-w)^2 + G'/(z-w)", depth,
                 ope(sc.L, sc.G, {derivative(sc.G), scaled(Scalar::fraction(3, 2), sc.G), zero, zero})});
  out.push_back({"G(z)G(w) ~ (2c/3)/(z-w)^3 + 2L/(z-w)", depth,
                 ope(sc.G, sc.G,
                     {scaled(Scalar(2), sc.L), zero, scaled(c * Scalar::fraction(2, 3), id), zero, zero})});
  ns_relations(out, mod, sc.L, sc.G, c, depth, max_mode);

  CheckResult gb, gp, g32;
  const auto gm = indices(HalfInt::from_twice(3), max_mode);
  const int n = sc.lie->dim();
  for (StateId s : mod.basis_up_to(depth))
    for (int a = 0; a < n; ++a)
      for (HalfInt r : gm) {
        for (HalfInt q : indices(kOne, max_mode)) {
          StateVector want = mode_at(sc.psi[a], r + q, s);
          want.scale(-Scalar(q.to_rational()) * sc.sqrt_d);
          expect_zero(gb, mod, graded_bracket(sc.G, r, sc.b[a], q, s) - want,
                      "[G_" + idx(r) + ", B^" + std::to_string(a) + "_" + idx(q) + "] on " + mod.format(s));
        }
        for (HalfInt q : indices(kHalf, max_mode)) {
          StateVector want = mode_at(sc.b[a], r + q, s);
          want.scale(sc.sqrt_d.inv());
          expect_zero(gp, mod, graded_bracket(sc.G, r, sc.psi[a], q, s) - want,
                      "[G_" + idx(r) + ", psi^" + std::to_string(a) + "_" + idx(q) + "]_+ on " + mod.format(s));
        }
      }
  StateVector want = sc.vosa.vacuum;
  want.scale(c * Scalar::fraction(2, 3));
  expect_zero(g32, mod, sc.G->mode(slot(HalfInt::from_twice(3), sc.G->weight()), *sc.vosa.tau) - want, "G_{3/2} tau != (2c/3) Omega");
  out.push_back({"[G_m, B^a_n] = -n d^{1/2} psi^a_{m+n}", depth, gb});
  out.push_back({"[G_m, psi^a_n]_+ = d^{-1/2} B^a_{m+n}", depth, gp});
  out.push_back({"G_{3/2} tau = (2c/3) Omega", depth, g32});
  return out;
}

std::vector<Rational> tau2_coefficient_sweep(SuperConstruction& sc, const std::vector<Rational>& candidates) {
  GradedModule& mod = *sc.vosa.module;
  const int n = sc.lie->dim();
  StateVector base;
  for (int a = 0; a < n; ++a) base.add(act(mod, Mode::psi(a, -kHalf), sc.s[a]));
  std::vector<Rational> out;
  for (Rational k : candidates) {
    k.canonicalize();
    StateVector t = base;
    t.scale(Scalar(k));
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mod.equal(act(mod, Mode::psi(a, kHalf), t), sc.s[a]);
    if (ok) out.push_back(k);
  }
  return out;
}

VertexModule vertex_module(SuperConstruction& vac, HalfInt spin) {
  VertexModule vm;
  vm.spin = spin;
  const int n = vac.lie->dim();
  const CentralCharges cc = central_charges(*vac.lie, vac.level, spin);
  vm.c = cc.c_total;
  vm.h = cc.h;
  if (vac.level.is_zero()) {
    vm.module = make_fermion_module(n);
  } else {
    vm.module = make_tensor({make_affine_module(vac.lie, vac.level, spin, true), make_fermion_module(n)});
  }
  GradedModule& mod = *vm.module;
  vm.top = mod.floor_state(0);
  vm.L = rebind(vac.L, mod);
  vm.G = rebind(vac.G, mod);
  for (int a = 0; a < n; ++a) {
    vm.psi.push_back(rebind(vac.psi[a], mod));
    vm.x.push_back(rebind(vac.x[a], mod));
    vm.b.push_back(rebind(vac.b[a], mod));
  }
  return vm;
}

std::vector<RelationCheck> check_vertex_module(VertexModule& vm, SuperConstruction& vac, HalfInt depth) {
  GradedModule& mod = *vm.module;
  GradedModule& vmod = *vac.vosa.module;
  StateFieldMap& V = *vac.vosa.fields;
  const auto states = mod.basis_up_to(depth);
  std::vector<RelationCheck> out;

  {
    CheckResult r;
    const FieldPtr id = rebind(V.field_of_state(vac.vosa.vacuum), mod);
    const Window w = mode_window(HalfInt(0), depth);
    for (StateId s : states)
      for (int k = w.lo; k <= w.hi; ++k)
        expect_zero(r, mod, id->mode(k, s) - (k == -1 ? StateVector::basis(s) : StateVector()),
                    "V(Omega) is not Id on " + mod.format(s));
    out.push_back({"V(Omega) = Id", depth, r});
  }
  {
    // n-th products of transported fields are the transported n-th products.
    CheckResult r;
    std::vector<StateId> probes;
    for (StateId b : vmod.basis_up_to(kOne))
      if (vmod.state(b).word.size() == 1) probes.push_back(b);
    for (StateId a : probes)
      for (StateId b : probes)
        for (int k = -1; k <= 1; ++k) {
          const FieldPtr lhs = nth_product(rebind(V.field_of_state(a), mod), rebind(V.field_of_state(b), mod), k);
          const StateVector ab = V.field_of_state(a)->mode(k, b);
          const FieldPtr rhs = ab.empty() ? zero_field(mod) : rebind(V.field_of_state(ab), mod);
          r.merge(fields_agree(lhs, rhs, depth));
        }
    out.push_back({"V(a)_n V(b) = V(a_(n) b)", depth, r});
  }
  ns_relations(out, mod, vm.L, vm.G, vm.c, depth, 2);
  {
    std::vector<FieldPtr> gens = vm.psi;
    if (!vac.level.is_zero()) gens.insert(gens.end(), vm.x.begin(), vm.x.end());
    out.push_back({"[L_m, psi^a_n], [L_m, X^a_n]", depth, virasoro_action(mod, vm.L, gens, depth, 1)});
    CheckResult loc;
    for (const auto& a : gens)
      for (const auto& b : gens) {
        const auto lr = locality_order(a, b, depth);
        loc.checked += lr.checked;
        if (!lr.found || lr.parity != (a->parity() & b->parity()))
          loc.fail("(" + a->label() + ", " + b->label() + ") not local with the expected parity");
      }
    out.push_back({"generators pairwise local", depth, loc});
  }
  {
    CheckResult r;
    for (StateId s : states) {
      StateVector want = StateVector::basis(s, Scalar(mod.grade(s).to_rational()) + vm.h);
      expect_zero(r, mod, vm.L->mode(1, s) - want, "L_0 != D + h on " + mod.format(s));
    }
    out.push_back({"D = L_0 - h Id", depth, r});
  }
  return out;
}

std::vector<LevelDims> minimal_submodule_dims(GradedModule& module, const std::vector<FieldPtr>& fields,
                                              const StateVector& start, HalfInt depth) {
  std::map<HalfInt, SparseEchelon> ech;
  std::map<HalfInt, std::vector<StateVector>> found;
  std::deque<std::pair<StateVector, HalfInt>> queue;
  auto push = [&](const StateVector& v, HalfInt g) {
    if (v.empty() || g > depth || !ech[g].insert(v)) return;
    found[g].push_back(v);
    queue.emplace_back(v, g);
  };
  if (!start.empty()) push(start, module.grade(start.begin()->first));
  while (!queue.empty()) {
    const auto [v, g] = queue.front();
    queue.pop_front();
    for (const auto& f : fields)
      for (HalfInt t(0); t <= depth; t += kHalf) {
        const HalfInt s = g + f->weight() - kOne - t;
        if (s.is_integer()) push(f->mode(s.whole(), v), t);
      }
  }
  std::vector<LevelDims> out;
  for (HalfInt g(0); g <= depth; g += kHalf) out.push_back({g, found[g].size(), span_rank(module, g, found[g])});
  return out;
}

}  // namespace vosa
