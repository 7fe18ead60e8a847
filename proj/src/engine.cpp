#include "vosa/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "vosa/linalg.hpp"

namespace vosa {
namespace {

HalfInt half_of(HalfInt depth) { return HalfInt::from_twice((depth.twice() + 1) / 2); }

int state_parity(GradedModule& m, const StateVector& v) {
  int p = -1;
  for (const auto& [id, c] : v) {
    const int q = m.state(id).parity;
    if (p >= 0 && p != q) return -1;
    p = q;
  }
  return p < 0 ? 0 : p;
}

bool homogeneous_grade(GradedModule& m, const StateVector& v, HalfInt grade) {
  return std::all_of(v.begin(), v.end(), [&](const auto& e) { return m.grade(e.first) == grade; });
}

std::string describe(GradedModule& m, const std::string& what, int slot, StateId s) {
  std::ostringstream os;
  os << what << " at slot " << slot << " on " << m.format(s);
  return os.str();
}

}  // namespace

void CheckResult::merge(const CheckResult& other) {
  checked += other.checked;
  if (!other.ok) fail(other.failure);
}

Window mode_window(HalfInt weight, HalfInt depth) {
  return {(weight - HalfInt(1) - depth).ceil(), (depth + weight - HalfInt(1)).floor()};
}

bool vanishes(GradedModule& module, const StateVector& v) {
  return v.empty() || (module.irreducible() && module.is_null(v));
}

StateVector graded_commutator(const FieldPtr& a, const FieldPtr& b, int m, int n, int eps, StateId s) {
  StateVector out = a->mode(m, b->mode(n, s));
  out.add(b->mode(n, a->mode(m, s)), Scalar(eps ? 1 : -1));
  return out;
}

bool locality_holds(const FieldPtr& a, const FieldPtr& b, int order, int eps, HalfInt depth, std::size_t* checked) {
  GradedModule& mod = a->module();
  const HalfInt alpha = a->weight(), beta = b->weight();
  const Window wa = mode_window(alpha, depth), wb = mode_window(beta, depth);
  for (StateId s : mod.basis_up_to(depth)) {
    const HalfInt g = mod.grade(s);
    for (HalfInt t(0); t <= depth; t += kHalf) {
      const HalfInt total = g - t + alpha + beta - HalfInt(2) - HalfInt(order);
      if (!total.is_integer()) continue;
      for (int m = wa.lo - order; m <= wa.hi; ++m) {
        const int n = total.whole() - m;
        if (n < wb.lo - order || n > wb.hi) continue;
        StateVector acc;
        for (int k = 0; k <= order; ++k) {
          Scalar coef(binomial(order, k));
          if (k % 2) coef = -coef;
          acc.add(graded_commutator(a, b, m + order - k, n + k, eps, s), coef);
        }
        if (checked) ++*checked;
        if (!vanishes(mod, acc)) return false;
      }
    }
  }
  return true;
}

LocalityResult locality_order(const FieldPtr& a, const FieldPtr& b, HalfInt depth, int max_order) {
  if (max_order < 0) max_order = (a->weight() + b->weight()).ceil() + 1;
  const int preferred = (a->parity() > 0 && b->parity() > 0) ? 1 : 0;
  LocalityResult r;
  for (int order = 0; order <= max_order; ++order)
    for (int eps : {preferred, 1 - preferred})
      if (locality_holds(a, b, order, eps, depth, &r.checked)) {
        r.found = true;
        r.order = order;
        r.parity = eps;
        return r;
      }
  return r;
}

std::vector<OpeTerm> ope_singular_part(const FieldPtr& a, const FieldPtr& b, int order) {
  std::vector<OpeTerm> out;
  for (int n = order - 1; n >= 0; --n) out.push_back({n, nth_product(a, b, n)});
  return out;
}

StateVector bracket_from_ope(const std::vector<OpeTerm>& ope, int m, int n, StateId s) {
  StateVector out;
  for (const auto& [p, field] : ope) out.add(field->mode(m + n - p, s), Scalar(binomial(m, p)));
  return out;
}

CheckResult cross_check_bracket(const FieldPtr& a, const FieldPtr& b, HalfInt depth) {
  CheckResult res;
  const auto loc = locality_order(a, b, depth);
  if (!loc.found) {
    res.fail("no locality order found for (" + a->label() + ", " + b->label() + ")");
    return res;
  }
  const auto ope = ope_singular_part(a, b, loc.order);
  GradedModule& mod = a->module();
  const HalfInt alpha = a->weight(), beta = b->weight();
  const Window wa = mode_window(alpha, depth), wb = mode_window(beta, depth);
  for (StateId s : mod.basis_up_to(depth)) {
    const HalfInt g = mod.grade(s);
    for (int m = wa.lo; m <= wa.hi; ++m)
      for (int n = wb.lo; n <= wb.hi; ++n) {
        const HalfInt t = g - HalfInt(m + n) + alpha + beta - HalfInt(2);
        if (t < HalfInt(0) || t > depth) continue;
        const StateVector diff =
            bracket_from_ope(ope, m, n, s) - graded_commutator(a, b, m, n, loc.parity, s);
        ++res.checked;
        if (!vanishes(mod, diff))
          res.fail("[" + a->label() + "(" + std::to_string(m) + "), " + b->label() + "(" + std::to_string(n) +
                   ")] differs from the OPE bracket on " + mod.format(s));
      }
  }
  return res;
}

CheckResult fields_agree(const FieldPtr& a, const FieldPtr& b, HalfInt depth) {
  CheckResult res;
  GradedModule& mod = a->module();
  const Window wa = mode_window(a->weight(), depth), wb = mode_window(b->weight(), depth);
  for (StateId s : mod.basis_up_to(depth))
    for (int n = std::min(wa.lo, wb.lo); n <= std::max(wa.hi, wb.hi); ++n) {
      ++res.checked;
      if (!vanishes(mod, a->mode(n, s) - b->mode(n, s)))
        res.fail(describe(mod, a->label() + " != " + b->label(), n, s));
    }
  return res;
}

StateFieldMap::StateFieldMap(GradedModule& module) : module_(&module), identity_(identity_field(module)) {
  if (module.floor().dim != 1) throw std::invalid_argument("state-field map needs a one-dimensional floor");
}

FieldPtr StateFieldMap::generator(ModeKind kind, int color) {
  auto& slot = generators_[{static_cast<int>(kind), color}];
  if (!slot) slot = generator_field(*module_, kind, color);
  return slot;
}

FieldPtr StateFieldMap::field_of_state(StateId id) {
  if (auto it = fields_.find(id); it != fields_.end()) return it->second;
  const BasisState st = module_->state(id);
  FieldPtr out;
  if (st.word.empty()) {
    out = identity_;
  } else {
    const Mode& c = st.word.front();
    const StateId rest = module_->intern(std::vector<Mode>(st.word.begin() + 1, st.word.end()), st.floor);
    out = nth_product(generator(c.kind, c.color), field_of_state(rest), c.slot().whole());
  }
  fields_.emplace(id, out);
  return out;
}

FieldPtr StateFieldMap::field_of_state(const StateVector& v) {
  if (v.size() == 1 && v.begin()->second == Scalar(1)) return field_of_state(v.begin()->first);
  LinCombField::Terms terms;
  for (const auto& [id, c] : v) terms.emplace_back(c, field_of_state(id));
  return lincomb(*module_, std::move(terms));
}

StateVector StateFieldMap::state_of_field(const FieldPtr& field) { return field->mode(-1, module_->vacuum()); }

std::size_t span_rank(GradedModule& module, HalfInt level, const std::vector<StateVector>& vectors) {
  if (!module.irreducible()) {
    SparseEchelon e;
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
  }
  const auto& b = module.basis(level);
  Matrix p(b.size(), vectors.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) p(i, j) = module.inner(StateVector::basis(b[i]), vectors[j]);
  return rank(p);
}

ClosureResult generate_closure(GradedModule& module, const std::vector<FieldPtr>& generators, HalfInt depth,
                               std::size_t budget, HalfInt locality_depth) {
  ClosureResult r;
  std::map<HalfInt, SparseEchelon> echelon;
  std::map<HalfInt, std::vector<StateVector>> accepted;
  const StateVector vac = StateVector::basis(module.vacuum());
  r.fields.push_back({identity_field(module), vac, HalfInt(0)});
  echelon[HalfInt(0)].insert(vac);
  accepted[HalfInt(0)].push_back(vac);
  for (std::size_t i = 0; i < r.fields.size() && !r.budget_exceeded; ++i) {
    const ClosureField cur = r.fields[i];
    for (const auto& a : generators) {
      for (HalfInt target(0); target <= depth; target += kHalf) {
        const HalfInt slot = cur.grade + a->weight() - HalfInt(1) - target;
        if (!slot.is_integer()) continue;
        const StateVector v = a->mode(slot.whole(), cur.state);
        if (v.empty() || !echelon[target].insert(v)) continue;
        accepted[target].push_back(v);
        r.fields.push_back({nth_product(a, cur.field, slot.whole()), v, target});
        if (r.fields.size() > budget) {
          r.budget_exceeded = true;
          break;
        }
      }
    }
  }
  r.spans = !r.budget_exceeded;
  for (HalfInt g(0); g <= depth; g += kHalf) {
    r.rank[g] = span_rank(module, g, accepted[g]);
    if (r.rank[g] != module.quotient_dim(g)) r.spans = false;
  }
  if (locality_depth > HalfInt(0)) {
    for (std::size_t i = 1; i < r.fields.size(); ++i) {
      const auto& f = r.fields[i].field;
      std::vector<FieldPtr> partners = generators;
      partners.push_back(f);
      for (const auto& c : partners) {
        const auto loc = locality_order(f, c, locality_depth);
        const int want = f->parity() & c->parity();
        if (!loc.found || loc.parity != want) {
          r.local = false;
          r.notes.push_back("(" + f->label() + ", " + c->label() + ") " +
                            (loc.found ? "local with parity " + std::to_string(loc.parity) : "not local"));
        }
      }
    }
  }
  return r;
}

bool AxiomReport::ok() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.result.ok; });
}

AxiomReport check_vosa_axioms(VosaInstance& inst, HalfInt depth) {
  GradedModule& mod = *inst.module;
  StateFieldMap& V = *inst.fields;
  AxiomReport rep;
  rep.depth = depth;
  const auto states = mod.basis_up_to(depth);
  std::vector<std::pair<FieldPtr, StateId>> probes;
  for (StateId b : mod.basis_up_to(half_of(depth))) probes.emplace_back(V.field_of_state(b), b);
  const FieldPtr L = V.field_of_state(inst.omega);

  {  // 1. vacuum
    CheckResult r;
    const FieldPtr vac_field = V.field_of_state(inst.vacuum);
    const Window w = mode_window(HalfInt(0), depth);
    for (StateId s : states)
      for (int n = w.lo; n <= w.hi; ++n) {
        ++r.checked;
        const StateVector want = n == -1 ? StateVector::basis(s) : StateVector();
        if (!vanishes(mod, vac_field->mode(n, s) - want)) r.fail(describe(mod, "V(vacuum) is not Id", n, s));
      }
    for (const auto& [a, b] : probes) {
      const Window wa = mode_window(a->weight(), depth);
      for (int n = 0; n <= std::max(wa.hi, 0); ++n) {
        ++r.checked;
        if (!vanishes(mod, a->mode(n, inst.vacuum)))
          r.fail(a->label() + "(" + std::to_string(n) + ") does not kill the vacuum");
      }
      ++r.checked;
      if (!vanishes(mod, a->mode(-1, inst.vacuum) - StateVector::basis(b)))
        r.fail("V(a)(-1) vacuum != a for a = " + mod.format(b));
    }
    rep.axioms.push_back({1, "vacuum", r});
  }
  {  // 2. irreducibility: generator modes on the vacuum span every level
    CheckResult r;
    std::map<HalfInt, SparseEchelon> ech;
    std::map<HalfInt, std::vector<StateVector>> found;
    std::deque<StateVector> queue;
    auto push = [&](const StateVector& v) {
      if (v.empty()) return;
      const HalfInt g = mod.grade(v.begin()->first);
      if (g > depth || !homogeneous_grade(mod, v, g)) return;
      if (!ech[g].insert(v)) return;
      found[g].push_back(v);
      queue.push_back(v);
    };
    push(inst.vacuum);
    while (!queue.empty()) {
      const StateVector v = queue.front();
      queue.pop_front();
      const HalfInt g = mod.grade(v.begin()->first);
      for (const auto& a : inst.generators)
        for (HalfInt t(0); t <= depth; t += kHalf) {
          const HalfInt slot = g + a->weight() - HalfInt(1) - t;
          if (slot.is_integer()) push(a->mode(slot.whole(), v));
        }
    }
    for (HalfInt g(0); g <= depth; g += kHalf) {
      ++r.checked;
      const std::size_t got = span_rank(mod, g, found[g]), want = mod.quotient_dim(g);
      if (got != want)
        r.fail("level " + g.to_string() + ": generated rank " + std::to_string(got) + " of " + std::to_string(want));
    }
    rep.axioms.push_back({2, "irreducibility", r});
  }
  {  // 3. locality with the parity of the Z2 degrees
    CheckResult r;
    for (const auto& [a, sa] : probes)
      for (const auto& [b, sb] : probes) {
        const auto loc = locality_order(a, b, depth);
        r.checked += loc.checked;
        const int pa = mod.state(sa).parity, pb = mod.state(sb).parity;
        if (!loc.found) {
          r.fail("(" + a->label() + ", " + b->label() + ") not local at this depth");
          continue;
        }
        if (loc.parity != (pa & pb)) r.fail("(" + a->label() + ", " + b->label() + ") local with the wrong parity");
        for (int n = 0; n < loc.order; ++n) {
          const StateVector prod = a->mode(n, sb);
          if (!prod.empty() && state_parity(mod, prod) != (pa ^ pb))
            r.fail("A_nB parity is not the sum of degrees for (" + a->label() + ", " + b->label() + ")");
        }
      }
    rep.axioms.push_back({3, "locality", r});
  }
  {  // 4. Virasoro relations with c = 2 |omega|^2
    CheckResult r;
    const Scalar c = Scalar(2) * mod.inner(inst.omega, inst.omega);
    if (c != inst.central_charge)
      r.fail("2|omega|^2 = " + c.to_string() + " but c = " + inst.central_charge.to_string());
    if (!vanishes(mod, L->mode(0, inst.vacuum)) || !vanishes(mod, L->mode(1, inst.vacuum)))
      r.fail("L_{-1} or L_0 does not kill the vacuum");
    for (StateId s : states)
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
          StateVector want = L->mode(m + n + 1, s);
          want.scale(Scalar(m - n));
          if (m + n == 0) want.add_term(s, c * Scalar::fraction(m * m * m - m, 12));
          ++r.checked;
          if (!vanishes(mod, graded_commutator(L, L, m + 1, n + 1, 0, s) - want)) {
            r.fail("[L_" + std::to_string(m) + ", L_" + std::to_string(n) + "] fails on " + mod.format(s));
          }
        }
    rep.axioms.push_back({4, "virasoro", r});
  }
  {  // 5. grading and parity split
    CheckResult r;
    for (StateId s : states) {
      ++r.checked;
      const HalfInt g = mod.grade(s);
      if (!vanishes(mod, L->mode(1, s) - StateVector::basis(s, Scalar(g.to_rational()))))
        r.fail("L_0 != grade on " + mod.format(s));
      if (mod.state(s).parity != (g.is_integer() ? 0 : 1)) r.fail("parity does not follow the grade on " + mod.format(s));
    }
    if (!homogeneous_grade(mod, inst.vacuum, HalfInt(0))) r.fail("vacuum not in H_0");
    if (!homogeneous_grade(mod, inst.omega, HalfInt(2))) r.fail("omega not in H_2");
    rep.axioms.push_back({5, "grading", r});
  }
  {  // 6. [L_0, A(n)] = (alpha - 1 - n) A(n)
    CheckResult r;
    for (const auto& [a, b] : probes) {
      const HalfInt alpha = mod.grade(b);
      const Window w = mode_window(alpha, depth);
      for (StateId s : states)
        for (int n = w.lo; n <= w.hi; ++n) {
          ++r.checked;
          StateVector want = a->mode(n, s);
          want.scale(Scalar((alpha - HalfInt(1) - HalfInt(n)).to_rational()));
          if (!vanishes(mod, graded_commutator(L, a, 1, n, 0, s) - want))
            r.fail(describe(mod, "[L_0, " + a->label() + "]", n, s));
        }
    }
    rep.axioms.push_back({6, "L0-commutator", r});
  }
  {  // 7. [L_{-1}, A(n)] = -n A(n-1) = V(L_{-1} a)(n)
    CheckResult r;
    for (const auto& [a, b] : probes) {
      const Window w = mode_window(mod.grade(b), depth);
      const FieldPtr ta = V.field_of_state(L->mode(0, StateVector::basis(b)));
      for (StateId s : states)
        for (int n = w.lo; n <= w.hi + 1; ++n) {
          ++r.checked;
          StateVector want = a->mode(n - 1, s);
          want.scale(Scalar(-n));
          if (!vanishes(mod, graded_commutator(L, a, 0, n, 0, s) - want))
            r.fail(describe(mod, "[L_{-1}, " + a->label() + "]", n, s));
          if (!vanishes(mod, ta->mode(n, s) - want)) r.fail(describe(mod, "V(L_{-1}a) != V(a)'", n, s));
        }
    }
    rep.axioms.push_back({7, "L-1-commutator", r});
  }
  return rep;
}

CheckResult check_borcherds(StateFieldMap& fields, const StateVector& a, const StateVector& b, StateId v,
                            HalfInt depth) {
  CheckResult res;
  GradedModule& mod = fields.module();
  const FieldPtr A = fields.field_of_state(a), B = fields.field_of_state(b);
  const auto loc = locality_order(A, B, depth);
  if (!loc.found) {
    res.fail("fields not local at this depth");
    return res;
  }
  const int N = loc.order;
  const HalfInt alpha = A->weight(), beta = B->weight(), g = mod.grade(v);
  std::map<int, FieldPtr> rhs_fields;  // n -> V(A(n) b)
  auto rhs_field = [&](int n) {
    auto it = rhs_fields.find(n);
    if (it == rhs_fields.end()) it = rhs_fields.emplace(n, fields.field_of_state(A->mode(n, b))).first;
    return it->second;
  };
  for (StateId d : mod.basis_up_to(depth)) {
    const HalfInt t = mod.grade(d);
    const HalfInt total = g - t + alpha + beta - HalfInt(2) - HalfInt(N);
    if (!total.is_integer()) continue;
    const int S = total.whole();
    const int p_lo = S - (g + beta - HalfInt(1)).floor();
    const int p_hi = (g + alpha - HalfInt(1)).floor();
    const StateVector dv = StateVector::basis(d);
    // F(p): coefficient of z^{-p-1} w^{-S+p-1} in (z-w)^N A(z)B(w)v paired with d.
    std::map<int, Scalar> poly;
    for (int p = p_lo - 2; p <= p_hi + 2; ++p) {
      StateVector acc;
      for (int k = 0; k <= N; ++k) {
        Scalar coef(binomial(N, k));
        if (k % 2) coef = -coef;
        acc.add(A->mode(p + N - k, B->mode(S - p + k, v)), coef);
      }
      const Scalar f = mod.inner(acc, dv);
      ++res.checked;
      if (p < p_lo || p > p_hi) {
        if (!f.is_zero()) res.fail("left side has terms outside the locality window at " + mod.format(d));
        continue;
      }
      if (!f.is_zero()) poly[-p - 1] = f;  // exponent of x = z/w
    }
    // Expand at x = 1: the (x-1)^j coefficient must equal (V(A(N-1-j)b)(S+1+j)v, d).
    const int terms = std::max(p_hi - p_lo + 2, N + 1);
    for (int j = 0; j < terms; ++j) {
      Scalar lhs;
      for (const auto& [e, f] : poly) lhs += f * Scalar(binomial(e, j));
      const Scalar rhs = mod.inner(rhs_field(N - 1 - j)->mode(S + 1 + j, v), dv);
      ++res.checked;
      if (lhs != rhs)
        res.fail("coefficient (z-w)^" + std::to_string(j) + " differs against " + mod.format(d) + ": " +
                 lhs.to_string() + " vs " + rhs.to_string());
    }
  }
  return res;
}

}  // namespace vosa
