#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vosa/field.hpp"
#include "vosa/modules.hpp"

namespace vosa {

// Outcome of a finite-truncation check. Certification is only claimed for
// the probed states and mode slots.
struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string failure;  // first failure, empty when ok
  void fail(const std::string& why) {
    if (ok) failure = why;
    ok = false;
  }
  void merge(const CheckResult& other);
};

// Integer slots n for which A(n) can map a state of grade <= depth to a
// state of grade in [0, depth].
struct Window {
  int lo = 0;
  int hi = -1;
};
Window mode_window(HalfInt weight, HalfInt depth);

// Zero in the module, or null modulo the radical when it is irreducible.
bool vanishes(GradedModule& module, const StateVector& v);

// A(m)B(n)s - (-1)^eps B(n)A(m)s.
StateVector graded_commutator(const FieldPtr& a, const FieldPtr& b, int m, int n, int eps, StateId s);

// sum_k (-1)^k C(N,k) [A(m+N-k), B(n+k)]_eps vanishes on every basis state of
// grade <= depth, for all slot pairs landing in grades [0, depth].
bool locality_holds(const FieldPtr& a, const FieldPtr& b, int order, int eps, HalfInt depth,
                    std::size_t* checked = nullptr);

struct LocalityResult {
  bool found = false;
  int order = -1;
  int parity = 0;
  std::size_t checked = 0;
};

// Smallest N (then parity, preferring the product of the field parities)
// for which locality holds at the given depth. The search stops at
// max_order, by default ceil(weight(A) + weight(B)) + 1.
LocalityResult locality_order(const FieldPtr& a, const FieldPtr& b, HalfInt depth, int max_order = -1);

struct OpeTerm {
  int n;
  FieldPtr field;  // A_nB
};

// A_nB for n = N-1 down to 0.
std::vector<OpeTerm> ope_singular_part(const FieldPtr& a, const FieldPtr& b, int order);

// sum_{p<N} C(m,p) (A_pB)(m+n-p) s.
StateVector bracket_from_ope(const std::vector<OpeTerm>& ope, int m, int n, StateId s);

// Finds the locality order, then compares bracket_from_ope with the direct
// graded commutator on every basis state up to depth and slot pair in range.
CheckResult cross_check_bracket(const FieldPtr& a, const FieldPtr& b, HalfInt depth);

// A(n) and B(n) agree on all basis states up to depth for n in the window.
CheckResult fields_agree(const FieldPtr& a, const FieldPtr& b, HalfInt depth);

/// The maps R(A) = A(-1)Omega and V on a vacuum module: V(Omega) = Id and
/// V(c s') = A_{n}V(s') where c = A(n) is a generator mode.
class StateFieldMap {
 public:
  explicit StateFieldMap(GradedModule& module);
  GradedModule& module() const { return *module_; }
  FieldPtr generator(ModeKind kind, int color = 0);
  FieldPtr identity() const { return identity_; }
  FieldPtr field_of_state(StateId id);
  FieldPtr field_of_state(const StateVector& v);
  StateVector state_of_field(const FieldPtr& field);

 private:
  GradedModule* module_;
  FieldPtr identity_;
  std::map<std::pair<int, int>, FieldPtr> generators_;
  std::unordered_map<StateId, FieldPtr> fields_;
};

struct ClosureField {
  FieldPtr field;
  StateVector state;  // R(field)
  HalfInt grade;
};

struct ClosureResult {
  std::vector<ClosureField> fields;
  std::map<HalfInt, std::size_t> rank;  // rank of R(fields) per level
  bool spans = false;                   // every level up to depth reached
  bool budget_exceeded = false;
  bool local = true;  // Dong re-check of new fields against generators
  std::vector<std::string> notes;
};

// Breadth-first n-th products A_nF of generators A with fields F already
// found, keeping those whose state R(A_nF) = A(n)R(F) is new, up to depth.
// When locality_depth > 0 every new field is re-checked local with each
// generator and with itself, with the parity predicted by the Z2 degrees.
ClosureResult generate_closure(GradedModule& module, const std::vector<FieldPtr>& generators, HalfInt depth,
                               std::size_t budget = 5000, HalfInt locality_depth = HalfInt(0));

// Rank of a set of vectors at one level, in the quotient for irreducible modules.
std::size_t span_rank(GradedModule& module, HalfInt level, const std::vector<StateVector>& vectors);

struct VosaInstance {
  std::string name;
  ModulePtr module;
  std::shared_ptr<StateFieldMap> fields;
  std::vector<FieldPtr> generators;
  StateVector vacuum;
  StateVector omega;
  Scalar central_charge;  // closed form; checked against 2 |omega|^2
  std::optional<StateVector> tau;
};

struct AxiomResult {
  int axiom = 0;
  std::string name;
  CheckResult result;
};

struct AxiomReport {
  HalfInt depth;
  std::vector<AxiomResult> axioms;
  bool ok() const;
};

AxiomReport check_vosa_axioms(VosaInstance& inst, HalfInt depth);

// Matrix coefficients of (z-w)^N V(a,z)V(b,w)v against every basis d up to
// depth, expanded at z = w, agree with those of
// sum_{n<N} V(a_(n) b, w)(z-w)^{N-1-n} v, term by term.
CheckResult check_borcherds(StateFieldMap& fields, const StateVector& a, const StateVector& b, StateId v,
                            HalfInt depth);

}  // namespace vosa
