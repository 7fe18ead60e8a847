#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "vosa/half_int.hpp"
#include "vosa/linalg.hpp"
#include "vosa/modes.hpp"
#include "vosa/state_vector.hpp"

namespace vosa {

// A spanning monomial c_1 c_2 ... c_k |floor> with creation modes in
// normal order (order keys non-increasing, strictly for odd modes).
struct BasisState {
  std::vector<Mode> word;
  int floor = 0;
  HalfInt grade;
  int parity = 0;
};

struct WordHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
};

/// Highest-weight module generated from a finite-dimensional floor by the
/// creation modes of a mode algebra. States are interned monomials; mode
/// actions are computed by normal-order rewriting and memoized. The form is
/// the unique one with orthonormal floor and X_n^* = X_{-n} for every mode.
///
/// When constructed as irreducible, the module stands for its quotient by
/// the radical of the form: dimensions are Gram ranks and equal() compares
/// modulo null vectors. Materialization is not thread-safe.
class GradedModule {
 public:
  GradedModule(std::string name, std::shared_ptr<const ModeAlgebra> algebra, Floor floor, bool irreducible);

  const std::string& name() const { return name_; }
  const ModeAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const ModeAlgebra> algebra_ptr() const { return algebra_; }
  const Floor& floor() const { return floor_; }
  bool irreducible() const { return irreducible_; }

  StateId floor_state(int k = 0);
  StateId vacuum() { return floor_state(0); }
  // Interns an already normal-ordered word; throws std::invalid_argument otherwise.
  StateId intern(const std::vector<Mode>& word, int floor = 0);
  const BasisState& state(StateId id) const { return states_.at(id); }
  HalfInt grade(StateId id) const { return states_.at(id).grade; }

  // Normal-ordered monomials of the given level, largest first letter first,
  // floor index varying fastest.
  const std::vector<StateId>& basis(HalfInt level);
  std::vector<StateId> basis_up_to(HalfInt depth);

  StateVector apply(const Mode& m, StateId id);
  StateVector apply(const Mode& m, const StateVector& v);
  // Applies word[k-1] first, word[0] last, like the monomial itself.
  StateVector apply_word(const std::vector<Mode>& word, StateVector v);

  // Linear in the first slot, antilinear in the second.
  Scalar inner(StateId a, StateId b);
  Scalar inner(const StateVector& u, const StateVector& v);
  Matrix gram(HalfInt level);
  // Vectors w with (b, w) = 0 for every basis b of the level.
  std::vector<StateVector> kernel(HalfInt level);
  std::size_t dim(HalfInt level) { return basis(level).size(); }
  // Dimension of the quotient by the radical: rank of the Gram matrix.
  std::size_t quotient_dim(HalfInt level);

  bool is_null(const StateVector& v);
  // Exact equality, or equality modulo null vectors for irreducible modules.
  bool equal(const StateVector& u, const StateVector& v);

  // D = grade, T determined by T(floor) = 0 and [T, A(n)] = -n A(n-1).
  StateVector operator_D(const StateVector& v) const;
  StateVector operator_T(const StateVector& v);

  std::string format(StateId id) const;
  std::string format(const StateVector& v) const;
  std::size_t state_count() const { return states_.size(); }

 private:
  StateVector apply_bracket(const Bracket& br, StateId id);
  StateVector compute_apply(const Mode& m, StateId id);

  std::string name_;
  std::shared_ptr<const ModeAlgebra> algebra_;
  Floor floor_;
  bool irreducible_;
  std::vector<BasisState> states_;
  std::unordered_map<std::vector<std::uint32_t>, StateId, WordHash> index_;
  std::map<HalfInt, std::vector<StateId>> levels_;
  std::map<HalfInt, Matrix> grams_;
  std::map<HalfInt, std::size_t> ranks_;
  std::unordered_map<std::uint64_t, StateVector> apply_cache_;
  std::unordered_map<std::uint64_t, Scalar> inner_cache_;
  std::unordered_map<StateId, StateVector> t_cache_;
};

}  // namespace vosa
