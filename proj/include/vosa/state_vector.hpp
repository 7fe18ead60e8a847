#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vosa/scalar.hpp"

namespace vosa {

using StateId = std::uint32_t;

// Finite linear combination of interned basis states, sorted by id, without
// zero coefficients.
class StateVector {
 public:
  using Entry = std::pair<StateId, Scalar>;

  StateVector() = default;
  static StateVector basis(StateId id, const Scalar& coef = Scalar(1));

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Scalar coefficient(StateId id) const;
  StateVector& add(const StateVector& other, const Scalar& factor = Scalar(1));
  StateVector& add_term(StateId id, const Scalar& coef);
  StateVector& scale(const Scalar& factor);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a.add(b); }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a.add(b, Scalar(-1)); }
  friend StateVector operator*(const Scalar& s, StateVector v) { return v.scale(s); }
  bool operator==(const StateVector&) const = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace vosa
