#include "vosa/state_vector.hpp"

#include <algorithm>

namespace vosa {

StateVector StateVector::basis(StateId id, const Scalar& coef) {
  StateVector v;
  if (!coef.is_zero()) v.entries_.emplace_back(id, coef);
  return v;
}

Scalar StateVector::coefficient(StateId id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, StateId k) { return e.first < k; });
  return it != entries_.end() && it->first == id ? it->second : Scalar();
}

StateVector& StateVector::add_term(StateId id, const Scalar& coef) {
  if (coef.is_zero()) return *this;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const Entry& e, StateId k) { return e.first < k; });
  if (it != entries_.end() && it->first == id) {
    it->second += coef;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry{id, coef});
  }
  return *this;
}

StateVector& StateVector::add(const StateVector& other, const Scalar& factor) {
  if (factor.is_zero() || other.empty()) return *this;
  const bool unit = factor == Scalar(1);
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, unit ? b->second : b->second * factor);
      ++b;
    } else {
      Scalar s = a->second + (unit ? b->second : b->second * factor);
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

StateVector& StateVector::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
  } else if (factor != Scalar(1)) {
    for (auto& e : entries_) e.second *= factor;
  }
  return *this;
}

}  // namespace vosa
