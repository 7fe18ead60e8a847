#include "vosa/graded_module.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vosa {
namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

std::vector<std::uint32_t> word_key(const std::vector<Mode>& word, int floor) {
  std::vector<std::uint32_t> key;
  key.reserve(word.size() + 1);
  for (const auto& m : word) key.push_back(m.pack());
  key.push_back(static_cast<std::uint32_t>(floor));
  return key;
}

}  // namespace

std::size_t WordHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

GradedModule::GradedModule(std::string name, std::shared_ptr<const ModeAlgebra> algebra, Floor floor,
                           bool irreducible)
    : name_(std::move(name)), algebra_(std::move(algebra)), floor_(std::move(floor)), irreducible_(irreducible) {
  for (int k = 0; k < floor_.dim; ++k) intern({}, k);
}

StateId GradedModule::floor_state(int k) {
  if (k < 0 || k >= floor_.dim) throw std::out_of_range("floor index out of range");
  return static_cast<StateId>(k);  // interned first by the constructor
}

StateId GradedModule::intern(const std::vector<Mode>& word, int floor) {
  auto key = word_key(word, floor);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  BasisState s;
  s.word = word;
  s.floor = floor;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const Mode& m = word[k];
    if (!m.creation() || !algebra_->has(m)) throw std::invalid_argument("not a creation mode: " + m.to_string());
    if (k > 0) {
      const auto prev = word[k - 1].order_key(), cur = m.order_key();
      if (prev < cur || (prev == cur && m.parity())) throw std::invalid_argument("word not normal ordered");
    }
    s.grade -= m.index;
    s.parity ^= m.parity();
  }
  const auto id = static_cast<StateId>(states_.size());
  states_.push_back(std::move(s));
  index_.emplace(std::move(key), id);
  return id;
}

const std::vector<StateId>& GradedModule::basis(HalfInt level) {
  if (auto it = levels_.find(level); it != levels_.end()) return it->second;
  std::vector<StateId> out;
  if (level >= HalfInt(0)) {
    std::vector<Mode> modes;
    for (const auto& f : algebra_->families())
      for (HalfInt r = f.first; r <= level; r += HalfInt(1)) modes.push_back(Mode{f.kind, f.color, -r});
    std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) { return a.order_key() > b.order_key(); });
    std::vector<Mode> word;
    std::function<void(std::size_t, HalfInt)> walk = [&](std::size_t pos, HalfInt left) {
      if (left == HalfInt(0)) {
        for (int k = 0; k < floor_.dim; ++k) out.push_back(intern(word, k));
        return;
      }
      for (std::size_t i = pos; i < modes.size(); ++i) {
        if (-modes[i].index > left) continue;
        word.push_back(modes[i]);
        walk(modes[i].parity() ? i + 1 : i, left + modes[i].index);
        word.pop_back();
      }
    };
    walk(0, level);
  }
  return levels_.emplace(level, std::move(out)).first->second;
}

std::vector<StateId> GradedModule::basis_up_to(HalfInt depth) {
  std::vector<StateId> out;
  for (HalfInt g(0); g <= depth; g += kHalf) {
    const auto& b = basis(g);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

StateVector GradedModule::apply(const Mode& m, StateId id) {
  const auto key = pair_key(m.pack(), id);
  if (auto it = apply_cache_.find(key); it != apply_cache_.end()) return it->second;
  StateVector out = compute_apply(m, id);
  apply_cache_.emplace(key, out);
  return out;
}

StateVector GradedModule::apply(const Mode& m, const StateVector& v) {
  StateVector out;
  for (const auto& [id, c] : v) out.add(apply(m, id), c);
  return out;
}

StateVector GradedModule::apply_word(const std::vector<Mode>& word, StateVector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply(*it, v);
  return v;
}

StateVector GradedModule::apply_bracket(const Bracket& br, StateId id) {
  StateVector out = StateVector::basis(id, br.central);
  for (const auto& [mode, c] : br.modes) out.add(apply(mode, id), c);
  return out;
}

StateVector GradedModule::compute_apply(const Mode& m, StateId id) {
  if (!algebra_->has(m)) throw std::invalid_argument("mode " + m.to_string() + " not in " + algebra_->describe());
  const std::vector<Mode> word = states_[id].word;  // copy: states_ may grow
  const int floor = states_[id].floor;
  if (word.empty()) {
    if (m.creation()) return StateVector::basis(intern({m}, floor));
    if (m.index > HalfInt(0)) return {};
    StateVector out;
    if (auto it = floor_.zero_modes.find(m.pack()); it != floor_.zero_modes.end())
      for (int k = 0; k < floor_.dim; ++k) out.add_term(floor_state(k), it->second(k, floor));
    return out;
  }
  const Mode& c1 = word.front();
  if (m.creation()) {
    const auto km = m.order_key(), kc = c1.order_key();
    if (km > kc || (km == kc && !m.parity())) {
      std::vector<Mode> w{m};
      w.insert(w.end(), word.begin(), word.end());
      return StateVector::basis(intern(w, floor));
    }
  }
  const StateId rest = intern(std::vector<Mode>(word.begin() + 1, word.end()), floor);
  if (m.creation() && m == c1) {  // odd mode meeting itself: m m = 1/2 [m, m]_+
    StateVector out = apply_bracket(algebra_->bracket(m, m), rest);
    return out.scale(Scalar::fraction(1, 2));
  }
  StateVector out = apply(c1, apply(m, rest));
  if (m.parity() && c1.parity()) out.scale(Scalar(-1));
  out.add(apply_bracket(algebra_->bracket(m, c1), rest));
  return out;
}

Scalar GradedModule::inner(StateId a, StateId b) {
  if (states_[a].grade != states_[b].grade) return {};
  const auto key = pair_key(a, b);
  if (auto it = inner_cache_.find(key); it != inner_cache_.end()) return it->second;
  Scalar out;
  if (states_[a].word.empty()) {
    out = states_[b].word.empty() && states_[a].floor == states_[b].floor ? Scalar(1) : Scalar();
  } else {
    const std::vector<Mode> word = states_[a].word;
    const StateId rest = intern(std::vector<Mode>(word.begin() + 1, word.end()), states_[a].floor);
    for (const auto& [u, c] : apply(word.front().adjoint(), b)) out += c.conj() * inner(rest, u);
  }
  inner_cache_.emplace(key, out);
  return out;
}

Scalar GradedModule::inner(const StateVector& u, const StateVector& v) {
  Scalar out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) {
      if (states_[a].grade != states_[b].grade) continue;
      const Scalar p = inner(a, b);
      if (!p.is_zero()) out += x * y.conj() * p;
    }
  return out;
}

Matrix GradedModule::gram(HalfInt level) {
  if (auto it = grams_.find(level); it != grams_.end()) return it->second;
  const auto b = basis(level);
  Matrix g(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      g(i, j) = inner(b[i], b[j]);
      g(j, i) = g(i, j).conj();
    }
  return grams_.emplace(level, g).first->second;
}

std::vector<StateVector> GradedModule::kernel(HalfInt level) {
  const auto b = basis(level);
  std::vector<StateVector> out;
  for (const auto& x : null_space(gram(level))) {
    StateVector w;
    for (std::size_t j = 0; j < b.size(); ++j) w.add_term(b[j], x[j].conj());
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t GradedModule::quotient_dim(HalfInt level) {
  if (auto it = ranks_.find(level); it != ranks_.end()) return it->second;
  const std::size_t r = rank(gram(level));
  ranks_[level] = r;
  return r;
}

bool GradedModule::is_null(const StateVector& v) {
  std::map<HalfInt, StateVector> parts;
  for (const auto& [id, c] : v) parts[states_[id].grade].add_term(id, c);
  for (const auto& [level, part] : parts) {
    const auto b = basis(level);
    for (auto s : b)
      if (!inner(StateVector::basis(s), part).is_zero()) return false;
  }
  return true;
}

bool GradedModule::equal(const StateVector& u, const StateVector& v) {
  if (u == v) return true;
  return irreducible_ && is_null(u - v);
}

StateVector GradedModule::operator_D(const StateVector& v) const {
  StateVector out;
  for (const auto& [id, c] : v) out.add_term(id, c * Scalar(states_[id].grade.to_rational()));
  return out;
}

StateVector GradedModule::operator_T(const StateVector& v) {
  StateVector out;
  for (const auto& [id, c] : v) {
    if (auto it = t_cache_.find(id); it != t_cache_.end()) {
      out.add(it->second, c);
      continue;
    }
    StateVector t;
    const std::vector<Mode> word = states_[id].word;
    if (!word.empty()) {
      const Mode& c1 = word.front();
      const StateId rest = intern(std::vector<Mode>(word.begin() + 1, word.end()), states_[id].floor);
      t = apply(c1, operator_T(StateVector::basis(rest)));
      // [T, A(n)] = -n A(n-1) with A(n) = c1
      const Mode lower{c1.kind, c1.color, c1.index - HalfInt(1)};
      t.add(apply(lower, rest), -Scalar(c1.slot().to_rational()));
    }
    t_cache_.emplace(id, t);
    out.add(t, c);
  }
  return out;
}

std::string GradedModule::format(StateId id) const {
  const auto& s = states_[id];
  std::string out;
  for (const auto& m : s.word) out += m.to_string() + " ";
  return out + floor_.labels[s.floor];
}

std::string GradedModule::format(const StateVector& v) const {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [id, c] : v) {
    if (!out.empty()) out += " + ";
    out += (c == Scalar(1) ? "" : "(" + c.to_string() + ") ") + format(id);
  }
  return out;
}

}  // namespace vosa
