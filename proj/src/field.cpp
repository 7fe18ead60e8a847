#include "vosa/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "vosa/json_io.hpp"

namespace vosa {

Rational binomial(long top, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long j = 0; j < k; ++j) r = r * Rational(top - j) / Rational(j + 1);
  return r;
}

StateVector Field::mode(int n, StateId s) {
  const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) | s;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  StateVector out = compute(n, s);
  cache_.emplace(key, out);
  return out;
}

StateVector Field::mode(int n, const StateVector& v) {
  StateVector out;
  for (const auto& [id, c] : v) out.add(mode(n, id), c);
  return out;
}

GeneratorField::GeneratorField(GradedModule& module, ModeKind kind, int color)
    : Field(module), kind_(kind), color_(color) {
  if (!module.algebra().has(mode_at(0)) && !module.algebra().has(mode_at(1)))
    throw std::invalid_argument(std::string("module has no ") + kind_name(kind) + " modes");
}

Mode GeneratorField::mode_at(int n) const {
  const Mode probe{kind_, color_, HalfInt(0)};
  return {kind_, color_, HalfInt(n) - probe.field_weight() + HalfInt(1)};
}

std::string GeneratorField::label() const {
  std::string s = kind_name(kind_);
  if (kind_ == ModeKind::fermion || kind_ == ModeKind::boson) s += "^" + std::to_string(color_);
  return s;
}

nlohmann::json GeneratorField::tree() const {
  static const char* names[] = {"psi", "X", "L", "G", "K"};
  return {{"gen", names[static_cast<int>(kind_)]}, {"color", color_}};
}

StateVector GeneratorField::compute(int n, StateId s) { return module().apply(mode_at(n), s); }

StateVector IdentityField::compute(int n, StateId s) { return n == -1 ? StateVector::basis(s) : StateVector(); }

NthProductField::NthProductField(FieldPtr a, FieldPtr b, int n)
    : Field(a->module()), a_(std::move(a)), b_(std::move(b)), n_(n) {
  if (&a_->module() != &b_->module()) throw std::invalid_argument("n-th product of fields on different modules");
  if (a_->parity() < 0 || b_->parity() < 0) throw std::invalid_argument("n-th product needs homogeneous parity");
}

std::string NthProductField::label() const {
  return "(" + a_->label() + ")_{" + std::to_string(n_) + "}(" + b_->label() + ")";
}

nlohmann::json NthProductField::tree() const { return {{"nprod", {a_->tree(), b_->tree(), n_}}}; }

StateVector NthProductField::compute(int m, StateId s) {
  const HalfInt g = module().grade(s);
  const int eps = a_->parity() & b_->parity();
  StateVector out;
  if (n_ >= 0) {
    for (int p = 0; p <= n_; ++p) {
      Scalar coef(binomial(n_, p));
      if (p % 2) coef = -coef;
      StateVector term = a_->mode(n_ - p, b_->mode(m + p, s));
      term.add(b_->mode(m + p, a_->mode(n_ - p, s)), Scalar(eps ? 1 : -1));
      out.add(term, coef);
    }
    return out;
  }
  const int p_right = (g + b_->weight() - HalfInt(1)).floor() - m;  // B(m+p)s = 0 beyond
  const int p_left = (g + a_->weight() - HalfInt(1)).floor();       // A(p)s = 0 beyond
  const bool flip = ((eps + n_) % 2 + 2) % 2 != 0;                  // (-1)^{eps+n} = -1
  for (int p = 0; p <= std::max(p_right, p_left); ++p) {
    const Scalar coef(binomial(p - n_ - 1, p));
    if (p <= p_right) out.add(a_->mode(n_ - p, b_->mode(m + p, s)), coef);
    if (p <= p_left) out.add(b_->mode(m + n_ - p, a_->mode(p, s)), flip ? coef : -coef);
  }
  return out;
}

StateVector DerivativeField::compute(int n, StateId s) {
  StateVector out = a_->mode(n - 1, s);
  return out.scale(Scalar(-n));
}

LinCombField::LinCombField(GradedModule& module, Terms terms) : Field(module), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (&t.second->module() != &module) throw std::invalid_argument("linear combination across modules");
}

HalfInt LinCombField::weight() const {
  HalfInt w(0);
  for (std::size_t k = 0; k < terms_.size(); ++k) w = k == 0 ? terms_[k].second->weight() : std::max(w, terms_[k].second->weight());
  return w;
}

int LinCombField::parity() const {
  if (terms_.empty()) return 0;
  const int p = terms_.front().second->parity();
  for (const auto& t : terms_)
    if (t.second->parity() != p) return -1;
  return p;
}

std::string LinCombField::label() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [c, f] : terms_) {
    if (!s.empty()) s += " + ";
    s += (c == Scalar(1) ? "" : "(" + c.to_string() + ")*") + f->label();
  }
  return s;
}

nlohmann::json LinCombField::tree() const {
  auto arr = nlohmann::json::array();
  for (const auto& [c, f] : terms_) {
    arr.push_back({scalar_to_json(c), f->tree()});
  }
  return {{"lincomb", arr}};
}

StateVector LinCombField::compute(int n, StateId s) {
  StateVector out;
  for (const auto& [c, f] : terms_) out.add(f->mode(n, s), c);
  return out;
}

FieldPtr generator_field(GradedModule& module, ModeKind kind, int color) {
  return std::make_shared<GeneratorField>(module, kind, color);
}

FieldPtr identity_field(GradedModule& module) { return std::make_shared<IdentityField>(module); }

FieldPtr zero_field(GradedModule& module) { return std::make_shared<LinCombField>(module, LinCombField::Terms{}); }

LinCombField::Terms components(const FieldPtr& field) {
  if (field->node() != FieldNode::lincomb) return {{Scalar(1), field}};
  LinCombField::Terms out;
  for (const auto& [c, f] : static_cast<const LinCombField&>(*field).terms())
    for (auto& [c2, g] : components(f)) out.emplace_back(c * c2, g);
  return out;
}

FieldPtr nth_product(const FieldPtr& a, const FieldPtr& b, int n) {
  if (a->parity() >= 0 && b->parity() >= 0) return std::make_shared<NthProductField>(a, b, n);
  LinCombField::Terms terms;
  for (const auto& [ca, fa] : components(a))
    for (const auto& [cb, fb] : components(b)) terms.emplace_back(ca * cb, std::make_shared<NthProductField>(fa, fb, n));
  return lincomb(a->module(), std::move(terms));
}

FieldPtr derivative(const FieldPtr& a) { return std::make_shared<DerivativeField>(a); }

FieldPtr lincomb(GradedModule& module, LinCombField::Terms terms) {
  std::erase_if(terms, [](const auto& t) { return t.first.is_zero(); });
  return std::make_shared<LinCombField>(module, std::move(terms));
}

FieldPtr scaled(const Scalar& c, const FieldPtr& a) { return lincomb(a->module(), {{c, a}}); }

FieldPtr sum(const FieldPtr& a, const FieldPtr& b) { return lincomb(a->module(), {{Scalar(1), a}, {Scalar(1), b}}); }

namespace {

FieldPtr rebind_shared(const FieldPtr& field, GradedModule& target, std::unordered_map<const Field*, FieldPtr>& seen) {
  if (auto it = seen.find(field.get()); it != seen.end()) return it->second;
  FieldPtr out;
  switch (field->node()) {
    case FieldNode::generator: {
      const auto& g = static_cast<const GeneratorField&>(*field);
      out = generator_field(target, g.kind(), g.color());
      break;
    }
    case FieldNode::identity:
      out = identity_field(target);
      break;
    case FieldNode::nth_product: {
      const auto& p = static_cast<const NthProductField&>(*field);
      out = std::make_shared<NthProductField>(rebind_shared(p.left(), target, seen),
                                              rebind_shared(p.right(), target, seen), p.n());
      break;
    }
    case FieldNode::derivative:
      out = derivative(rebind_shared(static_cast<const DerivativeField&>(*field).inner(), target, seen));
      break;
    case FieldNode::lincomb: {
      LinCombField::Terms terms;
      for (const auto& [c, f] : static_cast<const LinCombField&>(*field).terms())
        terms.emplace_back(c, rebind_shared(f, target, seen));
      out = lincomb(target, std::move(terms));
      break;
    }
  }
  seen.emplace(field.get(), out);
  return out;
}

}  // namespace

FieldPtr rebind(const FieldPtr& field, GradedModule& target) {
  std::unordered_map<const Field*, FieldPtr> seen;
  return rebind_shared(field, target, seen);
}

FieldPtr field_from_json(const nlohmann::json& tree, GradedModule& module) {
  if (!tree.is_object() || tree.size() < 1) throw std::invalid_argument("field tree must be an object");
  if (tree.contains("gen")) {
    const std::string name = tree.at("gen").get<std::string>();
    if (name == "id") return identity_field(module);
    static const std::pair<const char*, ModeKind> kinds[] = {{"psi", ModeKind::fermion},
                                                            {"X", ModeKind::boson},
                                                            {"L", ModeKind::virasoro},
                                                            {"G", ModeKind::super}};
    for (const auto& [n, k] : kinds)
      if (name == n) {
        const int color = tree.value("color", 0);
        if (!module.algebra().has(Mode{k, color, HalfInt(-1)}) && !module.algebra().has(Mode{k, color, -kHalf}))
          throw std::invalid_argument("module has no generator " + name + "^" + std::to_string(color));
        return generator_field(module, k, color);
      }
    throw std::invalid_argument("unknown generator '" + name + "'");
  }
  if (tree.contains("nprod")) {
    const auto& a = tree.at("nprod");
    if (!a.is_array() || a.size() != 3) throw std::invalid_argument("nprod takes [tree, tree, n]");
    return nth_product(field_from_json(a[0], module), field_from_json(a[1], module), a[2].get<int>());
  }
  if (tree.contains("deriv")) return derivative(field_from_json(tree.at("deriv"), module));
  if (tree.contains("lincomb")) {
    LinCombField::Terms terms;
    for (const auto& t : tree.at("lincomb")) {
      if (!t.is_array() || t.size() != 2) throw std::invalid_argument("lincomb terms are [scalar, tree]");
      terms.emplace_back(scalar_from_json(t[0]), field_from_json(t[1], module));
    }
    return lincomb(module, std::move(terms));
  }
  throw std::invalid_argument("unknown field tree node");
}

}  // namespace vosa
