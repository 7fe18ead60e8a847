#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "vosa/graded_module.hpp"

namespace vosa {

class Field;
using FieldPtr = std::shared_ptr<Field>;

enum class FieldNode { generator, identity, nth_product, derivative, lincomb };

/// A graded family of mode operators A(n), A(z) = sum_n A(n) z^{-n-1},
/// acting on one module. Mode actions are evaluated lazily on basis states
/// and memoized per (n, state).
class Field {
 public:
  explicit Field(GradedModule& module) : module_(&module) {}
  virtual ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  virtual FieldNode node() const = 0;
  // A(n) maps H_m to H_{m-n+weight-1}. Mixed linear combinations report
  // their largest weight.
  virtual HalfInt weight() const = 0;
  // 0 or 1; -1 for a combination of mixed parity.
  virtual int parity() const = 0;
  virtual std::string label() const = 0;
  virtual nlohmann::json tree() const = 0;

  GradedModule& module() const { return *module_; }
  StateVector mode(int n, StateId s);
  StateVector mode(int n, const StateVector& v);

 protected:
  virtual StateVector compute(int n, StateId s) = 0;

 private:
  GradedModule* module_;
  std::unordered_map<std::uint64_t, StateVector> cache_;
};

class GeneratorField final : public Field {
 public:
  GeneratorField(GradedModule& module, ModeKind kind, int color);
  FieldNode node() const override { return FieldNode::generator; }
  HalfInt weight() const override { return Mode{kind_, color_, HalfInt(0)}.field_weight(); }
  int parity() const override { return Mode{kind_, color_, HalfInt(0)}.parity(); }
  std::string label() const override;
  nlohmann::json tree() const override;
  ModeKind kind() const { return kind_; }
  int color() const { return color_; }
  // The mode A(n) = kind^color_{n - weight + 1}.
  Mode mode_at(int n) const;

 protected:
  StateVector compute(int n, StateId s) override;

 private:
  ModeKind kind_;
  int color_;
};

// Id(n) = delta_{n,-1}.
class IdentityField final : public Field {
 public:
  using Field::Field;
  FieldNode node() const override { return FieldNode::identity; }
  HalfInt weight() const override { return HalfInt(0); }
  int parity() const override { return 0; }
  std::string label() const override { return "Id"; }
  nlohmann::json tree() const override { return {{"gen", "id"}}; }

 protected:
  StateVector compute(int n, StateId s) override;
};

// A_nB by the two-branch mode formula; the n < 0 sum is cut off where the
// grading forces B(k)v = 0 or A(p)v = 0.
class NthProductField final : public Field {
 public:
  NthProductField(FieldPtr a, FieldPtr b, int n);
  FieldNode node() const override { return FieldNode::nth_product; }
  HalfInt weight() const override { return a_->weight() + b_->weight() - HalfInt(n_ + 1); }
  int parity() const override { return a_->parity() ^ b_->parity(); }
  std::string label() const override;
  nlohmann::json tree() const override;
  const FieldPtr& left() const { return a_; }
  const FieldPtr& right() const { return b_; }
  int n() const { return n_; }

 protected:
  StateVector compute(int m, StateId s) override;

 private:
  FieldPtr a_, b_;
  int n_;
};

// A'(n) = -n A(n-1).
class DerivativeField final : public Field {
 public:
  explicit DerivativeField(FieldPtr a) : Field(a->module()), a_(std::move(a)) {}
  FieldNode node() const override { return FieldNode::derivative; }
  HalfInt weight() const override { return a_->weight() + HalfInt(1); }
  int parity() const override { return a_->parity(); }
  std::string label() const override { return "(" + a_->label() + ")'"; }
  nlohmann::json tree() const override { return {{"deriv", a_->tree()}}; }
  const FieldPtr& inner() const { return a_; }

 protected:
  StateVector compute(int n, StateId s) override;

 private:
  FieldPtr a_;
};

class LinCombField final : public Field {
 public:
  using Terms = std::vector<std::pair<Scalar, FieldPtr>>;
  LinCombField(GradedModule& module, Terms terms);
  FieldNode node() const override { return FieldNode::lincomb; }
  HalfInt weight() const override;
  int parity() const override;
  std::string label() const override;
  nlohmann::json tree() const override;
  const Terms& terms() const { return terms_; }

 protected:
  StateVector compute(int n, StateId s) override;

 private:
  Terms terms_;
};

FieldPtr generator_field(GradedModule& module, ModeKind kind, int color = 0);
FieldPtr identity_field(GradedModule& module);
FieldPtr zero_field(GradedModule& module);
// A_nB; distributes over linear combinations of mixed parity so every
// product node has homogeneous factors.
FieldPtr nth_product(const FieldPtr& a, const FieldPtr& b, int n);
FieldPtr derivative(const FieldPtr& a);
FieldPtr lincomb(GradedModule& module, LinCombField::Terms terms);
FieldPtr scaled(const Scalar& c, const FieldPtr& a);
FieldPtr sum(const FieldPtr& a, const FieldPtr& b);

// Rebuilds the expression tree with every generator acting on `target`.
FieldPtr rebind(const FieldPtr& field, GradedModule& target);

// Inverse of Field::tree(). Throws std::invalid_argument when malformed.
FieldPtr field_from_json(const nlohmann::json& tree, GradedModule& module);

// Generalized binomial top(top-1)...(top-k+1)/k!, any integer top, k >= 0.
Rational binomial(long top, long k);

// Homogeneous-parity components of a field, flattening linear combinations.
LinCombField::Terms components(const FieldPtr& field);

}  // namespace vosa
