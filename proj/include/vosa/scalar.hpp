#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vosa {

using Rational = mpq_class;

/// Element of a multi-quadratic extension of Q, written sum_r q_r sqrt(r)
/// over square-free radicands r. Radicand 1 carries the rational part and a
/// negative radicand -m stands for i*sqrt(m), so -1 is the imaginary unit.
///
/// Terms are kept sorted by (|r|, sign) with no zero coefficients; the zero
/// element has no terms, which makes equality a plain comparison.
class Scalar {
 public:
  struct Term {
    std::int64_t rad;
    Rational coef;
    bool operator==(const Term&) const = default;
  };

  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(implicit)
  Scalar(int value) : Scalar(static_cast<std::int64_t>(value)) {}  // NOLINT(implicit)
  explicit Scalar(const Rational& value);

  static Scalar fraction(std::int64_t num, std::int64_t den);
  // sqrt(n) for any integer n, reduced to square-free form; sqrt(-1) = i.
  static Scalar sqrt(std::int64_t n);
  // Square root of a non-negative rational p/q, as sqrt(p*q)/q.
  static Scalar sqrt(const Rational& q);
  static Scalar i() { return sqrt(-1); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].rad == 1); }
  // No term with a negative radicand.
  bool is_real() const;
  // Rational value; throws std::domain_error unless is_rational().
  Rational rational() const;
  // Coefficient of sqrt(rad), zero when absent.
  Rational coefficient(std::int64_t rad) const;
  // Sign of a rational element; throws for irrational input.
  int sign() const;

  Scalar conj() const;
  // Throws std::domain_error on zero.
  Scalar inv() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.inv(); }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  bool operator==(const Scalar& o) const = default;

  // "1/2*sqrt(2) - 3*i", "0" for zero.
  std::string to_string() const;
  // Floating approximation for display only.
  double approx_real() const;

 private:
  void add_term(std::int64_t rad, const Rational& coef);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Square-free decomposition n = s^2 * m with sign carried by m.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n);

}  // namespace vosa
