#include "vosa/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vosa {
namespace {

bool rad_less(std::int64_t a, std::int64_t b) {
  const auto ua = std::llabs(a), ub = std::llabs(b);
  if (ua != ub) return ua < ub;
  return a > b;  // positive before negative
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Gaussian elimination over Q; solves M x = rhs for square invertible M.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("scalar inverse: singular multiplication matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t n) {
  if (n == 0) return {0, 0};
  std::int64_t sign = n < 0 ? -1 : 1;
  std::int64_t rest = std::llabs(n), square = 1, free = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) free *= p;
  }
  free *= rest;
  return {square, sign * free};
}

Scalar::Scalar(std::int64_t value) {
  if (value != 0) terms_.push_back({1, Rational(static_cast<long>(value))});
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) {
    terms_.push_back({1, value});
    terms_[0].coef.canonicalize();
  }
}

Scalar Scalar::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::sqrt(std::int64_t n) {
  Scalar out;
  if (n == 0) return out;
  auto [square, free] = squarefree_split(n);
  out.terms_.push_back({free, Rational(static_cast<long>(square))});
  return out;
}

Scalar Scalar::sqrt(const Rational& q) {
  if (q == 0) return {};
  const mpz_class prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p()) throw std::overflow_error("radicand too large");
  Scalar root = sqrt(static_cast<std::int64_t>(prod.get_si()));
  return root * Scalar(Rational(1, q.get_den()));
}

bool Scalar::is_real() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.rad < 0; });
}

Rational Scalar::rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

Rational Scalar::coefficient(std::int64_t rad) const {
  for (const auto& t : terms_)
    if (t.rad == rad) return t.coef;
  return 0;
}

int Scalar::sign() const { return sgn(rational()); }

void Scalar::add_term(std::int64_t rad, const Rational& coef) {
  if (coef == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), rad,
                             [](const Term& t, std::int64_t r) { return rad_less(t.rad, r); });
  if (it != terms_.end() && it->rad == rad) {
    it->coef += coef;
    if (it->coef == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{rad, coef});
  }
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& t : out.terms_)
    if (t.rad < 0) t.coef = -t.coef;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.rad, t.coef);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.rad, -t.coef);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational() && b.is_rational()) return Scalar(a.terms_[0].coef * b.terms_[0].coef);
  std::map<std::int64_t, Rational> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::int64_t ux = std::llabs(x.rad), uy = std::llabs(y.rad);
      const std::int64_t g = std::gcd(ux, uy);
      const std::int64_t m = (ux / g) * (uy / g);
      const int negatives = (x.rad < 0) + (y.rad < 0);
      Rational c = x.coef * y.coef * Rational(static_cast<long>(g));
      std::int64_t rad = m;
      if (negatives == 1) rad = -m;
      if (negatives == 2) c = -c;
      acc[rad] += c;
    }
  }
  Scalar out;
  for (auto& [rad, c] : acc) out.add_term(rad, c);
  return out;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(Rational(1) / terms_[0].coef);
  if (terms_.size() == 1) {
    // 1/(q sqrt(r)) = sqrt(r) / (q r)
    const auto& t = terms_[0];
    Scalar out;
    out.terms_.push_back({t.rad, Rational(1) / (t.coef * Rational(static_cast<long>(t.rad)))});
    return out;
  }
  // Solve a*x = 1 in the basis of square-free products of the generators.
  std::vector<std::int64_t> gens;
  bool imaginary = false;
  for (const auto& t : terms_) {
    if (t.rad < 0) imaginary = true;
    for (auto p : prime_factors(t.rad))
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
  }
  if (imaginary) gens.push_back(-1);
  if (gens.size() > 16) throw std::overflow_error("scalar inverse: too many radicands");
  std::vector<std::int64_t> basis;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
    std::int64_t r = 1;
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (mask >> k & 1) r *= gens[k];
    basis.push_back(r);
  }
  std::sort(basis.begin(), basis.end(), rad_less);
  const std::size_t n = basis.size();
  auto index_of = [&](std::int64_t r) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), r, rad_less) - basis.begin());
  };
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Scalar e;
    e.terms_.push_back({basis[j], 1});
    const Scalar col = *this * e;
    for (const auto& t : col.terms_) m[index_of(t.rad)][j] = t.coef;
  }
  std::vector<Rational> rhs(n);
  rhs[index_of(1)] = 1;
  const auto x = solve_rational(std::move(m), std::move(rhs));
  Scalar out;
  for (std::size_t j = 0; j < n; ++j) out.add_term(basis[j], x[j]);
  return out;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && t.rad != 1) {
      os << "-";
      c = -c;
    }
    first = false;
    std::string radical;
    const std::int64_t m = std::llabs(t.rad);
    if (t.rad < 0) radical = m == 1 ? "i" : "i*sqrt(" + std::to_string(m) + ")";
    else if (m != 1) radical = "sqrt(" + std::to_string(m) + ")";
    if (radical.empty()) os << c.get_str();
    else if (c == 1) os << radical;
    else os << c.get_str() << "*" << radical;
  }
  return os.str();
}

double Scalar::approx_real() const {
  double v = 0;
  for (const auto& t : terms_)
    if (t.rad > 0) v += t.coef.get_d() * std::sqrt(static_cast<double>(t.rad));
  return v;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace vosa
