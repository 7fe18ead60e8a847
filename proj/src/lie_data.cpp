#include "vosa/lie_data.hpp"

#include <stdexcept>

namespace vosa {

LieAlgebraData::LieAlgebraData(std::string name, int dim)
    : name_(std::move(name)), dim_(dim), gamma_(static_cast<std::size_t>(dim) * dim * dim) {
  if (dim <= 0) throw std::invalid_argument("Lie algebra dimension must be positive");
}

void LieAlgebraData::set_antisymmetric(int a, int b, int c, const Scalar& v) {
  set_raw(a, b, c, v);
  set_raw(b, c, a, v);
  set_raw(c, a, b, v);
  set_raw(b, a, c, -v);
  set_raw(a, c, b, -v);
  set_raw(c, b, a, -v);
}

namespace {

Scalar casimir_column(const LieAlgebraData& d, int b, int e) {
  Scalar s;
  for (int a = 0; a < d.dim(); ++a)
    for (int c = 0; c < d.dim(); ++c)
      if (!d.gamma(a, c, b).is_zero() && !d.gamma(a, c, e).is_zero()) s += d.gamma(a, c, b) * d.gamma(a, c, e);
  return s;
}

}  // namespace

ValidationReport validate(const LieAlgebraData& d) {
  ValidationReport rep;
  const int n = d.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Scalar& v = d.gamma(a, b, c);
        if (!v.is_real()) rep.violations.push_back({"reality", {a, b, c}, v.to_string()});
        if (v != -d.gamma(b, a, c) || v != -d.gamma(a, c, b))
          rep.violations.push_back({"antisymmetry", {a, b, c}, v.to_string()});
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          Scalar s;
          for (int f = 0; f < n; ++f)
            s += d.gamma(a, b, f) * d.gamma(c, e, f) + d.gamma(e, a, f) * d.gamma(c, b, f) +
                 d.gamma(e, b, f) * d.gamma(a, c, f);
          if (!s.is_zero()) rep.violations.push_back({"jacobi", {a, b, c, e}, s.to_string()});
        }
  const Scalar first = casimir_column(d, 0, 0);
  for (int b = 0; b < n; ++b)
    for (int e = 0; e < n; ++e) {
      const Scalar s = casimir_column(d, b, e);
      const Scalar want = b == e ? first : Scalar();
      if (s != want) rep.violations.push_back({"normalization", {b, e}, s.to_string()});
    }
  if (first.is_zero() || !first.is_rational() || first.sign() < 0)
    rep.violations.push_back({"normalization", {0, 0}, "2g = " + first.to_string() + " is not a positive rational"});
  return rep;
}

Scalar dual_coxeter(const LieAlgebraData& d) {
  const Scalar twice = casimir_column(d, 0, 0);
  for (int b = 1; b < d.dim(); ++b)
    if (casimir_column(d, b, b) != twice)
      throw std::domain_error("dual Coxeter number depends on the basis index: bad normalization");
  if (twice.is_zero() || !twice.is_rational() || twice.sign() < 0)
    throw std::domain_error("dual Coxeter number must be a positive rational, got " + twice.to_string() + "/2");
  return twice * Scalar::fraction(1, 2);
}

LieAlgebraData sl2_basis() {
  LieAlgebraData d("sl2", 3);
  d.set_antisymmetric(0, 1, 2, Scalar::sqrt(2));
  return d;
}

Scalar casimir_constant_sl2(HalfInt j) {
  if (j < HalfInt(0)) throw std::invalid_argument("spin must be non-negative");
  const Scalar s(j.to_rational());
  return Scalar(2) * s * s + Scalar(2) * s;
}

int CatalogEntry::dim_at(int n) const {
  if (family == "A_n") return n * n + 2 * n;
  if (family == "B_n" || family == "C_n") return 2 * n * n + n;
  if (family == "D_n") return 2 * n * n - n;
  return std::stoi(dim);
}

int CatalogEntry::dual_coxeter_at(int n) const {
  if (family == "A_n" || family == "C_n") return n + 1;
  if (family == "B_n") return 2 * n - 1;
  if (family == "D_n") return 2 * n - 2;
  return std::stoi(dual_coxeter);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> rows = {
      {"A_n", "n^2+2n", "n+1"}, {"B_n", "2n^2+n", "2n-1"}, {"C_n", "2n^2+n", "n+1"},
      {"D_n", "2n^2-n", "2n-2"}, {"E6", "78", "12"},        {"E7", "133", "18"},
      {"E8", "248", "30"},       {"F4", "52", "9"},          {"G2", "14", "4"},
  };
  return rows;
}

}  // namespace vosa
