#pragma once

#include <string>
#include <vector>

#include "vosa/half_int.hpp"
#include "vosa/scalar.hpp"

namespace vosa {

// Structure constants of a simple Lie algebra in a real orthonormal basis,
// [X_a, X_b] = i sum_c gamma(a,b,c) X_c, indices 0-based.
class LieAlgebraData {
 public:
  LieAlgebraData(std::string name, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const Scalar& gamma(int a, int b, int c) const { return gamma_[index(a, b, c)]; }
  // Sets gamma(a,b,c) and its five antisymmetric images.
  void set_antisymmetric(int a, int b, int c, const Scalar& value);
  // Sets a single entry only; used to build deliberately broken data.
  void set_raw(int a, int b, int c, const Scalar& value) { gamma_[index(a, b, c)] = value; }

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * dim_ + b) * dim_ + c;
  }
  std::string name_;
  int dim_;
  std::vector<Scalar> gamma_;
};

struct Violation {
  std::string kind;  // "antisymmetry", "jacobi", "normalization", "reality"
  std::vector<int> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebraData& data);

// g = 1/2 sum_{a,c} gamma(a,c,b)^2, checked to be the same for every b and
// to be a positive rational. Throws std::domain_error otherwise.
Scalar dual_coxeter(const LieAlgebraData& data);

// sl2 in the basis X1 = i sqrt2/2 (E-F), X2 = sqrt2/2 (E+F), X3 = sqrt2/2 H,
// so gamma(a,b,c) = sqrt2 * sign(abc).
LieAlgebraData sl2_basis();

// 2j^2 + 2j, the Casimir eigenvalue on the spin-j module in this basis.
Scalar casimir_constant_sl2(HalfInt j);

struct CatalogEntry {
  std::string family;  // "A_n", "E6", ...
  std::string dim;     // closed form in the rank, e.g. "n^2+2n"
  std::string dual_coxeter;
  // Evaluated at a given rank (rank ignored for exceptional algebras).
  int dim_at(int rank) const;
  int dual_coxeter_at(int rank) const;
};

const std::vector<CatalogEntry>& catalog();

}  // namespace vosa
