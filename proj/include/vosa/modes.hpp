#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <tuple>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vosa/half_int.hpp"
#include "vosa/lie_data.hpp"
#include "vosa/linalg.hpp"
#include "vosa/scalar.hpp"

namespace vosa {

enum class ModeKind : std::uint8_t { fermion, boson, virasoro, super, central };

const char* kind_name(ModeKind k);

// One mode psi^a_r, X^a_n, L_n, G_r or a central element.
struct Mode {
  ModeKind kind = ModeKind::central;
  int color = 0;
  HalfInt index;

  static Mode psi(int a, HalfInt r) { return {ModeKind::fermion, a, r}; }
  static Mode boson(int a, int n) { return {ModeKind::boson, a, HalfInt(n)}; }
  static Mode vir(int n) { return {ModeKind::virasoro, 0, HalfInt(n)}; }
  static Mode super(HalfInt r) { return {ModeKind::super, 0, r}; }

  int parity() const { return kind == ModeKind::fermion || kind == ModeKind::super ? 1 : 0; }
  bool creation() const { return index < HalfInt(0); }
  Mode adjoint() const { return {kind, color, -index}; }
  // Conformal weight of the generating field: psi 1/2, X 1, L 2, G 3/2.
  HalfInt field_weight() const;
  // Field slot n with mode index = n - weight + 1.
  HalfInt slot() const { return index + field_weight() - HalfInt(1); }

  std::uint32_t pack() const;
  static Mode unpack(std::uint32_t key);
  // Normal-order key: larger keys stand further left in a word.
  std::tuple<int, int, int> order_key() const {
    return {index.twice() < 0 ? -index.twice() : index.twice(), static_cast<int>(kind), color};
  }
  std::string to_string() const;
  bool operator==(const Mode&) const = default;
};

// Supercommutator [a, b] expressed as modes plus a central scalar.
struct Bracket {
  std::vector<std::pair<Mode, Scalar>> modes;
  Scalar central;
};

// Creation modes of one kind/color: indices -first, -first-1, ...
struct ModeFamily {
  ModeKind kind;
  int color;
  HalfInt first;
};

class ModeAlgebra {
 public:
  virtual ~ModeAlgebra() = default;
  virtual bool has(const Mode& m) const = 0;
  // Requires has(a) && has(b).
  virtual Bracket bracket(const Mode& a, const Mode& b) const = 0;
  virtual std::vector<ModeFamily> families() const = 0;
  virtual std::string describe() const = 0;
};

// [psi^a_r, psi^b_s]_+ = delta_ab delta_{r+s}
class FermionAlgebra final : public ModeAlgebra {
 public:
  explicit FermionAlgebra(int colors) : colors_(colors) {}
  int colors() const { return colors_; }
  bool has(const Mode& m) const override;
  Bracket bracket(const Mode& a, const Mode& b) const override;
  std::vector<ModeFamily> families() const override;
  std::string describe() const override;

 private:
  int colors_;
};

// [X^a_m, X^b_n] = i sum_c gamma_abc X^c_{m+n} + m delta_ab delta_{m+n} level
class AffineAlgebra final : public ModeAlgebra {
 public:
  AffineAlgebra(std::shared_ptr<const LieAlgebraData> lie, Scalar level)
      : lie_(std::move(lie)), level_(std::move(level)) {}
  const LieAlgebraData& lie() const { return *lie_; }
  const Scalar& level() const { return level_; }
  bool has(const Mode& m) const override;
  Bracket bracket(const Mode& a, const Mode& b) const override;
  std::vector<ModeFamily> families() const override;
  std::string describe() const override;

 private:
  std::shared_ptr<const LieAlgebraData> lie_;
  Scalar level_;
};

// Neveu-Schwarz relations at central charge c; with_super = false keeps only
// the Virasoro part.
class NeveuSchwarzAlgebra final : public ModeAlgebra {
 public:
  NeveuSchwarzAlgebra(Scalar c, bool with_super) : c_(std::move(c)), super_(with_super) {}
  const Scalar& central_charge() const { return c_; }
  bool with_super() const { return super_; }
  bool has(const Mode& m) const override;
  Bracket bracket(const Mode& a, const Mode& b) const override;
  std::vector<ModeFamily> families() const override;
  std::string describe() const override;

 private:
  Scalar c_;
  bool super_;
};

// Union of mutually (super)commuting algebras with disjoint mode kinds.
class DirectSumAlgebra final : public ModeAlgebra {
 public:
  explicit DirectSumAlgebra(std::vector<std::shared_ptr<const ModeAlgebra>> parts) : parts_(std::move(parts)) {}
  const std::vector<std::shared_ptr<const ModeAlgebra>>& parts() const { return parts_; }
  bool has(const Mode& m) const override;
  Bracket bracket(const Mode& a, const Mode& b) const override;
  std::vector<ModeFamily> families() const override;
  std::string describe() const override;

 private:
  std::vector<std::shared_ptr<const ModeAlgebra>> parts_;
};

// The grade-0 space: an orthonormal basis with the zero modes acting by
// matrices (column j = image of basis vector j). Zero modes without a matrix
// act as 0.
struct Floor {
  int dim = 1;
  std::vector<std::string> labels{"Omega"};
  std::map<std::uint32_t, Matrix> zero_modes;

  static Floor trivial() { return {}; }
  // sl2 spin-j module |j,m>, m = j, j-1, ..., -j, in the orthonormal basis of
  // sl2_basis(); X^a_0 act by the spin matrices.
  static Floor sl2_spin(HalfInt j);
  // Highest-weight line with L_0 = h.
  static Floor highest_weight(const Scalar& h);
  // Floor of a tensor product: dims multiply, zero modes act on their factor.
  static Floor tensor(const Floor& left, const Floor& right);
};

}  // namespace vosa
