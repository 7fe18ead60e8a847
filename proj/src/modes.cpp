#include "vosa/modes.hpp"

#include <stdexcept>

namespace vosa {

const char* kind_name(ModeKind k) {
  switch (k) {
    case ModeKind::fermion: return "psi";
    case ModeKind::boson: return "X";
    case ModeKind::virasoro: return "L";
    case ModeKind::super: return "G";
    case ModeKind::central: return "K";
  }
  return "?";
}

HalfInt Mode::field_weight() const {
  switch (kind) {
    case ModeKind::fermion: return kHalf;
    case ModeKind::boson: return HalfInt(1);
    case ModeKind::virasoro: return HalfInt(2);
    case ModeKind::super: return HalfInt::from_twice(3);
    case ModeKind::central: return HalfInt(0);
  }
  return HalfInt(0);
}

std::uint32_t Mode::pack() const {
  return (static_cast<std::uint32_t>(kind) << 28) | (static_cast<std::uint32_t>(color & 0xfff) << 16) |
         static_cast<std::uint32_t>((index.twice() + 0x8000) & 0xffff);
}

Mode Mode::unpack(std::uint32_t key) {
  return {static_cast<ModeKind>(key >> 28), static_cast<int>((key >> 16) & 0xfff),
          HalfInt::from_twice(static_cast<int>(key & 0xffff) - 0x8000)};
}

std::string Mode::to_string() const {
  std::string s = kind_name(kind);
  if (kind == ModeKind::central) return s;
  if (kind == ModeKind::fermion || kind == ModeKind::boson) s += "^" + std::to_string(color);
  return s + "_{" + index.to_string() + "}";
}

bool FermionAlgebra::has(const Mode& m) const {
  return m.kind == ModeKind::fermion && m.color >= 0 && m.color < colors_ && !m.index.is_integer();
}

Bracket FermionAlgebra::bracket(const Mode& a, const Mode& b) const {
  Bracket br;
  if (a.color == b.color && a.index + b.index == HalfInt(0)) br.central = Scalar(1);
  return br;
}

std::vector<ModeFamily> FermionAlgebra::families() const {
  std::vector<ModeFamily> out;
  for (int a = 0; a < colors_; ++a) out.push_back({ModeKind::fermion, a, kHalf});
  return out;
}

std::string FermionAlgebra::describe() const { return "fermion(" + std::to_string(colors_) + ")"; }

bool AffineAlgebra::has(const Mode& m) const {
  return m.kind == ModeKind::boson && m.color >= 0 && m.color < lie_->dim() && m.index.is_integer();
}

Bracket AffineAlgebra::bracket(const Mode& a, const Mode& b) const {
  Bracket br;
  const HalfInt sum = a.index + b.index;
  for (int c = 0; c < lie_->dim(); ++c) {
    const Scalar& g = lie_->gamma(a.color, b.color, c);
    if (!g.is_zero()) br.modes.emplace_back(Mode{ModeKind::boson, c, sum}, Scalar::i() * g);
  }
  if (a.color == b.color && sum == HalfInt(0)) br.central = Scalar(a.index.whole()) * level_;
  return br;
}

std::vector<ModeFamily> AffineAlgebra::families() const {
  std::vector<ModeFamily> out;
  for (int a = 0; a < lie_->dim(); ++a) out.push_back({ModeKind::boson, a, HalfInt(1)});
  return out;
}

std::string AffineAlgebra::describe() const {
  return "affine(" + lie_->name() + ", level " + level_.to_string() + ")";
}

bool NeveuSchwarzAlgebra::has(const Mode& m) const {
  if (m.kind == ModeKind::virasoro) return m.index.is_integer();
  return super_ && m.kind == ModeKind::super && !m.index.is_integer();
}

Bracket NeveuSchwarzAlgebra::bracket(const Mode& a, const Mode& b) const {
  Bracket br;
  const HalfInt sum = a.index + b.index;
  const Scalar m(a.index.to_rational());
  const Scalar n(b.index.to_rational());
  const bool diagonal = sum == HalfInt(0);
  const Scalar half = Scalar::fraction(1, 2);
  if (a.kind == ModeKind::virasoro && b.kind == ModeKind::virasoro) {
    if (m != n) br.modes.emplace_back(Mode::vir(sum.whole()), m - n);
    if (diagonal) br.central = c_ * Scalar::fraction(1, 12) * (m * m * m - m);
  } else if (a.kind == ModeKind::virasoro) {
    br.modes.emplace_back(Mode::super(sum), m * half - n);  // [L_m, G_r] = (m/2 - r) G
  } else if (b.kind == ModeKind::virasoro) {
    br.modes.emplace_back(Mode::super(sum), m - n * half);  // [G_r, L_n] = (r - n/2) G
  } else {
    br.modes.emplace_back(Mode::vir(sum.whole()), Scalar(2));
    if (diagonal) br.central = c_ * Scalar::fraction(1, 3) * (m * m - Scalar::fraction(1, 4));
  }
  std::erase_if(br.modes, [](const auto& t) { return t.second.is_zero(); });
  return br;
}

std::vector<ModeFamily> NeveuSchwarzAlgebra::families() const {
  std::vector<ModeFamily> out{{ModeKind::virasoro, 0, HalfInt(1)}};
  if (super_) out.push_back({ModeKind::super, 0, kHalf});
  return out;
}

std::string NeveuSchwarzAlgebra::describe() const {
  return std::string(super_ ? "neveu-schwarz" : "virasoro") + "(c = " + c_.to_string() + ")";
}

bool DirectSumAlgebra::has(const Mode& m) const {
  for (const auto& p : parts_)
    if (p->has(m)) return true;
  return false;
}

Bracket DirectSumAlgebra::bracket(const Mode& a, const Mode& b) const {
  for (const auto& p : parts_)
    if (p->has(a)) return p->has(b) ? p->bracket(a, b) : Bracket{};
  throw std::invalid_argument("mode " + a.to_string() + " not in algebra");
}

std::vector<ModeFamily> DirectSumAlgebra::families() const {
  std::vector<ModeFamily> out;
  for (const auto& p : parts_)
    for (const auto& f : p->families()) out.push_back(f);
  return out;
}

std::string DirectSumAlgebra::describe() const {
  std::string s;
  for (const auto& p : parts_) s += (s.empty() ? "" : " + ") + p->describe();
  return s;
}

Floor Floor::sl2_spin(HalfInt j) {
  if (j < HalfInt(0)) throw std::invalid_argument("spin must be non-negative");
  Floor f;
  f.dim = j.twice() + 1;
  f.labels.clear();
  // Basis k = 0..2j holds |j, m> with 2m = 2j - 2k.
  for (int k = 0; k < f.dim; ++k) f.labels.push_back("|" + j.to_string() + "," + HalfInt::from_twice(j.twice() - 2 * k).to_string() + ">");
  Matrix e(f.dim, f.dim), fm(f.dim, f.dim), h(f.dim, f.dim);
  const Rational jj = j.to_rational();
  for (int k = 0; k < f.dim; ++k) {
    const Rational m = jj - k;
    h(k, k) = Scalar(Rational(2) * m);
    if (k > 0) e(k - 1, k) = Scalar::sqrt(Rational((jj - m) * (jj + m + 1)));  // E|m> -> |m+1>
    if (k + 1 < f.dim) fm(k + 1, k) = Scalar::sqrt(Rational((jj + m) * (jj - m + 1)));
  }
  const Scalar r = Scalar::sqrt(2) * Scalar::fraction(1, 2);
  Matrix x1(f.dim, f.dim), x2(f.dim, f.dim), x3(f.dim, f.dim);
  for (int a = 0; a < f.dim; ++a)
    for (int b = 0; b < f.dim; ++b) {
      x1(a, b) = Scalar::i() * r * (e(a, b) - fm(a, b));
      x2(a, b) = r * (e(a, b) + fm(a, b));
      x3(a, b) = r * h(a, b);
    }
  f.zero_modes[Mode::boson(0, 0).pack()] = x1;
  f.zero_modes[Mode::boson(1, 0).pack()] = x2;
  f.zero_modes[Mode::boson(2, 0).pack()] = x3;
  return f;
}

Floor Floor::highest_weight(const Scalar& h) {
  Floor f;
  Matrix m(1, 1);
  m(0, 0) = h;
  f.zero_modes[Mode::vir(0).pack()] = m;
  return f;
}

Floor Floor::tensor(const Floor& left, const Floor& right) {
  Floor f;
  f.dim = left.dim * right.dim;
  f.labels.clear();
  for (int a = 0; a < left.dim; ++a)
    for (int b = 0; b < right.dim; ++b)
      f.labels.push_back(right.dim == 1 ? left.labels[a] : left.dim == 1 ? right.labels[b] : left.labels[a] + "(x)" + right.labels[b]);
  for (const auto& [key, m] : left.zero_modes) {
    Matrix big(f.dim, f.dim);
    for (int a = 0; a < left.dim; ++a)
      for (int a2 = 0; a2 < left.dim; ++a2)
        for (int b = 0; b < right.dim; ++b) big(a * right.dim + b, a2 * right.dim + b) = m(a, a2);
    f.zero_modes[key] = big;
  }
  for (const auto& [key, m] : right.zero_modes) {
    if (f.zero_modes.count(key)) throw std::invalid_argument("tensor floors share a zero mode");
    Matrix big(f.dim, f.dim);
    for (int a = 0; a < left.dim; ++a)
      for (int b = 0; b < right.dim; ++b)
        for (int b2 = 0; b2 < right.dim; ++b2) big(a * right.dim + b, a * right.dim + b2) = m(b, b2);
    f.zero_modes[key] = big;
  }
  return f;
}

}  // namespace vosa
