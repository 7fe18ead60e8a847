#include "vosa/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace vosa {

Matrix Matrix::conj_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

bool Matrix::is_hermitian() const { return rows_ == cols_ && conj_transpose() == *this; }

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
    const Scalar inv = m(row, col).inv();
    for (std::size_t k = col; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t k = col; k < m.cols(); ++k)
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Scalar>> null_space(Matrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    out.push_back(std::move(x));
  }
  return out;
}

Inertia inertia(const Matrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) throw std::domain_error("inertia: matrix not square");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = symmetric(r, c).rational();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (a[r][c] != a[c][r]) throw std::domain_error("inertia: matrix not symmetric");

  Inertia out;
  std::vector<std::size_t> live(n);
  for (std::size_t k = 0; k < n; ++k) live[k] = k;
  auto eliminate = [&](std::size_t p) {
    // Schur complement against a nonzero diagonal pivot p.
    for (auto r : live)
      for (auto c : live) {
        if (a[r][p] == 0 || a[p][c] == 0) continue;
        a[r][c] -= a[r][p] * a[p][c] / a[p][p];
      }
  };
  while (!live.empty()) {
    std::size_t diag = n;
    for (auto k : live)
      if (a[k][k] != 0) {
        diag = k;
        break;
      }
    if (diag != n) {
      (a[diag][diag] > 0 ? out.positive : out.negative)++;
      std::erase(live, diag);
      eliminate(diag);
      continue;
    }
    // Zero diagonal: find an off-diagonal entry; none means the rest is zero.
    std::size_t p = n, q = n;
    for (auto r : live) {
      for (auto c : live)
        if (r != c && a[r][c] != 0) {
          p = r;
          q = c;
          break;
        }
      if (p != n) break;
    }
    if (p == n) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    // Replace row/col p by p+q: new diagonal 2*a[p][q] is nonzero and the
    // congruence keeps inertia.
    for (auto k : live) a[p][k] += a[q][k];
    for (auto k : live) a[k][p] += a[k][q];
    (a[p][p] > 0 ? out.positive : out.negative)++;
    std::erase(live, p);
    eliminate(p);
  }
  return out;
}

StateVector SparseEchelon::reduce(StateVector v) const {
  // Pivots ascend and elimination only introduces larger keys.
  auto it = rows_.begin();
  while (!v.empty() && it != rows_.end()) {
    const Scalar c = v.coefficient(it->first);
    if (!c.is_zero()) v.add(it->second, -c);
    ++it;
  }
  return v;
}

bool SparseEchelon::insert(const StateVector& v) {
  StateVector r = reduce(v);
  if (r.empty()) return false;
  const auto [pivot, coef] = *r.begin();
  r.scale(coef.inv());
  rows_.emplace(pivot, std::move(r));
  return true;
}

}  // namespace vosa
