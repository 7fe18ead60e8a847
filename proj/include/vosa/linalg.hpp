#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vosa/scalar.hpp"
#include "vosa/state_vector.hpp"

namespace vosa {

// Dense row-major matrix over the scalar field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool operator==(const Matrix&) const = default;

  Matrix conj_transpose() const;
  bool is_hermitian() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form in place, pivoting on the first nonzero entry of
// each column. Returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> null_space(Matrix m);

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool operator==(const Inertia&) const = default;
};

// Sylvester inertia of a real symmetric matrix with rational entries, by
// symmetric elimination: a nonzero diagonal pivot when one exists, else the
// congruence row/col p += row/col q that turns an off-diagonal b into a
// diagonal 2b. Throws
// std::domain_error on irrational or non-symmetric input.
Inertia inertia(const Matrix& symmetric);

// Incremental span tracker for sparse vectors: rows are kept with pivot equal
// to their smallest key and unit pivot coefficient.
class SparseEchelon {
 public:
  // Reduces v against the stored rows.
  StateVector reduce(StateVector v) const;
  // Adds v if independent; returns whether the rank grew.
  bool insert(const StateVector& v);
  bool contains(const StateVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<StateId, StateVector> rows_;
};

}  // namespace vosa
