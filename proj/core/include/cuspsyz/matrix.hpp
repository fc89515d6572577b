#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cuspsyz/scalar.hpp"

namespace cuspsyz {

using Vector = std::vector<Scalar>;

class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);
  // All entries must lie in one field; an empty row list needs the column
  // count and field given explicitly.
  static ExactMatrix from_rows(const std::vector<Vector>& rows);
  static ExactMatrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Reduced row echelon form with leftmost pivots; pivot columns returned.
  ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  // One vector per free column f of the rref: 1 at f, minus the rref entries
  // at the pivot columns. Deterministic for a given matrix.
  std::vector<Vector> kernel_basis() const;
  Vector apply(const Vector& x) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

// Incrementally grown subspace of F^n; insert() reports whether the vector
// enlarged the span.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t dim);
  ~EchelonBasis();
  EchelonBasis(EchelonBasis&&) noexcept;
  EchelonBasis& operator=(EchelonBasis&&) noexcept;

  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t size() const;
  std::size_t dim() const { return dim_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Field field_;
  std::size_t dim_;
};

}  // namespace cuspsyz
