#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices and vectors over Z_n.
 *
 * Z_n is not a field in general, so elimination uses gcd-pivoting (unimodular
 * row operations) rather than division. Span membership is decided against a
 * Howell-style echelon form, which is canonical for submodules of Z_n^k.
 */

#include <cstddef>
#include <vector>

#include "halidon/ring_core.hpp"

namespace halidon {

using ModVector = std::vector<u64>;

class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, u64 modulus);
  /// Entries are reduced mod modulus.
  ModMatrix(const std::vector<std::vector<std::int64_t>>& rows, u64 modulus);

  static ModMatrix identity(std::size_t k, u64 modulus);
  static ModMatrix zero(std::size_t k, u64 modulus) { return ModMatrix(k, k, modulus); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  u64 modulus() const noexcept { return modulus_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  u64& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ModVector row(std::size_t i) const;
  ModVector column(std::size_t j) const;
  std::vector<std::vector<u64>> to_rows() const;

  ModMatrix transpose() const;
  ModMatrix scaled(u64 c) const;

  /// M v for a column vector v.
  ModVector apply(const ModVector& v) const;
  /// v M for a row vector v.
  ModVector apply_right(const ModVector& v) const;

  friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

  bool is_zero() const noexcept;
  bool is_idempotent() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  u64 modulus_;
  std::vector<u64> data_;
};

/// Determinant over Z_n by Euclidean row reduction.
u64 determinant(const ModMatrix& a);

/// Inverse over Z_n. Throws Error{not_invertible} when det(a) is not a unit.
ModMatrix inverse(const ModMatrix& a);

/// The Z_n-submodule of Z_n^k spanned by a list of vectors.
class Span {
 public:
  Span(std::size_t dimension, u64 modulus);
  Span(const std::vector<ModVector>& generators, std::size_t dimension, u64 modulus);

  void add(const ModVector& v);
  bool contains(const ModVector& v) const;
  bool contains_all(const std::vector<ModVector>& vs) const;

  /// True when every pivot of the echelon form is a unit, i.e. the span is free
  /// with the echelon rows as a basis.
  bool is_free() const;
  /// Number of echelon rows; equals the rank when the span is free.
  std::size_t echelon_rows() const noexcept { return rows_.size(); }
  /// Number of elements of the span.
  u64 cardinality() const;

 private:
  void rebuild();

  std::size_t dim_;
  u64 n_;
  std::vector<ModVector> rows_;  // Howell form, pivots ascending
};

struct ExtractedBasis {
  std::vector<ModVector> vectors;
  /// False when no unit-pivot basis was found and `vectors` is the full
  /// spanning set instead.
  bool free = true;
};

/// Greedy basis extraction from the columns of m.
ExtractedBasis column_basis(const ModMatrix& m);

}  // namespace halidon
