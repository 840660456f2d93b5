#include "halidon/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "halidon/error.hpp"

namespace halidon {

namespace {

void require_same_shape(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus()) {
    throw Error(Errc::mismatched_ring, "matrix shapes or moduli differ");
  }
}

struct Bezout {
  std::int64_t s, t;
  u64 g;
};

// s*a + t*b = g = gcd(a, b) over the integers.
Bezout ext_gcd(u64 a, u64 b) {
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(b);
  std::int64_t old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return {old_s, old_t, static_cast<u64>(old_r)};
}

// Rows i and j become (s*ri + t*rj, -(b/g)*ri + (a/g)*rj); the 2x2 transform has
// determinant 1, so the row module and the determinant are preserved.
void gcd_combine(std::vector<u64>& ri, std::vector<u64>& rj, std::size_t col, u64 n) {
  const u64 a = ri[col], b = rj[col];
  const auto [s, t, g] = ext_gcd(a, b);
  const u64 sm = reduce(s, n), tm = reduce(t, n);
  const u64 c = (n - (b / g) % n) % n, d = (a / g) % n;
  for (std::size_t k = 0; k < ri.size(); ++k) {
    const u64 x = ri[k], y = rj[k];
    ri[k] = add_mod(mul_mod(sm, x, n), mul_mod(tm, y, n), n);
    rj[k] = add_mod(mul_mod(c, x, n), mul_mod(d, y, n), n);
  }
}

void axpy(std::vector<u64>& dst, u64 q, const std::vector<u64>& src, u64 n) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = sub_mod(dst[k], mul_mod(q, src[k], n), n);
}

// A unit u with u*a = gcd(a, n) mod n.
u64 normalizing_unit(u64 a, u64 n) {
  const u64 g = std::gcd(a, n);
  const u64 ng = n / g;
  if (ng == 1) return 1;
  u64 u = mod_inv((a / g) % ng, ng);
  while (std::gcd(u, n) != 1) u += ng;
  return u % n;
}

bool is_zero_vec(const std::vector<u64>& v) {
  for (u64 x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::size_t leading(const ModVector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) return k;
  }
  return v.size();
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, u64 modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
}

ModMatrix::ModMatrix(const std::vector<std::vector<std::int64_t>>& rows, u64 modulus)
    : ModMatrix(rows.size(), rows.empty() ? 0 : rows.front().size(), modulus) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw Error(Errc::invalid_argument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = reduce(rows[i][j], modulus);
  }
}

ModMatrix ModMatrix::identity(std::size_t k, u64 modulus) {
  ModMatrix m(k, k, modulus);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1 % modulus;
  return m;
}

ModVector ModMatrix::row(std::size_t i) const {
  return ModVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

ModVector ModMatrix::column(std::size_t j) const {
  ModVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<u64>> ModMatrix::to_rows() const {
  std::vector<std::vector<u64>> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ModMatrix ModMatrix::scaled(u64 c) const {
  ModMatrix out = *this;
  for (auto& x : out.data_) x = mul_mod(x, c % modulus_, modulus_);
  return out;
}

ModVector ModMatrix::apply(const ModVector& v) const {
  if (v.size() != cols_) throw Error(Errc::invalid_argument, "vector length mismatch");
  ModVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = add_mod(acc, mul_mod((*this)(i, j), v[j], modulus_), modulus_);
    }
    out[i] = acc;
  }
  return out;
}

ModVector ModMatrix::apply_right(const ModVector& v) const {
  if (v.size() != rows_) throw Error(Errc::invalid_argument, "vector length mismatch");
  ModVector out(cols_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    u64 acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      acc = add_mod(acc, mul_mod(v[i], (*this)(i, j), modulus_), modulus_);
    }
    out[j] = acc;
  }
  return out;
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  require_same_shape(a, b);
  ModMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) {
    out.data_[k] = add_mod(a.data_[k], b.data_[k], a.modulus_);
  }
  return out;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  require_same_shape(a, b);
  ModMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) {
    out.data_[k] = sub_mod(a.data_[k], b.data_[k], a.modulus_);
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols_ != b.rows_ || a.modulus_ != b.modulus_) {
    throw Error(Errc::mismatched_ring, "matrix product shape or modulus mismatch");
  }
  const u64 n = a.modulus_;
  ModMatrix out(a.rows_, b.cols_, n);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const u64 x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) = add_mod(out(i, j), mul_mod(x, b(k, j), n), n);
      }
    }
  }
  return out;
}

bool ModMatrix::is_zero() const noexcept { return is_zero_vec(data_); }

bool ModMatrix::is_idempotent() const { return is_square() && (*this) * (*this) == *this; }

u64 determinant(const ModMatrix& a) {
  if (!a.is_square()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  const u64 n = a.modulus();
  auto rows = a.to_rows();
  const std::size_t k = rows.size();
  u64 det = 1 % n;
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t i = col + 1; i < k; ++i) {
      if (rows[i][col] != 0) gcd_combine(rows[col], rows[i], col, n);
    }
    det = mul_mod(det, rows[col][col], n);
  }
  return det;
}

ModMatrix inverse(const ModMatrix& a) {
  if (!a.is_square()) throw Error(Errc::invalid_argument, "inverse of a non-square matrix");
  const u64 n = a.modulus();
  const std::size_t k = a.rows();
  std::vector<std::vector<u64>> aug(k, std::vector<u64>(2 * k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = a(i, j);
    aug[i][k + i] = 1 % n;
  }
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t i = col + 1; i < k; ++i) {
      if (aug[i][col] != 0) gcd_combine(aug[col], aug[i], col, n);
    }
    const u64 pivot = aug[col][col];
    if (std::gcd(pivot, n) != 1) {
      throw Error(Errc::not_invertible, "matrix is not invertible mod " + std::to_string(n));
    }
    const u64 pinv = mod_inv(pivot, n);
    for (auto& x : aug[col]) x = mul_mod(x, pinv, n);
  }
  for (std::size_t col = k; col-- > 0;) {
    for (std::size_t i = 0; i < col; ++i) {
      if (aug[i][col] != 0) axpy(aug[i], aug[i][col], aug[col], n);
    }
  }
  ModMatrix out(k, k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = aug[i][k + j];
  }
  return out;
}

Span::Span(std::size_t dimension, u64 modulus) : dim_(dimension), n_(modulus) {}

Span::Span(const std::vector<ModVector>& generators, std::size_t dimension, u64 modulus)
    : dim_(dimension), n_(modulus) {
  for (const auto& g : generators) {
    if (g.size() != dim_) throw Error(Errc::invalid_argument, "generator length mismatch");
    rows_.push_back(g);
  }
  rebuild();
}

void Span::add(const ModVector& v) {
  if (v.size() != dim_) throw Error(Errc::invalid_argument, "generator length mismatch");
  rows_.push_back(v);
  rebuild();
}

void Span::rebuild() {
  auto& a = rows_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim_ && r < a.size(); ++col) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][col] != 0) gcd_combine(a[r], a[i], col, n_);
    }
    if (a[r][col] == 0) continue;
    const u64 u = normalizing_unit(a[r][col], n_);
    for (auto& x : a[r]) x = mul_mod(x, u, n_);
    const u64 g = a[r][col];
    for (std::size_t i = 0; i < r; ++i) axpy(a[i], a[i][col] / g, a[r], n_);
    // The annihilator multiple has a zero in this column and must still be spanned.
    ModVector extra = a[r];
    for (auto& x : extra) x = mul_mod(x, n_ / g, n_);
    if (!is_zero_vec(extra)) a.push_back(std::move(extra));
    ++r;
  }
  a.resize(r);
  std::erase_if(a, is_zero_vec);
}

bool Span::contains(const ModVector& v) const {
  if (v.size() != dim_) return false;
  ModVector w = v;
  for (auto& x : w) x %= n_;
  for (const auto& row : rows_) {
    const std::size_t c = leading(row);
    for (std::size_t k = 0; k < c; ++k) {
      if (w[k] != 0) return false;
    }
    if (w[c] % row[c] != 0) return false;
    axpy(w, w[c] / row[c], row, n_);
  }
  return is_zero_vec(w);
}

bool Span::contains_all(const std::vector<ModVector>& vs) const {
  for (const auto& v : vs) {
    if (!contains(v)) return false;
  }
  return true;
}

bool Span::is_free() const {
  for (const auto& row : rows_) {
    if (std::gcd(row[leading(row)], n_) != 1) return false;
  }
  return true;
}

u64 Span::cardinality() const {
  u64 c = 1;
  for (const auto& row : rows_) c *= n_ / row[leading(row)];
  return c;
}

ExtractedBasis column_basis(const ModMatrix& m) {
  ExtractedBasis out;
  Span span(m.rows(), m.modulus());
  std::vector<ModVector> nonzero;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = m.column(j);
    if (is_zero_vec(c)) continue;
    nonzero.push_back(c);
    if (span.contains(c)) continue;
    span.add(c);
    out.vectors.push_back(std::move(c));
  }
  out.free = span.is_free() && span.echelon_rows() == out.vectors.size();
  if (!out.free) out.vectors = std::move(nonzero);
  return out;
}

}  // namespace halidon
