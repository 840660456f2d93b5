#pragma once

/**
 * @file transform.hpp
 * @brief Number-theoretic DFT over a halidon ring, cyclic convolution, circulant
 * matrices and the circulant bilinear forms <x, y>_u = x C_u y^T.
 *
 * Vectors here are 0-based, (f_0..f_{m-1}), with f read as the polynomial
 * f_0 + f_1 x + ... + f_{m-1} x^{m-1} in Z_n[x]/(x^m - 1). The transform is the
 * direct O(m^2) evaluation F_j = f(w^j).
 */

#include <cstdint>
#include <vector>

#include "halidon/halidon.hpp"
#include "halidon/matrix.hpp"

namespace halidon {

class CoeffVector {
 public:
  CoeffVector(HalidonStructure ring, std::vector<std::int64_t> entries);
  CoeffVector(HalidonStructure ring, std::vector<u64> entries);

  static CoeffVector zero(const HalidonStructure& ring);
  /// e_i, 1-based: 1 in position i.
  static CoeffVector unit_vector(const HalidonStructure& ring, std::size_t i);

  const HalidonStructure& ring() const noexcept { return ring_; }
  const std::vector<u64>& entries() const noexcept { return entries_; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  HalidonStructure ring_;
  std::vector<u64> entries_;
};

class DftVector {
 public:
  DftVector(HalidonStructure ring, std::vector<std::int64_t> entries);
  DftVector(HalidonStructure ring, std::vector<u64> entries);

  const HalidonStructure& ring() const noexcept { return ring_; }
  const std::vector<u64>& entries() const noexcept { return entries_; }

  friend bool operator==(const DftVector&, const DftVector&) = default;

 private:
  HalidonStructure ring_;
  std::vector<u64> entries_;
};

DftVector dft(const CoeffVector& f);
CoeffVector idft(const DftVector& F);

/// Transform with an arbitrary evaluation root, F_j = sum_k f_k root^{jk}.
std::vector<u64> evaluate_at_powers(const std::vector<u64>& f, u64 root, u64 n);

CoeffVector add(const CoeffVector& a, const CoeffVector& b);
CoeffVector scale(const CoeffVector& a, u64 c);
DftVector add(const DftVector& a, const DftVector& b);
DftVector scale(const DftVector& a, u64 c);
DftVector pointwise_product(const DftVector& a, const DftVector& b);

enum class ConvolutionMode { direct, spectral };

/// h_l = sum_{j+k = l mod m} f_j g_k. Throws Error{mismatched_ring}.
CoeffVector convolve(const CoeffVector& f, const CoeffVector& g,
                     ConvolutionMode mode = ConvolutionMode::direct);

/// Phi(i, j) = w^{ij}, 0-based.
ModMatrix vandermonde(const HalidonStructure& ring);
/// Phi with w replaced by w^-1.
ModMatrix vandermonde_conjugate(const HalidonStructure& ring);

struct CirculantMatrix {
  CoeffVector first_row;
  /// entry(i, j) = u_{wrap(j - i + 1)}, 1-based.
  ModMatrix entries;
};

/// Shift circulant of u. Also checks (1/m) Phi diag(dft(u)) Phi* == C_u and
/// throws Error{reconstruction_mismatch} if it fails.
CirculantMatrix circulant(const CoeffVector& u);

/// x C_u y^T. Throws Error{mismatched_ring}.
u64 bilinear_eval(const CoeffVector& u, const CoeffVector& x, const CoeffVector& y);

/// s_i = (1, w^{m-i+1}, (w^{m-i+1})^2, ...), the image of g^{i-1} under RG -> R^m.
CoeffVector s_basis_vector(const HalidonStructure& ring, std::size_t i);

/// Gram matrix M(i, j) = <s_i, s_j>_u computed by direct evaluation.
ModMatrix gram_s_basis(const CoeffVector& u);
/// m * (u_1 + u_2 w^{i-1} + ... + u_m w^{(i-1)(m-1)}) when i + j = 2 mod m, else 0.
ModMatrix gram_closed_form(const CoeffVector& u);

/// True iff every Gram entry on the positions i + j = 2 mod m is a unit.
bool is_nondegenerate(const CoeffVector& u);

}  // namespace halidon
