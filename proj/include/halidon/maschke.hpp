#pragma once

/**
 * @file maschke.hpp
 * @brief Representations of finite groups over Z_n and Maschke splittings.
 *
 * Matrices act on column vectors: rho(g) e_h = e_{gh}, so rho is a homomorphism,
 * rho(a) rho(b) = rho(ab). Averaging a projection phi onto an RG-submodule
 *
 *     tau = |G|^{-1} sum_g rho(g)^{-1} phi rho(g)
 *
 * yields an equivariant projection with the same image, and V splits as
 * im(tau) + im(I - tau). The complement is taken as an image, never a kernel,
 * so no elimination over the non-field Z_n is needed to form it.
 */

#include <cstddef>
#include <vector>

#include "halidon/halidon.hpp"
#include "halidon/matrix.hpp"

namespace halidon {

/// Finite group as a 0-based multiplication table: table[i][j] = index of g_i g_j.
class GroupTable {
 public:
  /// Validates the Latin-square property, the identity row/column and
  /// associativity. Throws Error{invalid_table}.
  GroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity);

  std::size_t order() const noexcept { return table_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  /// S_3 ordered id, (12), (13), (23), (123), (132).
  static GroupTable symmetric3();
  static GroupTable cyclic(std::size_t m);

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
};

class Representation {
 public:
  /// Checks rho(identity) = I, the homomorphism property and invertibility.
  /// Throws Error{invalid_argument} on failure.
  Representation(GroupTable group, u64 modulus, std::vector<ModMatrix> matrices);

  const GroupTable& group() const noexcept { return group_; }
  u64 modulus() const noexcept { return modulus_; }
  std::size_t degree() const noexcept { return matrices_.front().rows(); }
  const ModMatrix& operator()(std::size_t g) const { return matrices_[g]; }
  const std::vector<ModMatrix>& matrices() const noexcept { return matrices_; }

  /// Trace character chi(g) = tr rho(g).
  u64 character(std::size_t g) const;

 private:
  GroupTable group_;
  u64 modulus_;
  std::vector<ModMatrix> matrices_;
};

/// Idempotent k x k matrix over Z_n.
class Projection {
 public:
  /// Throws Error{not_projection} unless P * P == P.
  explicit Projection(ModMatrix matrix);

  const ModMatrix& matrix() const noexcept { return matrix_; }
  u64 modulus() const noexcept { return matrix_.modulus(); }

 private:
  ModMatrix matrix_;
};

/// C_m acting on Z_n^m by the shift circulant rho(g) = circ(0, ..., 0, 1).
Representation regular_rep_cyclic(const HalidonStructure& ring);

/// pi_1..pi_m where pi_r is rho extended linearly to the group-ring idempotent
/// e_r with standard-basis spectrum. Image of pi_r is spanned by
/// (1, w^{r-1}, ..., (w^{r-1})^{m-1}).
std::vector<Projection> cyclic_decomposition(const HalidonStructure& ring);

/// rho(g) e_h = e_{gh}.
Representation permutation_rep(const GroupTable& group, u64 modulus);

/// Throws Error{order_not_invertible} when gcd(|G|, n) > 1.
Projection average_projection(const Representation& rep, const Projection& phi);

struct ModuleSplit {
  ExtractedBasis invariant;   ///< spans im(tau)
  ExtractedBasis complement;  ///< spans im(I - tau)
};

/// Throws Error{not_projection} if tau is not idempotent.
ModuleSplit split_module(const Representation& rep, const ModMatrix& tau);

/// True when rho(g) maps span(vectors) into itself for every g.
bool is_invariant_span(const Representation& rep, const std::vector<ModVector>& vectors);

/// True when tau commutes with every rho(g).
bool is_equivariant(const Representation& rep, const ModMatrix& tau);

}  // namespace halidon
