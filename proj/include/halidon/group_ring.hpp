#pragma once

/**
 * @file group_ring.hpp
 * @brief The group ring Z_n C_m of a cyclic group over a halidon ring.
 *
 * An element u = a_1 + a_2 g + ... + a_m g^{m-1} is stored as its coefficient
 * vector (a_1..a_m), 1-based in the mathematical notation and 0-based in
 * storage. The lambda map sends u to its spectrum
 *
 *     lambda_r = sum_i a_{wrap(m-i+2)} w^{(i-1)(r-1)},   r = 1..m,
 *
 * where wrap(t) = ((t-1) mod m) + 1. It is an isomorphism Z_n C_m -> Z_n^m of
 * Z_n-algebras, so units and idempotents are read off componentwise.
 */

#include <cstdint>
#include <vector>

#include "halidon/halidon.hpp"

namespace halidon {

/// Maps any integer subscript onto {1..m}.
constexpr std::int64_t wrap_index(std::int64_t t, std::int64_t m) noexcept {
  return ((t - 1) % m + m) % m + 1;
}

class GroupRingElement {
 public:
  /// Coefficients are reduced mod n; length must equal m.
  GroupRingElement(HalidonStructure ring, std::vector<std::int64_t> coeffs);
  GroupRingElement(HalidonStructure ring, std::vector<u64> coeffs);

  static GroupRingElement zero(const HalidonStructure& ring);
  static GroupRingElement identity(const HalidonStructure& ring);
  /// g^k.
  static GroupRingElement generator_power(const HalidonStructure& ring, std::int64_t k);

  const HalidonStructure& ring() const noexcept { return ring_; }
  const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient a_i of g^{i-1}, 1-based, with wraparound.
  u64 coeff(std::int64_t i) const noexcept;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  HalidonStructure ring_;
  std::vector<u64> coeffs_;
};

class Spectrum {
 public:
  Spectrum(HalidonStructure ring, std::vector<std::int64_t> values);
  Spectrum(HalidonStructure ring, std::vector<u64> values);

  /// Spectrum with 1 in position r (1-based) and 0 elsewhere.
  static Spectrum basis(const HalidonStructure& ring, std::size_t r);

  const HalidonStructure& ring() const noexcept { return ring_; }
  const std::vector<u64>& values() const noexcept { return values_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  HalidonStructure ring_;
  std::vector<u64> values_;
};

Spectrum lambda_transform(const GroupRingElement& u);
GroupRingElement lambda_reconstruct(const Spectrum& s);

GroupRingElement add(const GroupRingElement& u, const GroupRingElement& v);
/// Cyclic convolution of coefficient vectors. Throws Error{mismatched_ring}.
GroupRingElement multiply(const GroupRingElement& u, const GroupRingElement& v);
Spectrum pointwise_product(const Spectrum& a, const Spectrum& b);

/// Inverse through the spectrum. Throws Error{not_unit} naming the first
/// lambda_r that is not a unit.
GroupRingElement inverse_element(const GroupRingElement& u);

/// Throws Error{not_idempotent_spectrum} unless every entry satisfies x^2 = x.
GroupRingElement idempotent_from_spectrum(const Spectrum& s);

enum class CensusMode { brute_force, formula };

struct Census {
  u64 units = 0;
  u64 idempotents = 0;
};

/// Largest n^m the brute-force census will enumerate.
inline constexpr u64 kCensusEnumerationLimit = 10'000'000;

/// Counts units and idempotents of Z_n C_m. Brute force decides unithood by the
/// determinant of the multiplication matrix, independent of the lambda map.
/// Throws Error{too_large} past the enumeration limit or on 64-bit overflow.
Census census(const HalidonStructure& ring, CensusMode mode);

}  // namespace halidon
