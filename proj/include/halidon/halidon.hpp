#pragma once

/**
 * @file halidon.hpp
 * @brief Primitive m-th roots of unity in Z_n and the halidon structures they certify.
 *
 * A triple (n, m, w) is a halidon structure when m is invertible mod n, w has
 * multiplicative order m, and every geometric sum 1 + w^r + ... + w^{r(m-1)}
 * vanishes for 0 < r < m. Equivalently, w^d - 1 is a unit for every proper
 * divisor d of m. Both tests are exposed so callers can cross-check them.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "halidon/ring_core.hpp"

namespace halidon {

/// A certified (n, m, w). Only constructible through certify/canonical, so every
/// instance satisfies the primitive-root invariants.
class HalidonStructure {
 public:
  /// Throws Error{not_halidon} when (n, m, omega) fails the criterion.
  static HalidonStructure certify(u64 n, u64 m, u64 omega);
  /// Smallest primitive m-th root mod n. Throws Error{not_halidon} if none exists.
  static HalidonStructure canonical(u64 n, u64 m);
  /// Maximal index of Z_n with its smallest root.
  static HalidonStructure maximal(u64 n);

  u64 n() const noexcept { return n_; }
  u64 m() const noexcept { return m_; }
  u64 omega() const noexcept { return omega_; }
  u64 m_inv() const noexcept { return m_inv_; }
  u64 omega_inv() const noexcept { return omega_inv_; }

  /// omega^k for any integer k (negative exponents use omega^-1).
  u64 omega_pow(std::int64_t k) const noexcept;

  friend bool operator==(const HalidonStructure& a, const HalidonStructure& b) noexcept {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.omega_ == b.omega_;
  }

  std::string describe() const;

 private:
  HalidonStructure(u64 n, u64 m, u64 omega);

  u64 n_;
  u64 m_;
  u64 omega_;
  u64 m_inv_;
  u64 omega_inv_;
  std::vector<u64> powers_;  // omega^0 .. omega^{m-1}
};

/// Divisor criterion: gcd(m, n) = 1, omega^m = 1 and omega^d - 1 a unit for d | m, d < m.
bool satisfies_divisor_criterion(u64 n, u64 m, u64 omega);

/// Definition check: m invertible, m least with omega^m = 1, and every geometric sum
/// over omega^r vanishes for 0 < r < m.
bool satisfies_sum_condition(u64 n, u64 m, u64 omega);

/// Both routes are evaluated; throws std::logic_error if they disagree.
bool is_primitive_root(u64 n, u64 m, u64 omega);

/// All primitive m-th roots mod n, ascending.
std::vector<u64> primitive_roots(u64 n, u64 m);

struct DetectOptions {
  /// Roots are enumerated in full for n up to this bound; above it only the
  /// smallest witness is returned.
  u64 complete_limit = 1'000'000;
};

struct Detection {
  u64 n = 0;
  u64 m_max = 1;
  std::vector<u64> roots;
  bool complete = true;
};

/// Maximal index of Z_n and the primitive roots that certify it.
Detection detect(u64 n, const DetectOptions& options = {});

/// |Aut(Z_n[X]/(X^2 - 1))| for odd n. Throws Error{even_modulus}.
u64 aut_quadratic(u64 n);

/// True iff m! = 2^k * phi(m) for some k >= 1.
bool rigidity_check(u64 m);

}  // namespace halidon
