#pragma once

/**
 * @file ring_core.hpp
 * @brief Exact arithmetic on Z_n and the number-theoretic functions built on it.
 *
 * All values are canonical residues in [0, n). Products go through 128-bit
 * intermediates, so any modulus below 2^63 is safe; factorization is by trial
 * division and is intended for moduli up to about 10^12.
 */

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace halidon {

using u64 = std::uint64_t;

/// Canonical representative of x mod n.
constexpr u64 reduce(std::int64_t x, u64 n) noexcept {
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t r = x % sn;
  return static_cast<u64>(r < 0 ? r + sn : r);
}

constexpr u64 add_mod(u64 a, u64 b, u64 n) noexcept {
  const u64 s = a + b;
  return s >= n ? s - n : s;
}

constexpr u64 sub_mod(u64 a, u64 b, u64 n) noexcept {
  return a >= b ? a - b : a + (n - b);
}

constexpr u64 mul_mod(u64 a, u64 b, u64 n) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
}

u64 pow_mod(u64 base, u64 exp, u64 n) noexcept;

/// A residue class a mod n, stored canonically.
class Residue {
 public:
  Residue(std::int64_t value, u64 modulus);

  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return modulus_; }

  bool is_unit() const noexcept;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  u64 value_;
  u64 modulus_;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of n together with the arithmetic functions derived from it.
struct RingProfile {
  u64 n = 1;
  std::vector<PrimePower> factors;
  u64 phi = 1;         ///< Euler totient
  u64 carmichael = 1;  ///< exponent of U(Z_n)
  u64 psi = 1;         ///< halidon function
};

std::vector<PrimePower> factorize(u64 n);
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
u64 carmichael(u64 n);

/// gcd of (p - 1) over the prime divisors of odd n; 1 for even n and for n = 1.
u64 halidon_psi(u64 n);

RingProfile profile(u64 n);

/// Multiplicative inverse via extended Euclid. Throws Error{not_unit}.
Residue mod_inv(const Residue& a);
u64 mod_inv(u64 a, u64 n);

/// x in [1, n) with x^2 = 1, ascending.
std::vector<Residue> involutions(u64 n);
/// x in [0, n) with x^2 = x, ascending.
std::vector<Residue> idempotents(u64 n);
/// (x, x^-1) for every unit x, ascending in x.
std::vector<std::pair<Residue, Residue>> units(u64 n);

}  // namespace halidon
