#include "halidon/ring_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "halidon/error.hpp"

namespace halidon {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_unit: return "NotUnit";
    case Errc::not_halidon: return "NotHalidon";
    case Errc::even_modulus: return "EvenModulus";
    case Errc::mismatched_ring: return "MismatchedRing";
    case Errc::not_idempotent_spectrum: return "NotIdempotentSpectrum";
    case Errc::too_large: return "TooLarge";
    case Errc::reconstruction_mismatch: return "ReconstructionMismatch";
    case Errc::order_not_invertible: return "OrderNotInvertible";
    case Errc::invalid_table: return "InvalidTable";
    case Errc::not_projection: return "NotProjection";
    case Errc::not_invertible: return "NotInvertible";
  }
  return "Unknown";
}

u64 pow_mod(u64 base, u64 exp, u64 n) noexcept {
  if (n == 1) return 0;
  u64 result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

Residue::Residue(std::int64_t value, u64 modulus) : value_(0), modulus_(modulus) {
  if (modulus == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
  value_ = reduce(value, modulus);
}

bool Residue::is_unit() const noexcept { return std::gcd(value_, modulus_) == 1; }

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cannot factor 0");
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

u64 ipow(u64 p, unsigned e) {
  u64 r = 1;
  while (e-- > 0) r *= p;
  return r;
}

u64 phi_from(const std::vector<PrimePower>& factors) {
  u64 phi = 1;
  for (const auto& [p, e] : factors) phi *= ipow(p, e - 1) * (p - 1);
  return phi;
}

u64 carmichael_from(const std::vector<PrimePower>& factors) {
  u64 lam = 1;
  for (const auto& [p, e] : factors) {
    u64 part;
    if (p == 2) {
      part = e == 1 ? 1 : e == 2 ? 2 : ipow(2, e - 2);
    } else {
      part = ipow(p, e - 1) * (p - 1);
    }
    lam = std::lcm(lam, part);
  }
  return lam;
}

u64 psi_from(u64 n, const std::vector<PrimePower>& factors) {
  if (n == 1 || n % 2 == 0) return 1;
  u64 g = 0;
  for (const auto& f : factors) g = std::gcd(g, f.prime - 1);
  return g;
}

}  // namespace

u64 euler_phi(u64 n) { return phi_from(factorize(n)); }

u64 carmichael(u64 n) { return carmichael_from(factorize(n)); }

u64 halidon_psi(u64 n) { return psi_from(n, factorize(n)); }

RingProfile profile(u64 n) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be >= 1");
  RingProfile rp;
  rp.n = n;
  rp.factors = factorize(n);
  rp.phi = phi_from(rp.factors);
  rp.carmichael = carmichael_from(rp.factors);
  rp.psi = psi_from(n, rp.factors);
  return rp;
}

u64 mod_inv(u64 a, u64 n) {
  if (n == 1) return 0;
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  __int128 old_r = static_cast<__int128>(a % n), r = n;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw Error(Errc::not_unit,
                std::to_string(a % n) + " is not a unit mod " + std::to_string(n));
  }
  const __int128 sn = n;
  return static_cast<u64>(((old_s % sn) + sn) % sn);
}

Residue mod_inv(const Residue& a) {
  return Residue(static_cast<std::int64_t>(mod_inv(a.value(), a.modulus())), a.modulus());
}

std::vector<Residue> involutions(u64 n) {
  if (n < 2) throw Error(Errc::invalid_argument, "involutions: n must be >= 2");
  std::vector<Residue> out;
  for (u64 x = 1; x < n; ++x) {
    if (mul_mod(x, x, n) == 1) out.emplace_back(static_cast<std::int64_t>(x), n);
  }
  return out;
}

std::vector<Residue> idempotents(u64 n) {
  if (n < 2) throw Error(Errc::invalid_argument, "idempotents: n must be >= 2");
  std::vector<Residue> out;
  for (u64 x = 0; x < n; ++x) {
    if (mul_mod(x, x, n) == x) out.emplace_back(static_cast<std::int64_t>(x), n);
  }
  return out;
}

std::vector<std::pair<Residue, Residue>> units(u64 n) {
  if (n < 2) throw Error(Errc::invalid_argument, "units: n must be >= 2");
  std::vector<std::pair<Residue, Residue>> out;
  for (u64 x = 1; x < n; ++x) {
    if (std::gcd(x, n) != 1) continue;
    out.emplace_back(Residue(static_cast<std::int64_t>(x), n),
                     Residue(static_cast<std::int64_t>(mod_inv(x, n)), n));
  }
  return out;
}

}  // namespace halidon
