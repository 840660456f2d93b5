#include "halidon/group_ring.hpp"

#include <numeric>
#include <string>

#include "halidon/error.hpp"
#include "halidon/matrix.hpp"

namespace halidon {

namespace {

std::vector<u64> reduced(const std::vector<std::int64_t>& v, u64 n) {
  std::vector<u64> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(reduce(x, n));
  return out;
}

void check_length(std::size_t got, const HalidonStructure& ring, const char* what) {
  if (got != ring.m()) {
    throw Error(Errc::invalid_argument, std::string(what) + " must have length m = " +
                                            std::to_string(ring.m()) + ", got " +
                                            std::to_string(got));
  }
}

void require_same_ring(const HalidonStructure& a, const HalidonStructure& b) {
  if (!(a == b)) {
    throw Error(Errc::mismatched_ring, "operands live in " + a.describe() + " and " + b.describe());
  }
}

// Checked u64 power; returns false on overflow.
bool checked_pow(u64 base, u64 exp, u64& out) {
  out = 1;
  for (u64 k = 0; k < exp; ++k) {
    if (base != 0 && out > UINT64_MAX / base) return false;
    out *= base;
  }
  return true;
}

}  // namespace

GroupRingElement::GroupRingElement(HalidonStructure ring, std::vector<std::int64_t> coeffs)
    : GroupRingElement(ring, reduced(coeffs, ring.n())) {}

GroupRingElement::GroupRingElement(HalidonStructure ring, std::vector<u64> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  check_length(coeffs_.size(), ring_, "coefficient vector");
  for (auto& c : coeffs_) c %= ring_.n();
}

GroupRingElement GroupRingElement::zero(const HalidonStructure& ring) {
  return {ring, std::vector<u64>(ring.m(), 0)};
}

GroupRingElement GroupRingElement::identity(const HalidonStructure& ring) {
  return generator_power(ring, 0);
}

GroupRingElement GroupRingElement::generator_power(const HalidonStructure& ring, std::int64_t k) {
  std::vector<u64> c(ring.m(), 0);
  c[static_cast<std::size_t>(wrap_index(k + 1, static_cast<std::int64_t>(ring.m())) - 1)] = 1;
  return {ring, std::move(c)};
}

u64 GroupRingElement::coeff(std::int64_t i) const noexcept {
  return coeffs_[static_cast<std::size_t>(wrap_index(i, static_cast<std::int64_t>(coeffs_.size())) - 1)];
}

Spectrum::Spectrum(HalidonStructure ring, std::vector<std::int64_t> values)
    : Spectrum(ring, reduced(values, ring.n())) {}

Spectrum::Spectrum(HalidonStructure ring, std::vector<u64> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
  check_length(values_.size(), ring_, "spectrum");
  for (auto& v : values_) v %= ring_.n();
}

Spectrum Spectrum::basis(const HalidonStructure& ring, std::size_t r) {
  if (r < 1 || r > ring.m()) throw Error(Errc::invalid_argument, "basis index out of range");
  std::vector<u64> v(ring.m(), 0);
  v[r - 1] = 1;
  return {ring, std::move(v)};
}

Spectrum lambda_transform(const GroupRingElement& u) {
  const auto& ring = u.ring();
  const u64 n = ring.n();
  const auto m = static_cast<std::int64_t>(ring.m());
  std::vector<u64> lambda(ring.m(), 0);
  for (std::int64_t r = 1; r <= m; ++r) {
    u64 acc = 0;
    for (std::int64_t i = 1; i <= m; ++i) {
      acc = add_mod(acc, mul_mod(u.coeff(m - i + 2), ring.omega_pow((i - 1) * (r - 1)), n), n);
    }
    lambda[static_cast<std::size_t>(r - 1)] = acc;
  }
  return {ring, std::move(lambda)};
}

GroupRingElement lambda_reconstruct(const Spectrum& s) {
  const auto& ring = s.ring();
  const u64 n = ring.n();
  const auto m = static_cast<std::int64_t>(ring.m());
  std::vector<u64> alpha(ring.m(), 0);
  for (std::int64_t r = 1; r <= m; ++r) {
    u64 acc = 0;
    for (std::int64_t j = 1; j <= m; ++j) {
      acc = add_mod(acc, mul_mod(s.values()[static_cast<std::size_t>(j - 1)],
                                 ring.omega_pow((j - 1) * (r - 1)), n), n);
    }
    alpha[static_cast<std::size_t>(r - 1)] = mul_mod(ring.m_inv(), acc, n);
  }
  return {ring, std::move(alpha)};
}

GroupRingElement add(const GroupRingElement& u, const GroupRingElement& v) {
  require_same_ring(u.ring(), v.ring());
  const u64 n = u.ring().n();
  std::vector<u64> c(u.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = add_mod(u.coeffs()[k], v.coeffs()[k], n);
  return {u.ring(), std::move(c)};
}

GroupRingElement multiply(const GroupRingElement& u, const GroupRingElement& v) {
  require_same_ring(u.ring(), v.ring());
  const u64 n = u.ring().n();
  const std::size_t m = u.coeffs().size();
  std::vector<u64> c(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (u.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      auto& slot = c[(i + j) % m];
      slot = add_mod(slot, mul_mod(u.coeffs()[i], v.coeffs()[j], n), n);
    }
  }
  return {u.ring(), std::move(c)};
}

Spectrum pointwise_product(const Spectrum& a, const Spectrum& b) {
  require_same_ring(a.ring(), b.ring());
  const u64 n = a.ring().n();
  std::vector<u64> v(a.values().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = mul_mod(a.values()[k], b.values()[k], n);
  return {a.ring(), std::move(v)};
}

GroupRingElement inverse_element(const GroupRingElement& u) {
  const auto s = lambda_transform(u);
  const u64 n = u.ring().n();
  std::vector<u64> inv(s.values().size());
  for (std::size_t r = 0; r < inv.size(); ++r) {
    const u64 x = s.values()[r];
    if (std::gcd(x, n) != 1) {
      throw Error(Errc::not_unit, "not a unit: lambda[" + std::to_string(r + 1) +
                                      "] = " + std::to_string(x) + " is a zero divisor mod " +
                                      std::to_string(n));
    }
    inv[r] = mod_inv(x, n);
  }
  return lambda_reconstruct(Spectrum(u.ring(), std::move(inv)));
}

GroupRingElement idempotent_from_spectrum(const Spectrum& s) {
  const u64 n = s.ring().n();
  for (std::size_t r = 0; r < s.values().size(); ++r) {
    const u64 x = s.values()[r];
    if (mul_mod(x, x, n) != x) {
      throw Error(Errc::not_idempotent_spectrum, "lambda[" + std::to_string(r + 1) + "] = " +
                                                     std::to_string(x) +
                                                     " is not an idempotent mod " +
                                                     std::to_string(n));
    }
  }
  return lambda_reconstruct(s);
}

Census census(const HalidonStructure& ring, CensusMode mode) {
  const u64 n = ring.n();
  const u64 m = ring.m();
  if (mode == CensusMode::formula) {
    Census c;
    if (!checked_pow(euler_phi(n), m, c.units) ||
        !checked_pow(idempotents(n).size(), m, c.idempotents)) {
      throw Error(Errc::too_large, "census counts overflow 64 bits");
    }
    return c;
  }

  u64 total = 0;
  if (!checked_pow(n, m, total) || total > kCensusEnumerationLimit) {
    throw Error(Errc::too_large, "brute-force census needs n^m <= " +
                                     std::to_string(kCensusEnumerationLimit));
  }
  Census c;
  std::vector<u64> coeffs(m, 0);
  ModMatrix mult(m, m, n);
  for (u64 index = 0; index < total; ++index) {
    u64 rest = index;
    for (std::size_t k = 0; k < m; ++k) {
      coeffs[k] = rest % n;
      rest /= n;
    }
    // Column j of the multiplication matrix is u * g^j.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) mult(i, j) = coeffs[(i + m - j) % m];
    }
    if (std::gcd(determinant(mult), n) == 1) ++c.units;
    const GroupRingElement u(ring, coeffs);
    if (multiply(u, u) == u) ++c.idempotents;
  }
  return c;
}

}  // namespace halidon
