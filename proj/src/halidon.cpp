#include "halidon/halidon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "halidon/error.hpp"

namespace halidon {

namespace {

std::vector<u64> proper_divisors(u64 m) {
  auto d = divisors(m);
  d.pop_back();
  return d;
}

bool root_test(u64 n, u64 m, u64 omega, const std::vector<u64>& proper) {
  if (pow_mod(omega, m, n) != 1) return false;
  for (u64 d : proper) {
    const u64 t = sub_mod(pow_mod(omega, d, n), 1, n);
    if (std::gcd(t, n) != 1) return false;
  }
  return true;
}

void check_args(u64 n, u64 m, u64 omega) {
  if (n < 2) throw Error(Errc::invalid_argument, "modulus must be >= 2");
  if (m < 1) throw Error(Errc::invalid_argument, "index must be >= 1");
  if (omega >= n) throw Error(Errc::invalid_argument, "omega must lie in [0, n)");
}

std::vector<u64> scan_roots(u64 n, u64 m, bool first_only) {
  std::vector<u64> roots;
  if (std::gcd(m, n) != 1) return roots;
  const auto proper = proper_divisors(m);
  for (u64 w = 1; w < n; ++w) {
    if (std::gcd(w, n) != 1) continue;
    if (!root_test(n, m, w, proper)) continue;
    roots.push_back(w);
    if (first_only) break;
  }
  return roots;
}

}  // namespace

bool satisfies_divisor_criterion(u64 n, u64 m, u64 omega) {
  check_args(n, m, omega);
  if (std::gcd(m, n) != 1) return false;
  return root_test(n, m, omega, proper_divisors(m));
}

bool satisfies_sum_condition(u64 n, u64 m, u64 omega) {
  check_args(n, m, omega);
  if (std::gcd(m, n) != 1) return false;
  // m must be the least positive exponent with omega^m = 1.
  u64 p = 1;
  for (u64 k = 1; k <= m; ++k) {
    p = mul_mod(p, omega, n);
    if (p == 1 && k < m) return false;
  }
  if (p != 1) return false;
  for (u64 r = 1; r < m; ++r) {
    const u64 step = pow_mod(omega, r, n);
    u64 term = 1, sum = 0;
    for (u64 k = 0; k < m; ++k) {
      sum = add_mod(sum, term, n);
      term = mul_mod(term, step, n);
    }
    if (sum != 0) return false;
  }
  return true;
}

bool is_primitive_root(u64 n, u64 m, u64 omega) {
  const bool fast = satisfies_divisor_criterion(n, m, omega);
  const bool slow = satisfies_sum_condition(n, m, omega);
  if (fast != slow) {
    throw std::logic_error("primitive root criteria disagree at (" + std::to_string(n) +
                           ", " + std::to_string(m) + ", " + std::to_string(omega) + ")");
  }
  return fast;
}

std::vector<u64> primitive_roots(u64 n, u64 m) {
  check_args(n, m, 0);
  return scan_roots(n, m, false);
}

Detection detect(u64 n, const DetectOptions& options) {
  if (n < 2) throw Error(Errc::invalid_argument, "detect: n must be >= 2");
  Detection out;
  out.n = n;
  // omega - 1 is even, hence never a unit, whenever n is even and m > 1.
  if (n % 2 == 0) {
    out.roots = {1};
    return out;
  }
  const bool complete = n <= options.complete_limit;
  auto candidates = divisors(carmichael(n));
  std::reverse(candidates.begin(), candidates.end());
  for (u64 m : candidates) {
    if (std::gcd(m, n) != 1) continue;
    auto roots = scan_roots(n, m, !complete);
    if (roots.empty()) continue;
    out.m_max = m;
    out.roots = std::move(roots);
    out.complete = complete;
    return out;
  }
  // m = 1 always divides carmichael(n), so this is unreachable.
  throw std::logic_error("detect: no index found");
}

HalidonStructure::HalidonStructure(u64 n, u64 m, u64 omega)
    : n_(n), m_(m), omega_(omega), m_inv_(mod_inv(m % n, n)), omega_inv_(mod_inv(omega, n)) {
  powers_.reserve(m);
  u64 p = 1;
  for (u64 k = 0; k < m; ++k) {
    powers_.push_back(p);
    p = mul_mod(p, omega, n);
  }
}

HalidonStructure HalidonStructure::certify(u64 n, u64 m, u64 omega) {
  check_args(n, m, omega);
  if (!satisfies_divisor_criterion(n, m, omega)) {
    throw Error(Errc::not_halidon, std::to_string(omega) + " is not a primitive " +
                                       std::to_string(m) + "-th root of unity mod " +
                                       std::to_string(n));
  }
  return HalidonStructure(n, m, omega);
}

HalidonStructure HalidonStructure::canonical(u64 n, u64 m) {
  check_args(n, m, 0);
  const auto roots = scan_roots(n, m, true);
  if (roots.empty()) {
    throw Error(Errc::not_halidon,
                "Z_" + std::to_string(n) + " has no primitive " + std::to_string(m) + "-th root");
  }
  return HalidonStructure(n, m, roots.front());
}

HalidonStructure HalidonStructure::maximal(u64 n) {
  const auto d = detect(n, DetectOptions{0});
  return HalidonStructure(n, d.m_max, d.roots.front());
}

u64 HalidonStructure::omega_pow(std::int64_t k) const noexcept {
  const auto sm = static_cast<std::int64_t>(m_);
  return powers_[static_cast<std::size_t>(((k % sm) + sm) % sm)];
}

std::string HalidonStructure::describe() const {
  return "Z_" + std::to_string(n_) + " (m=" + std::to_string(m_) +
         ", w=" + std::to_string(omega_) + ")";
}

u64 aut_quadratic(u64 n) {
  if (n < 3) throw Error(Errc::invalid_argument, "aut_quadratic: n must be >= 3");
  if (n % 2 == 0) {
    throw Error(Errc::even_modulus, "aut_quadratic requires an odd modulus, got " +
                                        std::to_string(n));
  }
  return involutions(n).size();
}

bool rigidity_check(u64 m) {
  if (m < 1) throw Error(Errc::invalid_argument, "rigidity_check: m must be >= 1");
  // Compare prime valuations of m! and phi(m); phi(m) <= m, so it divides m!.
  const auto legendre = [m](u64 p) {
    u64 v = 0;
    for (u64 q = p; q <= m; q *= p) {
      v += m / q;
      if (q > m / p) break;
    }
    return v;
  };
  const auto phi_factors = factorize(euler_phi(m));
  const auto v_phi = [&phi_factors](u64 p) -> u64 {
    for (const auto& f : phi_factors) {
      if (f.prime == p) return f.exponent;
    }
    return 0;
  };
  for (u64 p = 3; p <= m; p += 2) {
    const auto fp = factorize(p);
    if (fp.size() != 1 || fp.front().exponent != 1) continue;
    if (legendre(p) != v_phi(p)) return false;
  }
  return legendre(2) > v_phi(2);
}

}  // namespace halidon
