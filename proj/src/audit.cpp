#include "halidon/audit.hpp"

#include <string>

#include "halidon/error.hpp"
#include "halidon/halidon.hpp"

namespace halidon {

namespace {

AuditReport start(const char* suite, u64 lo, u64 hi) {
  if (lo < 2 || hi < lo) throw Error(Errc::invalid_argument, "audit range must satisfy 2 <= lo <= hi");
  AuditReport r;
  r.suite = suite;
  r.lo = lo;
  r.hi = hi;
  return r;
}

std::string at(u64 n) { return "n=" + std::to_string(n) + ": "; }

}  // namespace

AuditReport conjecture_audit(u64 lo, u64 hi) {
  auto report = start("conjecture", lo, hi);
  for (u64 n = lo | 1; n <= hi; n += 2) {
    const auto d = detect(n, DetectOptions{0});
    const u64 psi = halidon_psi(n);
    ++report.checked;
    if (d.m_max != psi) {
      report.failures.push_back(at(n) + "m_max=" + std::to_string(d.m_max) +
                                " but psi=" + std::to_string(psi));
    }
  }
  return report;
}

AuditReport structure_audit(u64 lo, u64 hi) {
  auto report = start("structure", lo, hi);
  for (u64 n = lo; n <= hi; ++n) {
    const auto d = detect(n);
    const u64 m = d.m_max;
    ++report.checked;
    if (m > 1 && n % m != 1) {
      report.failures.push_back(at(n) + "n != 1 mod " + std::to_string(m));
    }
    const u64 zero_divisors = n - euler_phi(n) - 1;
    if (zero_divisors % m != 0) {
      report.failures.push_back(at(n) + std::to_string(m) + " does not divide " +
                                std::to_string(zero_divisors) + " zero divisors");
    }
    for (u64 k : divisors(m)) {
      if (k == 1) continue;
      for (u64 w : d.roots) {
        const u64 sub = pow_mod(w, m / k, n);
        if (!satisfies_divisor_criterion(n, k, sub)) {
          report.failures.push_back(at(n) + "w=" + std::to_string(w) + " does not restrict to index " +
                                    std::to_string(k));
        }
      }
    }
  }
  return report;
}

AuditReport agreement_audit(u64 lo, u64 hi, u64 max_index) {
  auto report = start("agreement", lo, hi);
  for (u64 n = lo; n <= hi; ++n) {
    for (u64 m = 1; m <= max_index; ++m) {
      for (u64 w = 0; w < n; ++w) {
        ++report.checked;
        if (satisfies_divisor_criterion(n, m, w) != satisfies_sum_condition(n, m, w)) {
          report.failures.push_back(at(n) + "criteria disagree at m=" + std::to_string(m) +
                                    ", w=" + std::to_string(w));
        }
      }
    }
  }
  return report;
}

}  // namespace halidon
