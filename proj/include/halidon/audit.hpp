#pragma once

// Batch checks of the halidon structure theory over ranges of moduli. Each
// suite reports violations instead of stopping at the first one.

#include <string>
#include <vector>

#include "halidon/ring_core.hpp"

namespace halidon {

struct AuditReport {
  std::string suite;
  u64 lo = 0;
  u64 hi = 0;
  u64 checked = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// detect(n).m_max == halidon_psi(n) for odd n in [lo, hi].
AuditReport conjecture_audit(u64 lo, u64 hi);

/// For n in [lo, hi] with maximal index m: n = 1 mod m when m > 1, m divides the
/// number of nonzero zero divisors, and (n, k, w^{m/k}) is halidon for every
/// root w and every divisor k > 1 of m.
AuditReport structure_audit(u64 lo, u64 hi);

/// Divisor criterion and sum condition agree for every n in [lo, hi],
/// m in [1, max_index] and omega in [0, n).
AuditReport agreement_audit(u64 lo, u64 hi, u64 max_index);

}  // namespace halidon
