#include "halidon/ring_core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "halidon/error.hpp"
#include "test_util.hpp"

using namespace halidon;

namespace {

std::vector<u64> values(const std::vector<Residue>& rs) {
  std::vector<u64> out;
  for (const auto& r : rs) out.push_back(r.value());
  return out;
}

// Brute-force oracles: direct definitions, no factorization.
u64 brute_phi(u64 n) {
  u64 c = 0;
  for (u64 x = 1; x <= n; ++x) c += std::gcd(x, n) == 1;
  return c;
}

u64 brute_carmichael(u64 n) {
  for (u64 e = 1;; ++e) {
    bool all = true;
    for (u64 x = 1; x < n && all; ++x) {
      if (std::gcd(x, n) == 1 && fixtures::naive_pow(x, e, n) != 1) all = false;
    }
    if (all) return e;
  }
}

}  // namespace

TEST(RingCore, ProfileMatchesWorkedModuli) {
  EXPECT_EQ(profile(65).psi, 4u);
  EXPECT_EQ(profile(2000).psi, 1u);
  EXPECT_EQ(profile(2501).psi, 20u);
  EXPECT_EQ(profile(49).psi, 6u);
  const auto p1 = profile(1);
  EXPECT_EQ(p1.phi, 1u);
  EXPECT_EQ(p1.carmichael, 1u);
  EXPECT_EQ(p1.psi, 1u);
  EXPECT_TRUE(p1.factors.empty());
}

TEST(RingCore, ProfileFactorsAndFunctionsAgreeWithBruteForce) {
  for (u64 n = 1; n <= 400; ++n) {
    const auto p = profile(n);
    u64 prod = 1;
    for (const auto& f : p.factors) {
      for (unsigned k = 0; k < f.exponent; ++k) prod *= f.prime;
    }
    ASSERT_EQ(prod, n);
    ASSERT_EQ(p.phi, brute_phi(n)) << n;
    if (n >= 2) {
      ASSERT_EQ(p.carmichael, brute_carmichael(n)) << n;
    }
  }
}

TEST(RingCore, PsiDividesCarmichael) {
  for (u64 n = 1; n <= 20000; ++n) {
    const auto p = profile(n);
    ASSERT_EQ(p.carmichael % p.psi, 0u) << n;
    if (n % 2 == 0) {
      ASSERT_EQ(p.psi, 1u);
    }
  }
}

TEST(RingCore, PsiIgnoresExponents) {
  for (u64 n = 3; n <= 99; n += 2) {
    u64 nk = n;
    for (int k = 1; k <= 3; ++k, nk *= n) ASSERT_EQ(halidon_psi(nk), halidon_psi(n)) << n << "^" << k;
  }
  // psi(p1 p2 ... ps) = psi(p1^d1 ... ps^ds)
  EXPECT_EQ(halidon_psi(5 * 13), halidon_psi(125 * 13 * 13));
  EXPECT_EQ(halidon_psi(41 * 61), halidon_psi(41 * 41 * 61));
  EXPECT_EQ(halidon_psi(3 * 5 * 7), halidon_psi(9 * 5 * 343));
}

TEST(RingCore, ModInverse) {
  EXPECT_EQ(mod_inv(Residue(4, 25)).value(), 19u);
  EXPECT_EQ(mod_inv(Residue(6, 49)).value(), 41u);
  for (u64 n : {2u, 7u, 100u, 100001u}) EXPECT_EQ(mod_inv(Residue(1, n)).value(), 1u);
  EXPECT_EQ(mod_inv(Residue(-1, 25)).value(), 24u);
}

TEST(RingCore, ModInverseRejectsNonUnits) {
  try {
    mod_inv(Residue(5, 25));
    FAIL() << "expected NotUnit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_unit);
  }
  EXPECT_THROW(mod_inv(Residue(0, 7)), Error);
}

TEST(RingCore, ModInverseIsAnInvolution) {
  for (int trial = 0; trial < 2000; ++trial) {
    const u64 n = fixtures::uniform(2, 1'000'000'000'000ULL);
    const u64 a = fixtures::uniform(1, n - 1);
    if (std::gcd(a, n) != 1) continue;
    const Residue r(static_cast<std::int64_t>(a), n);
    const auto inv = mod_inv(r);
    ASSERT_EQ(mul_mod(a, inv.value(), n), 1u);
    ASSERT_EQ(mod_inv(inv), r);
  }
}

TEST(RingCore, Involutions) {
  EXPECT_EQ(values(involutions(25)), (std::vector<u64>{1, 24}));
  EXPECT_EQ(values(involutions(2)), (std::vector<u64>{1}));
  // 105 = 3 * 5 * 7: one sign choice per odd prime.
  EXPECT_EQ(values(involutions(105)), (std::vector<u64>{1, 29, 34, 41, 64, 71, 76, 104}));
}

TEST(RingCore, Idempotents) {
  EXPECT_EQ(values(idempotents(25)), (std::vector<u64>{0, 1}));
  EXPECT_EQ(values(idempotents(49)), (std::vector<u64>{0, 1}));
  const auto e65 = values(idempotents(65));
  EXPECT_EQ(e65, (std::vector<u64>{0, 1, 26, 40}));
}

TEST(RingCore, Units) {
  const auto u25 = units(25);
  EXPECT_EQ(u25.size(), 20u);
  const auto has = [&](u64 x, u64 y) {
    return std::any_of(u25.begin(), u25.end(),
                       [&](const auto& p) { return p.first.value() == x && p.second.value() == y; });
  };
  EXPECT_TRUE(has(2, 13));
  EXPECT_TRUE(has(3, 17));
  EXPECT_TRUE(has(4, 19));
  const auto u3 = units(3);
  ASSERT_EQ(u3.size(), 2u);
  EXPECT_EQ(u3[0].second.value(), 1u);
  EXPECT_EQ(u3[1].second.value(), 2u);
}

TEST(RingCore, UnitsIdempotentsInvolutionsAreConsistent) {
  for (u64 n = 2; n <= 10000; ++n) {
    const auto us = units(n);
    ASSERT_EQ(us.size(), euler_phi(n));
    for (const auto& [x, y] : us) ASSERT_EQ(mul_mod(x.value(), y.value(), n), 1u);
    const auto inv = involutions(n);
    for (const auto& x : inv) {
      ASSERT_EQ(std::gcd(x.value(), n), 1u);
      const auto it = std::lower_bound(us.begin(), us.end(), x,
                                       [](const auto& p, const Residue& r) { return p.first < r; });
      ASSERT_TRUE(it != us.end() && it->first == x && it->second == x);
    }
    const auto idem = idempotents(n);
    ASSERT_EQ(idem.size(), u64{1} << factorize(n).size()) << n;
    for (const auto& e : idem) {
      const Residue complement(1 - static_cast<std::int64_t>(e.value()), n);
      ASSERT_TRUE(std::binary_search(idem.begin(), idem.end(), complement)) << n;
    }
  }
}

TEST(RingCore, PowModMatchesNaive) {
  for (int trial = 0; trial < 500; ++trial) {
    const u64 n = fixtures::uniform(2, 5000);
    const u64 b = fixtures::uniform(0, n - 1);
    const u64 e = fixtures::uniform(0, 300);
    ASSERT_EQ(pow_mod(b, e, n), fixtures::naive_pow(b, e, n));
  }
}

TEST(RingCore, Divisors) {
  EXPECT_EQ(divisors(1), (std::vector<u64>{1}));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(9090).size(), 24u);
}
