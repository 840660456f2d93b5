#include "halidon/transform.hpp"

#include <numeric>
#include <string>

#include "halidon/error.hpp"

namespace halidon {

namespace {

std::vector<u64> reduced(const std::vector<std::int64_t>& v, u64 n) {
  std::vector<u64> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(reduce(x, n));
  return out;
}

void check_length(std::size_t got, const HalidonStructure& ring) {
  if (got != ring.m()) {
    throw Error(Errc::invalid_argument, "vector must have length m = " + std::to_string(ring.m()) +
                                            ", got " + std::to_string(got));
  }
}

void require_same_ring(const HalidonStructure& a, const HalidonStructure& b) {
  if (!(a == b)) {
    throw Error(Errc::mismatched_ring, "operands live in " + a.describe() + " and " + b.describe());
  }
}

std::vector<u64> add_vec(const std::vector<u64>& a, const std::vector<u64>& b, u64 n) {
  std::vector<u64> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = add_mod(a[k], b[k], n);
  return out;
}

std::vector<u64> scale_vec(const std::vector<u64>& a, u64 c, u64 n) {
  std::vector<u64> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = mul_mod(a[k], c % n, n);
  return out;
}

ModMatrix vandermonde_with(const HalidonStructure& ring, bool conjugate) {
  const std::size_t m = ring.m();
  ModMatrix phi(m, m, ring.n());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto e = static_cast<std::int64_t>(i * j);
      phi(i, j) = ring.omega_pow(conjugate ? -e : e);
    }
  }
  return phi;
}

}  // namespace

CoeffVector::CoeffVector(HalidonStructure ring, std::vector<std::int64_t> entries)
    : CoeffVector(ring, reduced(entries, ring.n())) {}

CoeffVector::CoeffVector(HalidonStructure ring, std::vector<u64> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  check_length(entries_.size(), ring_);
  for (auto& x : entries_) x %= ring_.n();
}

CoeffVector CoeffVector::zero(const HalidonStructure& ring) {
  return {ring, std::vector<u64>(ring.m(), 0)};
}

CoeffVector CoeffVector::unit_vector(const HalidonStructure& ring, std::size_t i) {
  if (i < 1 || i > ring.m()) throw Error(Errc::invalid_argument, "unit vector index out of range");
  std::vector<u64> v(ring.m(), 0);
  v[i - 1] = 1;
  return {ring, std::move(v)};
}

DftVector::DftVector(HalidonStructure ring, std::vector<std::int64_t> entries)
    : DftVector(ring, reduced(entries, ring.n())) {}

DftVector::DftVector(HalidonStructure ring, std::vector<u64> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  check_length(entries_.size(), ring_);
  for (auto& x : entries_) x %= ring_.n();
}

std::vector<u64> evaluate_at_powers(const std::vector<u64>& f, u64 root, u64 n) {
  const std::size_t m = f.size();
  std::vector<u64> out(m, 0);
  u64 point = 1;  // root^j
  for (std::size_t j = 0; j < m; ++j) {
    // Horner at the point root^j.
    u64 acc = 0;
    for (std::size_t k = m; k-- > 0;) acc = add_mod(mul_mod(acc, point, n), f[k], n);
    out[j] = acc;
    point = mul_mod(point, root, n);
  }
  return out;
}

DftVector dft(const CoeffVector& f) {
  const auto& ring = f.ring();
  return {ring, evaluate_at_powers(f.entries(), ring.omega(), ring.n())};
}

CoeffVector idft(const DftVector& F) {
  const auto& ring = F.ring();
  auto f = evaluate_at_powers(F.entries(), ring.omega_inv(), ring.n());
  return {ring, scale_vec(f, ring.m_inv(), ring.n())};
}

CoeffVector add(const CoeffVector& a, const CoeffVector& b) {
  require_same_ring(a.ring(), b.ring());
  return {a.ring(), add_vec(a.entries(), b.entries(), a.ring().n())};
}

CoeffVector scale(const CoeffVector& a, u64 c) {
  return {a.ring(), scale_vec(a.entries(), c, a.ring().n())};
}

DftVector add(const DftVector& a, const DftVector& b) {
  require_same_ring(a.ring(), b.ring());
  return {a.ring(), add_vec(a.entries(), b.entries(), a.ring().n())};
}

DftVector scale(const DftVector& a, u64 c) {
  return {a.ring(), scale_vec(a.entries(), c, a.ring().n())};
}

DftVector pointwise_product(const DftVector& a, const DftVector& b) {
  require_same_ring(a.ring(), b.ring());
  const u64 n = a.ring().n();
  std::vector<u64> out(a.entries().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mul_mod(a.entries()[k], b.entries()[k], n);
  return {a.ring(), std::move(out)};
}

CoeffVector convolve(const CoeffVector& f, const CoeffVector& g, ConvolutionMode mode) {
  require_same_ring(f.ring(), g.ring());
  if (mode == ConvolutionMode::spectral) return idft(pointwise_product(dft(f), dft(g)));

  const u64 n = f.ring().n();
  const std::size_t m = f.entries().size();
  std::vector<u64> h(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      auto& slot = h[(j + k) % m];
      slot = add_mod(slot, mul_mod(f.entries()[j], g.entries()[k], n), n);
    }
  }
  return {f.ring(), std::move(h)};
}

ModMatrix vandermonde(const HalidonStructure& ring) { return vandermonde_with(ring, false); }

ModMatrix vandermonde_conjugate(const HalidonStructure& ring) {
  return vandermonde_with(ring, true);
}

CirculantMatrix circulant(const CoeffVector& u) {
  const auto& ring = u.ring();
  const std::size_t m = ring.m();
  ModMatrix c(m, m, ring.n());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) c(i, j) = u.entries()[(j + m - i) % m];
  }

  const auto spectrum = dft(u);
  ModMatrix lambda(m, m, ring.n());
  for (std::size_t k = 0; k < m; ++k) lambda(k, k) = spectrum.entries()[k];
  const ModMatrix rebuilt =
      (vandermonde(ring) * lambda * vandermonde_conjugate(ring)).scaled(ring.m_inv());
  if (!(rebuilt == c)) {
    throw Error(Errc::reconstruction_mismatch,
                "spectral reconstruction of the circulant failed over " + ring.describe());
  }
  return {u, std::move(c)};
}

u64 bilinear_eval(const CoeffVector& u, const CoeffVector& x, const CoeffVector& y) {
  require_same_ring(u.ring(), x.ring());
  require_same_ring(u.ring(), y.ring());
  const u64 n = u.ring().n();
  const std::size_t m = u.entries().size();
  u64 acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x.entries()[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const u64 cij = u.entries()[(j + m - i) % m];
      acc = add_mod(acc, mul_mod(mul_mod(x.entries()[i], cij, n), y.entries()[j], n), n);
    }
  }
  return acc;
}

CoeffVector s_basis_vector(const HalidonStructure& ring, std::size_t i) {
  const auto m = static_cast<std::int64_t>(ring.m());
  if (i < 1 || i > ring.m()) throw Error(Errc::invalid_argument, "s-basis index out of range");
  const std::int64_t base = m - static_cast<std::int64_t>(i) + 1;
  std::vector<u64> s(ring.m());
  for (std::int64_t k = 0; k < m; ++k) s[static_cast<std::size_t>(k)] = ring.omega_pow(base * k);
  return {ring, std::move(s)};
}

ModMatrix gram_s_basis(const CoeffVector& u) {
  const auto& ring = u.ring();
  const std::size_t m = ring.m();
  std::vector<CoeffVector> s;
  s.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) s.push_back(s_basis_vector(ring, i));
  ModMatrix g(m, m, ring.n());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g(i, j) = bilinear_eval(u, s[i], s[j]);
  }
  return g;
}

ModMatrix gram_closed_form(const CoeffVector& u) {
  const auto& ring = u.ring();
  const std::size_t m = ring.m();
  const u64 n = ring.n();
  const auto values = evaluate_at_powers(u.entries(), ring.omega(), n);  // at w^{i-1}
  ModMatrix g(m, m, n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if ((i + j) % m != 2 % m) continue;
      g(i - 1, j - 1) = mul_mod(m % n, values[i - 1], n);
    }
  }
  return g;
}

bool is_nondegenerate(const CoeffVector& u) {
  const auto& ring = u.ring();
  const std::size_t m = ring.m();
  const auto gram = gram_s_basis(u);
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t j = (2 * m + 2 - i - 1) % m + 1;  // i + j = 2 mod m
    if (std::gcd(gram(i - 1, j - 1), ring.n()) != 1) return false;
  }
  return true;
}

}  // namespace halidon
