#include "halidon/maschke.hpp"

#include <numeric>
#include <string>

#include "halidon/error.hpp"
#include "halidon/group_ring.hpp"

namespace halidon {

namespace {

[[noreturn]] void bad_table(const std::string& why) {
  throw Error(Errc::invalid_table, "invalid group table: " + why);
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : table_(std::move(table)), identity_(identity) {
  const std::size_t k = table_.size();
  if (k == 0) bad_table("empty table");
  if (identity_ >= k) bad_table("identity index out of range");
  for (const auto& row : table_) {
    if (row.size() != k) bad_table("table is not square");
    std::vector<bool> seen(k, false);
    for (std::size_t x : row) {
      if (x >= k) bad_table("entry out of range");
      if (seen[x]) bad_table("row is not a permutation");
      seen[x] = true;
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<bool> seen(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      if (seen[table_[i][j]]) bad_table("column is not a permutation");
      seen[table_[i][j]] = true;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (table_[identity_][i] != i || table_[i][identity_] != i) {
      bad_table("identity row/column is not the identity");
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) bad_table("not associative");
      }
    }
  }
}

std::size_t GroupTable::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (table_[a][b] == identity_) return b;
  }
  bad_table("element without inverse");
}

GroupTable GroupTable::symmetric3() {
  // g1 = id, g2 = (12), g3 = (13), g4 = (23), g5 = (123), g6 = (132).
  return GroupTable({{0, 1, 2, 3, 4, 5},
                     {1, 0, 4, 5, 2, 3},
                     {2, 5, 0, 4, 3, 1},
                     {3, 4, 5, 0, 1, 2},
                     {4, 3, 1, 2, 5, 0},
                     {5, 2, 3, 1, 0, 4}},
                    0);
}

GroupTable GroupTable::cyclic(std::size_t m) {
  if (m == 0) bad_table("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
  }
  return GroupTable(std::move(t), 0);
}

Representation::Representation(GroupTable group, u64 modulus, std::vector<ModMatrix> matrices)
    : group_(std::move(group)), modulus_(modulus), matrices_(std::move(matrices)) {
  const std::size_t order = group_.order();
  if (matrices_.size() != order) {
    throw Error(Errc::invalid_argument, "one matrix per group element is required");
  }
  const std::size_t k = matrices_.front().rows();
  for (const auto& m : matrices_) {
    if (m.rows() != k || m.cols() != k || m.modulus() != modulus_) {
      throw Error(Errc::invalid_argument, "representation matrices must be k x k over Z_n");
    }
    if (std::gcd(determinant(m), modulus_) != 1) {
      throw Error(Errc::invalid_argument, "representation matrix is not invertible");
    }
  }
  if (!(matrices_[group_.identity()] == ModMatrix::identity(k, modulus_))) {
    throw Error(Errc::invalid_argument, "rho(identity) is not the identity matrix");
  }
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (!(matrices_[a] * matrices_[b] == matrices_[group_.product(a, b)])) {
        throw Error(Errc::invalid_argument, "rho is not a homomorphism");
      }
    }
  }
}

u64 Representation::character(std::size_t g) const {
  const auto& m = matrices_[g];
  u64 tr = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) tr = add_mod(tr, m(i, i), modulus_);
  return tr;
}

Projection::Projection(ModMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_idempotent()) throw Error(Errc::not_projection, "matrix is not idempotent");
}

Representation regular_rep_cyclic(const HalidonStructure& ring) {
  const std::size_t m = ring.m();
  const u64 n = ring.n();
  ModMatrix shift(m, m, n);
  for (std::size_t i = 0; i < m; ++i) shift(i, (i + m - 1) % m) = 1;
  std::vector<ModMatrix> powers{ModMatrix::identity(m, n)};
  for (std::size_t k = 1; k < m; ++k) powers.push_back(powers.back() * shift);
  return Representation(GroupTable::cyclic(m), n, std::move(powers));
}

std::vector<Projection> cyclic_decomposition(const HalidonStructure& ring) {
  const auto rep = regular_rep_cyclic(ring);
  const std::size_t m = ring.m();
  std::vector<Projection> out;
  out.reserve(m);
  for (std::size_t r = 1; r <= m; ++r) {
    const auto e = idempotent_from_spectrum(Spectrum::basis(ring, r));
    ModMatrix pi(m, m, ring.n());
    for (std::size_t k = 0; k < m; ++k) pi = pi + rep(k).scaled(e.coeffs()[k]);
    out.emplace_back(std::move(pi));
  }
  return out;
}

Representation permutation_rep(const GroupTable& group, u64 modulus) {
  const std::size_t k = group.order();
  std::vector<ModMatrix> mats;
  mats.reserve(k);
  for (std::size_t g = 0; g < k; ++g) {
    ModMatrix m(k, k, modulus);
    for (std::size_t h = 0; h < k; ++h) m(group.product(g, h), h) = 1 % modulus;
    mats.push_back(std::move(m));
  }
  return Representation(group, modulus, std::move(mats));
}

Projection average_projection(const Representation& rep, const Projection& phi) {
  const u64 n = rep.modulus();
  const std::size_t order = rep.group().order();
  if (phi.modulus() != n || phi.matrix().rows() != rep.degree()) {
    throw Error(Errc::mismatched_ring, "projection does not act on the representation space");
  }
  if (std::gcd(static_cast<u64>(order) % n, n) != 1) {
    throw Error(Errc::order_not_invertible, "|G| = " + std::to_string(order) +
                                                " is not invertible mod " + std::to_string(n));
  }
  ModMatrix sum(rep.degree(), rep.degree(), n);
  for (std::size_t g = 0; g < order; ++g) {
    sum = sum + rep(rep.group().inverse(g)) * phi.matrix() * rep(g);
  }
  return Projection(sum.scaled(mod_inv(order % n, n)));
}

ModuleSplit split_module(const Representation& rep, const ModMatrix& tau) {
  if (tau.rows() != rep.degree() || tau.modulus() != rep.modulus()) {
    throw Error(Errc::mismatched_ring, "tau does not act on the representation space");
  }
  if (!tau.is_idempotent()) throw Error(Errc::not_projection, "tau is not idempotent");
  const auto complement = ModMatrix::identity(tau.rows(), tau.modulus()) - tau;
  return {column_basis(tau), column_basis(complement)};
}

bool is_invariant_span(const Representation& rep, const std::vector<ModVector>& vectors) {
  const Span span(vectors, rep.degree(), rep.modulus());
  for (const auto& m : rep.matrices()) {
    for (const auto& v : vectors) {
      if (!span.contains(m.apply(v))) return false;
    }
  }
  return true;
}

bool is_equivariant(const Representation& rep, const ModMatrix& tau) {
  for (const auto& m : rep.matrices()) {
    if (!(m * tau == tau * m)) return false;
  }
  return true;
}

}  // namespace halidon
