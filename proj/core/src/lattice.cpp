#include "hkt/lattice.hpp"

#include "hkt/binary_forms.hpp"
#include "hkt/error.hpp"

#include <algorithm>
#include <numeric>

namespace hkt {

GramLattice::GramLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.square()) fail(ErrorCode::InvalidParameter, "Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) fail(ErrorCode::InvalidParameter, "Gram matrix must be symmetric");
    if (mpz_odd_p(gram_(i, i).get_mpz_t())) even_ = false;
  }
}

GramLattice GramLattice::relabeled(std::string label) const { return GramLattice(gram_, std::move(label)); }

Integer GramLattice::pairing(std::span<const Integer> x, std::span<const Integer> y) const {
  if (x.size() != rank() || y.size() != rank())
    fail(ErrorCode::InvalidParameter, "vector length does not match lattice rank");
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

LatticeVector::LatticeVector(IntVector coords) : coords_(std::move(coords)) {
  Integer g = 0;
  for (const auto& c : coords_) g = gcd(g, c);
  primitive_ = (g == 1);
}

GramLattice hyperbolic_plane() { return GramLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

GramLattice e8(bool negative) {
  // Cartan matrix of E8 in Bourbaki numbering (node 2 attached to node 4).
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const std::pair<int, int> edges[] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (auto [i, j] : edges) c(i, j) = c(j, i) = -1;
  if (negative)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) c(i, j) = -c(i, j);
  return GramLattice(c, negative ? "E8(-1)" : "E8");
}

GramLattice rank_one(const Integer& entry) {
  if (entry == 0 || mpz_odd_p(entry.get_mpz_t()))
    fail(ErrorCode::InvalidParameter, "rank-one lattice needs a nonzero even entry, got " + entry.get_str());
  return GramLattice(IntMatrix{{entry}}, "<" + entry.get_str() + ">");
}

GramLattice make_standard(StandardKind kind, const Integer& entry) {
  switch (kind) {
    case StandardKind::U: return hyperbolic_plane();
    case StandardKind::E8Neg: return e8(true);
    case StandardKind::Rank1: return rank_one(entry);
  }
  fail(ErrorCode::InvalidParameter, "unknown standard lattice");
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return GramLattice(block_diagonal(a.gram(), b.gram()), label);
}

GramLattice orthogonal_sum(std::initializer_list<GramLattice> parts, std::string label) {
  IntMatrix g(0, 0);
  for (const auto& p : parts) g = block_diagonal(g, p.gram());
  return GramLattice(g, std::move(label));
}

GramLattice repeat_sum(const GramLattice& part, std::size_t copies) {
  IntMatrix g(0, 0);
  for (std::size_t i = 0; i < copies; ++i) g = block_diagonal(g, part.gram());
  std::string label = part.label().empty() ? "" : part.label() + "^" + std::to_string(copies);
  return GramLattice(g, label);
}

GramLattice rescale(const GramLattice& a, const Integer& factor) {
  if (factor == 0) fail(ErrorCode::InvalidParameter, "rescale factor must be nonzero");
  IntMatrix g = a.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= factor;
  std::string label = a.label().empty() ? "" : a.label() + "(" + factor.get_str() + ")";
  return GramLattice(g, label);
}

Signature signature(const GramLattice& lattice) {
  RatMatrix a = to_rational(lattice.gram());
  std::size_t n = a.rows();
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  Signature sig;

  auto eliminate = [&](std::size_t p) {
    const Rational pivot = a(p, p);
    if (pivot > 0) ++sig.positive; else ++sig.negative;
    alive.erase(std::find(alive.begin(), alive.end(), p));
    for (std::size_t i : alive) {
      if (a(i, p) == 0) continue;
      Rational f = a(i, p) / pivot;
      for (std::size_t j : alive) a(i, j) -= f * a(p, j);
    }
  };

  while (!alive.empty()) {
    auto diag = std::find_if(alive.begin(), alive.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (diag != alive.end()) {
      eliminate(*diag);
      continue;
    }
    // All remaining diagonal entries vanish: e_i <- e_i + e_j makes a(i,i) = 2 a(i,j) != 0.
    bool found = false;
    for (std::size_t i : alive) {
      for (std::size_t j : alive) {
        if (i == j || a(i, j) == 0) continue;
        for (std::size_t k : alive) {
          if (k == i) continue;
          a(i, k) += a(j, k);
        }
        a(i, i) = 2 * a(i, j);
        for (std::size_t k : alive)
          if (k != i) a(k, i) = a(i, k);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) fail(ErrorCode::DegenerateLattice, "degenerate form: signature undefined");
  }
  return sig;
}

Integer determinant(const GramLattice& a) { return determinant(a.gram()); }

Complement orthogonal_complement_with_basis(const GramLattice& a, const LatticeVector& v) {
  if (v.size() != a.rank()) fail(ErrorCode::InvalidParameter, "vector length does not match lattice rank");
  if (!v.is_primitive()) fail(ErrorCode::NonPrimitiveVector, "vector is not primitive");
  IntVector row(a.rank());
  bool zero = true;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) row[i] += a.gram()(i, j) * v.coords()[j];
    if (row[i] != 0) zero = false;
  }
  if (zero) fail(ErrorCode::DegenerateComplement, "vector pairs to zero with the whole lattice");

  IntMatrix basis = integer_kernel(row);
  const std::size_t m = basis.cols();
  // Order basis vectors by |norm|, then lexicographically.
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m; ++j) cols.push_back(basis.column(j));
  auto norm = [&](const IntVector& x) -> Integer { return abs(a.pairing(x, x)); };
  std::stable_sort(cols.begin(), cols.end(), [&](const IntVector& x, const IntVector& y) {
    Integer nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    return x < y;
  });
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < a.rank(); ++i) basis(i, j) = cols[j][i];

  IntMatrix gram = basis.transpose() * a.gram() * basis;
  if (determinant(gram) == 0)
    fail(ErrorCode::DegenerateComplement, "orthogonal complement is degenerate (isotropic vector)");
  std::string label = a.label().empty() ? "" : a.label() + "_h";
  return {GramLattice(gram, label), basis};
}

GramLattice orthogonal_complement(const GramLattice& a, const LatticeVector& v) {
  return orthogonal_complement_with_basis(a, v).lattice;
}

std::optional<IntMatrix> find_isometry_rank2(const GramLattice& a, const GramLattice& b) {
  if (a.rank() > 2 || b.rank() > 2)
    fail(ErrorCode::UnsupportedRank, "isometry testing is implemented for rank <= 2 only");
  if (a.rank() != b.rank()) return std::nullopt;
  if (a.rank() == 0) return IntMatrix(0, 0);
  if (a.rank() == 1) {
    if (a.gram()(0, 0) == 0) fail(ErrorCode::DegenerateLattice, "degenerate rank-one lattice");
    if (a.gram()(0, 0) != b.gram()(0, 0)) return std::nullopt;
    return IntMatrix{{1}};
  }
  auto m = binary::find_equivalence(binary::from_gram(a.gram()), binary::from_gram(b.gram()));
  return m;
}

bool is_isometric_rank2(const GramLattice& a, const GramLattice& b) {
  return find_isometry_rank2(a, b).has_value();
}

GramLattice k3_lattice() {
  return orthogonal_sum({repeat_sum(hyperbolic_plane(), 3), repeat_sum(e8(true), 2)}, "L_K3");
}

GramLattice k3n_lattice(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "K3^[n] lattice needs n >= 1");
  if (n == 1) return k3_lattice().relabeled("L_1");
  return orthogonal_sum({repeat_sum(hyperbolic_plane(), 3), repeat_sum(e8(true), 2), rank_one(Integer(-2 * (n - 1)))},
                        "L_" + std::to_string(n));
}

GramLattice kummer_lattice(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "Kummer lattice needs n >= 1");
  return orthogonal_sum({repeat_sum(hyperbolic_plane(), 3), rank_one(Integer(-2 * (n + 1)))},
                        "L_K," + std::to_string(n));
}

GramLattice polarized_k3_lattice(int g) {
  if (g < 2) fail(ErrorCode::InvalidParameter, "polarized K3 lattice needs genus g >= 2");
  return orthogonal_sum({rank_one(Integer(2 - 2 * g)), repeat_sum(hyperbolic_plane(), 2), repeat_sum(e8(true), 2)},
                        "L_g" + std::to_string(g));
}

}  // namespace hkt
