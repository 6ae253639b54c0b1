#include "hkt/nl_cycles.hpp"

#include "hkt/binary_forms.hpp"
#include "hkt/error.hpp"
#include "hkt/quadratic_module.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hkt {
namespace {

std::string gram_text(const IntMatrix& g) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? ", " : "") << g(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

// Basis (in Hermite form) of the column span of a full-row-rank integer matrix.
IntMatrix column_span_basis(const IntMatrix& x) {
  SmithForm s = smith_normal_form(x);
  IntMatrix left_inv = unimodular_inverse(s.left);
  const std::size_t n = x.rows();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.diag(i, i);
    if (d == 0) fail(ErrorCode::InternalError, "generators do not span a full-rank lattice");
    for (std::size_t r = 0; r < n; ++r) b(r, i) = left_inv(r, i) * d;
  }
  return hermite_columns(b);
}

IntMatrix congruent(const IntMatrix& g, const IntMatrix& m) { return m.transpose() * g * m; }

bool gram_less(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

bool same_class(const GramLattice& a, const GramLattice& b) {
  if (a.rank() != b.rank() || determinant(a) != determinant(b)) return false;
  if (a.rank() == 1) return true;
  return is_isometric_rank2(a, b);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Overlattice> overlattices(const GramLattice& s) {
  if (s.rank() > 3) fail(ErrorCode::UnsupportedRank, "overlattice enumeration supports rank <= 3");
  DiscriminantData data = discriminant_data(s);
  const FiniteQuadraticModule& m = data.module;
  if (m.is_trivial()) return {};
  const auto elements = m.elements();
  const std::size_t count = elements.size();

  auto index_of = [&](const IntVector& x) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      idx += x[i].get_ui() * stride;
      stride *= m.invariant_factors()[i].get_ui();
    }
    return idx;
  };
  std::vector<bool> isotropic(count);
  for (std::size_t k = 0; k < count; ++k) isotropic[k] = m.q(elements[k]) == 0;

  using Subgroup = std::vector<std::size_t>;
  std::set<Subgroup> seen{{0}};
  std::deque<Subgroup> queue{{0}};
  while (!queue.empty()) {
    Subgroup h = queue.front();
    queue.pop_front();
    for (std::size_t x = 1; x < count; ++x) {
      if (!isotropic[x] || std::binary_search(h.begin(), h.end(), x)) continue;
      bool orthogonal = std::all_of(h.begin(), h.end(), [&](std::size_t y) { return m.b(elements[x], elements[y]) == 0; });
      if (!orthogonal) continue;
      std::set<std::size_t> closure(h.begin(), h.end());
      IntVector multiple = elements[x];
      while (true) {
        std::size_t mi = index_of(multiple);
        if (mi == 0) break;
        for (std::size_t y : h) closure.insert(index_of(m.add(multiple, elements[y])));
        multiple = m.add(multiple, elements[x]);
      }
      Subgroup next(closure.begin(), closure.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  const std::size_t n = s.rank();
  Integer den = 1;
  for (const auto& lift : data.lifts)
    for (const auto& v : lift) den = lcm(den, v.get_den());

  std::vector<Overlattice> out;
  for (const auto& h : seen) {
    if (h.size() == 1) continue;
    IntMatrix gens(n, n + h.size());
    for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
    for (std::size_t c = 0; c < h.size(); ++c) {
      const IntVector& x = elements[h[c]];
      for (std::size_t r = 0; r < n; ++r) {
        Rational v = 0;
        for (std::size_t gi = 0; gi < x.size(); ++gi) v += Rational(x[gi]) * data.lifts[gi][r];
        v *= Rational(den);
        gens(r, n + c) = v.get_num();
      }
    }
    IntMatrix b = column_span_basis(gens);
    IntMatrix scaled = congruent(s.gram(), b);
    IntMatrix gram(n, n);
    const Integer den2 = den * den;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (scaled(i, j) % den2 != 0) fail(ErrorCode::InternalError, "overlattice is not integral");
        gram(i, j) = scaled(i, j) / den2;
      }
    GramLattice over(gram, s.label().empty() ? "" : s.label() + "+");
    if (!over.is_even()) fail(ErrorCode::InternalError, "overlattice is not even");
    RatMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis(i, j) = make_rational(b(i, j), den);
    Overlattice o{over, Integer(static_cast<unsigned long>(h.size())), basis};
    if (n <= 2 && std::any_of(out.begin(), out.end(), [&](const Overlattice& e) { return same_class(e.lattice, over); }))
      continue;
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const Overlattice& a, const Overlattice& b) {
    if (a.index != b.index) return a.index < b.index;
    return gram_less(a.lattice.gram(), b.lattice.gram());
  });
  return out;
}

Saturation saturation(const GramLattice& ambient, const std::vector<LatticeVector>& sub_basis) {
  const std::size_t n = ambient.rank();
  const std::size_t m = sub_basis.size();
  if (m == 0) fail(ErrorCode::InvalidParameter, "empty sublattice basis");
  IntMatrix x(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (sub_basis[j].size() != n) fail(ErrorCode::InvalidParameter, "vector length does not match lattice rank");
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sub_basis[j].coords()[i];
  }
  SmithForm s = smith_normal_form(x);
  Integer index = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= n || s.diag(i, i) == 0) fail(ErrorCode::DependentVectors, "sublattice basis is linearly dependent");
    index *= s.diag(i, i);
  }
  IntMatrix left_inv = unimodular_inverse(s.left);
  IntMatrix basis(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) basis(i, j) = left_inv(i, j);
  return {GramLattice(congruent(ambient.gram(), basis)), basis, index};
}

Integer embedding_multiplicity(const GramLattice& s, const GramLattice& t, const Integer& max_index) {
  if (s.rank() != 2 || t.rank() != 2) fail(ErrorCode::UnsupportedRank, "embedding multiplicities need rank-2 lattices");
  const Integer ds = determinant(s), dt = determinant(t);
  if (dt == 0 || ds == 0) fail(ErrorCode::DegenerateLattice, "degenerate lattice");
  if (ds % dt != 0) return 0;
  const Integer ratio = ds / dt;
  if (ratio <= 0 || !is_square(ratio)) return 0;
  const Integer k = isqrt(ratio);
  if (k > max_index) fail(ErrorCode::CapExceeded, "sublattice index " + k.get_str() + " exceeds cap");

  std::map<std::vector<Integer>, std::size_t> found;
  std::vector<IntMatrix> subs;
  const long kk = k.get_si();
  for (long a = 1; a <= kk; ++a) {
    if (kk % a != 0) continue;
    const long d = kk / a;
    for (long b = 0; b < a; ++b) {
      IntMatrix m{{a, b}, {0, d}};
      GramLattice sub(congruent(t.gram(), m));
      if (!is_isometric_rank2(sub, s)) continue;
      found.emplace(std::vector<Integer>{a, b, d}, subs.size());
      subs.push_back(m);
    }
  }
  if (subs.empty()) return 0;
  UnionFind uf(subs.size());
  for (const IntMatrix& g : binary::automorphism_generators(binary::from_gram(t.gram()))) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      IntMatrix h = hermite_columns(g * subs[i]);
      auto it = found.find({h(0, 0), h(0, 1), h(1, 1)});
      if (it == found.end()) fail(ErrorCode::InternalError, "automorphism does not preserve the sublattice set");
      uf.unite(i, it->second);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (uf.find(i) == i) ++orbits;
  return Integer(static_cast<unsigned long>(orbits));
}

bool primitively_represents(const GramLattice& lattice, const Integer& square) {
  if (lattice.rank() != 2) fail(ErrorCode::UnsupportedRank, "primitive representation test needs rank 2");
  if (square == 0) fail(ErrorCode::InvalidParameter, "square must be nonzero");
  const Integer d = determinant(lattice);
  const Integer bound = abs(square);
  for (Integer beta = 0; beta < bound; ++beta) {
    Integer num = d + beta * beta;
    if (num % square != 0) continue;
    Integer gamma = num / square;
    if (mpz_odd_p(gamma.get_mpz_t())) continue;
    IntMatrix g{{square, beta}, {beta, gamma}};
    if (is_isometric_rank2(GramLattice(g), lattice)) return true;
  }
  return false;
}

NLFamily make_family(const Integer& h_square, std::vector<GramLattice> members, unsigned threads) {
  for (const auto& m : members) {
    if (m.rank() != 2) fail(ErrorCode::UnsupportedRank, "family members must have rank 2");
    if (!m.is_even()) fail(ErrorCode::InvalidParameter, "family members must be even");
    if (determinant(m) >= 0) fail(ErrorCode::WrongSignature, "family members must have signature (1, 1)");
  }
  std::sort(members.begin(), members.end(), [](const GramLattice& a, const GramLattice& b) {
    Integer da = abs(determinant(a)), db = abs(determinant(b));
    if (da != db) return da > db;
    return gram_less(a.gram(), b.gram());
  });
  NLFamily fam;
  fam.h_square = h_square;
  fam.members = std::move(members);
  const std::size_t n = fam.members.size();
  fam.embeds.assign(n, std::vector<bool>(n, false));
  std::vector<char> flags(n * n, 0);
  detail::parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    if (i != j) flags[idx] = embedding_multiplicity(fam.members[i], fam.members[j]) > 0;
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fam.embeds[i][j] = flags[i * n + j] != 0;
  return fam;
}

NLFamily nl_family(int g, const Integer& max_disc, unsigned threads) {
  if (g < 2) fail(ErrorCode::InvalidParameter, "genus must be at least 2");
  if (max_disc < 1) fail(ErrorCode::InvalidParameter, "discriminant bound must be positive");
  if (max_disc > kMaxDiscriminantCap)
    fail(ErrorCode::CapExceeded, "discriminant bound exceeds " + std::to_string(kMaxDiscriminantCap));
  const long h2 = 2L * g - 2;
  const long bound = max_disc.get_si();
  std::vector<GramLattice> members;
  for (long beta = 0; beta < h2; ++beta) {
    // det = h2 * gamma - beta^2 in [-bound, -1]
    long lo = -floor_div(Integer(bound - beta * beta), Integer(h2)).get_si();
    long hi = floor_div(Integer(beta * beta - 1), Integer(h2)).get_si();
    for (long gamma = lo; gamma <= hi; ++gamma) {
      if (gamma % 2 != 0) continue;
      const long det = h2 * gamma - beta * beta;
      if (det < -bound || det > -1) continue;
      GramLattice cand(IntMatrix{{h2, beta}, {beta, gamma}});
      bool dup = std::any_of(members.begin(), members.end(), [&](const GramLattice& m) { return same_class(m, cand); });
      if (!dup) members.push_back(cand);
    }
  }
  return make_family(Integer(h2), std::move(members), threads);
}

BasisChange nl_basis_change(const NLFamily& fam, unsigned threads) {
  const std::size_t n = fam.members.size();
  std::vector<std::string> missing;
  for (const auto& m : fam.members)
    for (const auto& o : overlattices(m)) {
      if (!primitively_represents(o.lattice, fam.h_square)) continue;
      bool present = std::any_of(fam.members.begin(), fam.members.end(),
                                 [&](const GramLattice& x) { return same_class(x, o.lattice); });
      if (!present) missing.push_back(gram_text(o.lattice.gram()));
    }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    std::string detail = "missing overlattices:";
    for (const auto& s : missing) detail += " " + s;
    fail(ErrorCode::IncompleteFamily, detail);
  }

  BasisChange out;
  out.matrix = IntMatrix(n, n);
  std::vector<Integer> entries(n * n);
  detail::parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t i = idx / n, j = idx % n;
    entries[idx] = i == j ? Integer(1) : embedding_multiplicity(fam.members[i], fam.members[j]);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.matrix(i, j) = entries[i * n + j];
      if (j < i && out.matrix(i, j) != 0) fail(ErrorCode::InternalError, "basis change is not upper unitriangular");
    }
  out.determinant = determinant(out.matrix);
  if (out.determinant != 1) fail(ErrorCode::InternalError, "basis change has determinant " + out.determinant.get_str());
  out.inverse = unimodular_inverse(out.matrix);
  return out;
}

SpecialCycleExpansion special_cycle_expand(int beta_rank, int r) {
  if (r < 0 || beta_rank < 0 || beta_rank > r)
    fail(ErrorCode::InvalidParameter, "need 0 <= rank(beta) <= r");
  SpecialCycleExpansion e;
  e.lambda_power = r - beta_rank;
  e.family_rank = beta_rank;
  std::string prefix = e.lambda_power == 0   ? ""
                       : e.lambda_power == 1 ? "λ · "
                                             : "λ^" + std::to_string(e.lambda_power) + " · ";
  e.text = beta_rank == 0 ? (e.lambda_power == 0 ? "[Y]" : prefix + "[Y]")
                          : prefix + "Σ_{rank " + std::to_string(beta_rank) + "} φ(v) c(U(v))";
  return e;
}

}  // namespace hkt
