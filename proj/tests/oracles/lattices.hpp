#pragma once

#include "hkt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

// Brute-force lattice oracles: overlattices from all vectors of the dual with
// bounded denominator, index-k sublattices from bounded generator pairs, and
// Gauss sums by direct summation over the discriminant group.

namespace oracle {

using hkt::Integer;
using hkt::IntMatrix;
using hkt::Rational;
using RatVec = std::vector<Rational>;

inline Rational frac(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(f);
}

inline RatVec reduce(RatVec v) {
  for (auto& x : v) x = frac(x);
  return v;
}

inline Rational pair(const IntMatrix& g, const RatVec& x, const RatVec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * Rational(g(i, j)) * y[j];
  return s;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// Basis (columns) of the Z-span of the given integer columns, by column
// Euclid steps into lower-triangular shape.
inline IntMatrix span_basis(std::vector<std::vector<Integer>> cols, std::size_t rank) {
  IntMatrix basis(rank, rank);
  for (std::size_t row = 0; row < rank; ++row) {
    // gcd-combine all columns with a nonzero entry at `row`.
    for (;;) {
      std::size_t piv = cols.size();
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (cols[c][row] != 0 && (piv == cols.size() || abs(cols[c][row]) < abs(cols[piv][row]))) piv = c;
      if (piv == cols.size()) break;
      bool done = true;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c == piv || cols[c][row] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), cols[c][row].get_mpz_t(), cols[piv][row].get_mpz_t());
        for (std::size_t i = 0; i < rank; ++i) cols[c][i] -= q * cols[piv][i];
        if (cols[c][row] != 0) done = false;
      }
      if (done) {
        for (std::size_t i = 0; i < rank; ++i) basis(i, row) = cols[piv][i];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(piv));
        break;
      }
    }
    std::erase_if(cols, [](const auto& v) { return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; }); });
  }
  return basis;
}

struct BruteOverlattice {
  IntMatrix gram;
  Integer index;
};

// All proper even overlattices of an even nondegenerate lattice, one per
// subgroup of the glue group. Vectors of the dual have denominator |det|.
inline std::vector<BruteOverlattice> brute_overlattices(const hkt::GramLattice& lat) {
  const IntMatrix& g = lat.gram();
  const std::size_t r = lat.rank();
  Integer det = hkt::determinant(lat);
  const long d = std::labs(det.get_si());
  std::vector<RatVec> glue;
  std::vector<long> y(r, 0);
  for (;;) {
    RatVec x(r);
    bool zero = true;
    for (std::size_t i = 0; i < r; ++i) {
      x[i] = hkt::make_rational(y[i], d);
      if (y[i]) zero = false;
    }
    if (!zero) {
      bool dual = true;
      for (std::size_t i = 0; i < r && dual; ++i) {
        RatVec e(r, 0);
        e[i] = 1;
        dual = is_integer(pair(g, x, e));
      }
      if (dual) {
        Rational q = pair(g, x, x);
        if (is_integer(q) && q.get_num() % 2 == 0) glue.push_back(x);
      }
    }
    std::size_t i = 0;
    while (i < r && ++y[i] == d) y[i++] = 0;
    if (i == r) break;
  }

  using Group = std::set<RatVec>;
  auto generate = [&](const Group& h, const RatVec& x) -> std::optional<Group> {
    Group out = h;
    std::vector<RatVec> frontier(h.begin(), h.end());
    while (!frontier.empty()) {
      RatVec cur = frontier.back();
      frontier.pop_back();
      RatVec sum(r);
      for (std::size_t i = 0; i < r; ++i) sum[i] = cur[i] + x[i];
      sum = reduce(sum);
      if (out.insert(sum).second) frontier.push_back(sum);
    }
    for (const auto& a : out)
      for (const auto& b : out) {
        Rational ab = pair(g, a, b);
        if (!is_integer(ab)) return std::nullopt;
        if (a == b && ab.get_num() % 2 != 0) return std::nullopt;
      }
    return out;
  };

  std::set<Group> seen;
  std::vector<Group> todo{Group{RatVec(r, 0)}};
  seen.insert(todo.front());
  while (!todo.empty()) {
    Group h = todo.back();
    todo.pop_back();
    for (const auto& x : glue) {
      if (h.count(x)) continue;
      if (auto next = generate(h, x); next && seen.insert(*next).second) todo.push_back(*next);
    }
  }

  std::vector<BruteOverlattice> out;
  for (const auto& h : seen) {
    if (h.size() == 1) continue;
    std::vector<std::vector<Integer>> cols;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Integer> e(r, 0);
      e[i] = d;
      cols.push_back(e);
    }
    for (const auto& v : h) {
      std::vector<Integer> c(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = Rational(v[i] * Rational(d)).get_num();
      cols.push_back(c);
    }
    IntMatrix b = span_basis(cols, r);
    IntMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Integer s = 0;
        for (std::size_t k = 0; k < r; ++k)
          for (std::size_t l = 0; l < r; ++l) s += b(k, i) * g(k, l) * b(l, j);
        gram(i, j) = s / (d * d);
      }
    out.push_back({gram, Integer(static_cast<unsigned long>(h.size()))});
  }
  return out;
}

// Canonical lower-triangular key of a rank-2 sublattice given by columns.
inline std::vector<Integer> sublattice_key(const IntMatrix& m) {
  std::vector<std::vector<Integer>> cols{{m(0, 0), m(1, 0)}, {m(0, 1), m(1, 1)}};
  IntMatrix b = span_basis(cols, 2);
  // Normalize: positive diagonal, reduce the off-diagonal entry.
  if (b(0, 0) < 0) b(0, 0) = -b(0, 0), b(1, 0) = -b(1, 0);
  if (b(1, 1) < 0) b(1, 1) = -b(1, 1);
  Integer off;
  mpz_fdiv_r(off.get_mpz_t(), b(1, 0).get_mpz_t(), b(1, 1).get_mpz_t());
  return {b(0, 0), off, b(1, 1)};
}

inline IntMatrix key_matrix(const std::vector<Integer>& k) { return IntMatrix{{k[0], 0}, {k[1], k[2]}}; }

// All index-k sublattices of Z^2, found from generator pairs with entries
// bounded by k.
inline std::vector<std::vector<Integer>> index_k_sublattices(long k) {
  std::set<std::vector<Integer>> keys;
  for (long a = -k; a <= k; ++a)
    for (long b = -k; b <= k; ++b)
      for (long c = -k; c <= k; ++c)
        for (long e = -k; e <= k; ++e)
          if (std::labs(a * e - b * c) == k) keys.insert(sublattice_key(IntMatrix{{a, b}, {c, e}}));
  return {keys.begin(), keys.end()};
}

// Automorphisms of a rank-2 Gram matrix with entries bounded by `box`.
inline std::vector<IntMatrix> bounded_automorphisms(const IntMatrix& g, long box) {
  auto q = [&](long x, long y) -> Integer { return g(0, 0) * x * x + 2 * g(0, 1) * x * y + g(1, 1) * y * y; };
  std::vector<std::pair<long, long>> first, second;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      Integer v = q(x, y);
      if (v == g(0, 0)) first.emplace_back(x, y);
      if (v == g(1, 1)) second.emplace_back(x, y);
    }
  std::vector<IntMatrix> out;
  for (auto [a, c] : first)
    for (auto [b, d] : second) {
      Integer cross = g(0, 0) * a * b + g(0, 1) * (a * d + c * b) + g(1, 1) * c * d;
      if (cross == g(0, 1) && std::labs(a * d - b * c) == 1) out.push_back(IntMatrix{{a, b}, {c, d}});
    }
  return out;
}

// Orbits of index-k sublattices of t isometric to s, under the automorphisms
// of t with entries bounded by box. Finer than (or equal to) the orbits of
// the full orthogonal group.
inline long bounded_multiplicity(const hkt::GramLattice& s, const hkt::GramLattice& t, long box) {
  Integer ds = hkt::determinant(s), dt = hkt::determinant(t);
  if (ds % dt != 0) return 0;
  Integer ratio = ds / dt;
  if (ratio <= 0 || !hkt::is_square(ratio)) return 0;
  const long k = hkt::isqrt(ratio).get_si();
  auto subs = index_k_sublattices(k);
  std::map<std::vector<Integer>, std::size_t> where;
  std::vector<std::size_t> parent;
  std::vector<std::vector<Integer>> hits;
  for (const auto& key : subs) {
    IntMatrix m = key_matrix(key);
    IntMatrix gram = m.transpose() * t.gram() * m;
    if (hkt::is_isometric_rank2(hkt::GramLattice(gram), s)) {
      where[key] = hits.size();
      parent.push_back(hits.size());
      hits.push_back(key);
    }
  }
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  for (const auto& a : bounded_automorphisms(t.gram(), box))
    for (std::size_t i = 0; i < hits.size(); ++i) {
      auto img = sublattice_key(a * key_matrix(hits[i]));
      auto it = where.find(img);
      if (it != where.end()) parent[root(i)] = root(it->second);
    }
  long orbits = 0;
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (root(i) == i) ++orbits;
  return orbits;
}

// Gauss sum over Lambda^dual / Lambda from lattice data only: the group is
// enumerated as dual vectors with denominator |det| modulo Z^r.
inline std::complex<double> gauss_sum(const hkt::GramLattice& lat, long* order = nullptr) {
  const IntMatrix& g = lat.gram();
  const std::size_t r = lat.rank();
  const long d = std::labs(hkt::determinant(lat).get_si());
  std::complex<double> sum = 0;
  long count = 0;
  std::vector<long> y(r, 0);
  for (;;) {
    RatVec x(r);
    for (std::size_t i = 0; i < r; ++i) x[i] = hkt::make_rational(y[i], d);
    bool dual = true;
    for (std::size_t i = 0; i < r && dual; ++i) {
      RatVec e(r, 0);
      e[i] = 1;
      dual = is_integer(pair(g, x, e));
    }
    if (dual) {
      double q = pair(g, x, x).get_d();
      sum += std::polar(1.0, M_PI * q);
      ++count;
    }
    std::size_t i = 0;
    while (i < r && ++y[i] == d) y[i++] = 0;
    if (i == r) break;
  }
  if (order) *order = count;
  return sum;
}

}  // namespace oracle
