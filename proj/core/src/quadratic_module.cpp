#include "hkt/quadratic_module.hpp"

#include "hkt/error.hpp"
#include "precise_complex.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace hkt {
namespace {

constexpr std::uint64_t kEnumerateLimit = 1u << 16;
constexpr std::uint64_t kPrimaryLimit = 1u << 24;

// Order of the radical of b, via the image of x -> (sum_i x_i b_ij)_j in (Z/N)^m.
bool nondegenerate(const std::vector<Integer>& orders, const RatMatrix& bilinear) {
  const std::size_t m = orders.size();
  if (m == 0) return true;
  Integer n = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) n = lcm(n, bilinear(i, j).get_den());
  IntMatrix stacked(m, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      Rational scaled = bilinear(i, j) * Rational(n);
      stacked(j, i) = scaled.get_num();
    }
    stacked(j, m + j) = n;
  }
  SmithForm s = smith_normal_form(stacked);
  Integer span_index = 1;
  for (const auto& e : s.invariants()) span_index *= e;
  Integer image = 1;
  for (std::size_t j = 0; j < m; ++j) image *= n;
  image /= span_index;
  Integer order = 1;
  for (const auto& d : orders) order *= d;
  return image == order;
}

std::int64_t to_small(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) fail(ErrorCode::CapExceeded, std::string(what) + " exceeds machine range");
  return z.get_si();
}

// Histogram of e^{pi i c / den} terms: counts[c] for c in [0, 2 den).
struct PhaseHistogram {
  std::int64_t den = 1;
  std::vector<std::int64_t> counts;
};

detail::PreciseComplex evaluate(const PhaseHistogram& h, mpfr_prec_t prec) {
  detail::PreciseComplex total(prec);
  for (std::size_t c = 0; c < h.counts.size(); ++c) {
    if (h.counts[c] == 0) continue;
    auto z = detail::PreciseComplex::unit_root(make_rational(static_cast<long>(c), 2 * h.den), prec);
    z.scale(Integer(static_cast<long>(h.counts[c])));
    total += z;
  }
  return total;
}

PhaseHistogram enumerate_phases(const FiniteQuadraticModule& m) {
  const std::size_t g = m.generators();
  Integer den = 1;
  for (std::size_t i = 0; i < g; ++i) {
    den = lcm(den, m.q_diag()[i].get_den());
    for (std::size_t j = 0; j < g; ++j) den = lcm(den, m.bilinear()(i, j).get_den());
  }
  const std::int64_t n = to_small(den, "level");
  const std::int64_t mod2 = 2 * n;
  std::vector<std::int64_t> qi(g);
  std::vector<std::vector<std::int64_t>> bij(g, std::vector<std::int64_t>(g));
  std::vector<std::int64_t> orders(g);
  for (std::size_t i = 0; i < g; ++i) {
    qi[i] = to_small(Rational(m.q_diag()[i] * den).get_num(), "q");
    orders[i] = to_small(m.invariant_factors()[i], "order");
    for (std::size_t j = 0; j < g; ++j) bij[i][j] = to_small(Rational(m.bilinear()(i, j) * den).get_num(), "b");
  }
  PhaseHistogram h{n, std::vector<std::int64_t>(static_cast<std::size_t>(mod2), 0)};
  std::vector<std::int64_t> x(g, 0);
  while (true) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (x[i] == 0) continue;
      v = (v + (x[i] * x[i] % mod2) * qi[i]) % mod2;
      for (std::size_t j = i + 1; j < g; ++j)
        if (x[j] != 0) v = (v + 2 * ((x[i] * x[j] % mod2) * bij[i][j] % mod2)) % mod2;
    }
    ++h.counts[static_cast<std::size_t>(v)];
    std::size_t k = 0;
    while (k < g && ++x[k] == orders[k]) x[k++] = 0;
    if (k == g) break;
  }
  return h;
}

Integer residue(const Rational& r, const Integer& m) {
  return mod(Integer(r.get_num() * inverse_mod(r.get_den(), m)), m);
}

// Phase, in eighths of a turn, of the Gauss sum of the discriminant form of
// one Jordan constituent p^e * unit (e >= 1); its modulus is sqrt of the order.
//   odd p, <p^e u>: trivial phase for even e, else (2u|p) eps_p with
//   eps_p = 1 or i as p = 1 or 3 mod 4.
//   p = 2, <2^e u>: zeta_8^{+-1} (u = +-1 mod 4) times (2|u)^{e+1}.
//   p = 2, 2^e [[2a, b], [b, 2c]]: hyperbolic (det = 7 mod 8) gives 1, the
//   anisotropic plane (det = 3 mod 8) gives (-1)^e.
int block_phase_eighths(const JordanBlock& block, const Integer& p) {
  const int e = block.scale;
  if (p != 2) {
    if (e % 2 == 0) return 0;
    Integer u = residue(block.unit(0, 0), p);
    int phase = mpz_legendre(Integer(2 * u).get_mpz_t(), p.get_mpz_t()) < 0 ? 4 : 0;
    if (mod(p, Integer(4)) == 3) phase += 2;
    return phase % 8;
  }
  if (block.unit.rows() == 1) {
    Integer u = residue(block.unit(0, 0), Integer(8));
    int phase = (u % 4 == 1) ? 1 : 7;
    bool minus = (u == 3 || u == 5);
    if (minus && (e + 1) % 2 == 1) phase += 4;
    return phase % 8;
  }
  const auto& m = block.unit;
  Integer d = residue(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0), Integer(8));
  if (d == 7) return 0;
  if (d == 3) return (4 * e) % 8;
  fail(ErrorCode::InternalError, "2-adic Jordan block with determinant " + d.get_str() + " mod 8");
}

// p-primary part: h_i = (N_i / p^v) g_i of order p^v.
FiniteQuadraticModule primary_part(const FiniteQuadraticModule& m, const Integer& p) {
  std::vector<std::size_t> idx;
  std::vector<Integer> orders, cofactor;
  for (std::size_t i = 0; i < m.generators(); ++i) {
    const Integer& n = m.invariant_factors()[i];
    int v = valuation(n, p);
    if (v == 0) continue;
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
    idx.push_back(i);
    orders.push_back(pv);
    cofactor.push_back(n / pv);
  }
  const std::size_t k = idx.size();
  std::vector<Rational> qd(k);
  RatMatrix bl(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    qd[a] = m.q_diag()[idx[a]] * Rational(cofactor[a] * cofactor[a]);
    for (std::size_t b = 0; b < k; ++b)
      bl(a, b) = m.bilinear()(idx[a], idx[b]) * Rational(cofactor[a] * cofactor[b]);
  }
  return FiniteQuadraticModule(std::move(orders), std::move(qd), std::move(bl));
}

detail::PreciseComplex primary_gauss_sum(const FiniteQuadraticModule& m, mpfr_prec_t prec) {
  detail::PreciseComplex total = detail::PreciseComplex::real(1, prec);
  for (const auto& p : prime_factors(m.order())) {
    auto part = primary_part(m, p);
    if (part.order() > Integer(static_cast<unsigned long>(kPrimaryLimit)))
      fail(ErrorCode::CapExceeded, "p-primary part of order " + part.order().get_str() + " is too large to enumerate");
    total = total * evaluate(enumerate_phases(part), prec);
  }
  return total;
}

// Normalized Gauss sum of d(L) from the p-adic Jordan constituents of the Gram matrix.
detail::PreciseComplex jordan_gauss_sum(const GramLattice& a, mpfr_prec_t prec) {
  long eighths = 0;
  for (const auto& p : prime_factors(abs(determinant(a))))
    for (const auto& block : jordan_decomposition(a.gram(), p))
      if (block.scale > 0) eighths += block_phase_eighths(block, p);
  return detail::PreciseComplex::unit_root(make_rational(eighths % 8, 8), prec);
}

MilgramResult finish(const detail::PreciseComplex& sum, const Integer& order, mpfr_prec_t prec) {
  double eighths = sum.argument_eighths();
  long s = std::lround(eighths);
  int inv = static_cast<int>(((s % 8) + 8) % 8);
  detail::PreciseComplex normalized = sum;
  normalized.divide_sqrt(order);
  normalized -= detail::PreciseComplex::unit_root(make_rational(inv, 8), prec);
  return {inv, normalized.abs_value()};
}

int checked(const MilgramResult& r) {
  if (!(r.residual < kMilgramTolerance))
    fail(ErrorCode::InconsistentForm,
         "Gauss sum is not sqrt(|D|) times an eighth root of unity (residual " + std::to_string(r.residual) + ")");
  return r.invariant;
}

}  // namespace

FiniteQuadraticModule::FiniteQuadraticModule(std::vector<Integer> orders, std::vector<Rational> q_diag,
                                             RatMatrix bilinear)
    : orders_(std::move(orders)), q_diag_(std::move(q_diag)), bilinear_(std::move(bilinear)) {
  const std::size_t g = orders_.size();
  if (q_diag_.size() != g || bilinear_.rows() != g || bilinear_.cols() != g)
    fail(ErrorCode::InvalidParameter, "quadratic module data has inconsistent sizes");
  for (std::size_t i = 0; i < g; ++i) {
    if (orders_[i] <= 1) fail(ErrorCode::InvalidParameter, "invariant factors must exceed 1");
    q_diag_[i] = mod(q_diag_[i], Integer(2));
    for (std::size_t j = 0; j < g; ++j) bilinear_(i, j) = mod(bilinear_(i, j), Integer(1));
  }
  for (std::size_t i = 0; i < g; ++i) {
    const Rational d(orders_[i]);
    if (Rational(q_diag_[i] * d).get_den() != 1 || mpz_odd_p(Rational(q_diag_[i] * d * d).get_num_mpz_t()))
      fail(ErrorCode::InconsistentForm, "q is not well defined on generator " + std::to_string(i));
    if (mod(Rational(q_diag_[i] - bilinear_(i, i)), Integer(1)) != 0)
      fail(ErrorCode::InconsistentForm, "b(g, g) must equal q(g) mod 1");
    for (std::size_t j = 0; j < g; ++j) {
      if (bilinear_(i, j) != bilinear_(j, i)) fail(ErrorCode::InconsistentForm, "bilinear form must be symmetric");
      if (Rational(bilinear_(i, j) * d).get_den() != 1)
        fail(ErrorCode::InconsistentForm, "b is not well defined on generator " + std::to_string(i));
    }
  }
  if (!nondegenerate(orders_, bilinear_)) fail(ErrorCode::InconsistentForm, "bilinear form is degenerate");
}

Integer FiniteQuadraticModule::order() const {
  Integer n = 1;
  for (const auto& d : orders_) n *= d;
  return n;
}

std::vector<IntVector> FiniteQuadraticModule::elements(std::uint64_t cap) const {
  Integer n = order();
  if (n > Integer(static_cast<unsigned long>(cap)))
    fail(ErrorCode::CapExceeded, "module of order " + n.get_str() + " exceeds enumeration cap");
  std::vector<IntVector> out;
  out.reserve(n.get_ui());
  IntVector x(orders_.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t k = 0;
    while (k < x.size() && ++x[k] == orders_[k]) x[k++] = 0;
    if (k == x.size()) break;
  }
  return out;
}

Rational FiniteQuadraticModule::q(std::span<const Integer> x) const {
  Rational v = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    v += Rational(x[i] * x[i]) * q_diag_[i];
    for (std::size_t j = i + 1; j < orders_.size(); ++j)
      if (x[j] != 0) v += Rational(2 * x[i] * x[j]) * bilinear_(i, j);
  }
  return mod(v, Integer(2));
}

Rational FiniteQuadraticModule::b(std::span<const Integer> x, std::span<const Integer> y) const {
  Rational v = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < orders_.size(); ++j)
      if (y[j] != 0) v += Rational(x[i] * y[j]) * bilinear_(i, j);
  }
  return mod(v, Integer(1));
}

IntVector FiniteQuadraticModule::negate(std::span<const Integer> x) const {
  IntVector out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(Integer(-x[i]), orders_[i]);
  return out;
}

IntVector FiniteQuadraticModule::add(std::span<const Integer> x, std::span<const Integer> y) const {
  IntVector out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) out[i] = mod(Integer(x[i] + y[i]), orders_[i]);
  return out;
}

FiniteQuadraticModule FiniteQuadraticModule::permuted(std::span<const std::size_t> perm) const {
  const std::size_t g = orders_.size();
  if (perm.size() != g) fail(ErrorCode::InvalidParameter, "permutation has wrong length");
  std::vector<Integer> orders(g);
  std::vector<Rational> qd(g);
  RatMatrix bl(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    orders[i] = orders_[perm[i]];
    qd[i] = q_diag_[perm[i]];
    for (std::size_t j = 0; j < g; ++j) bl(i, j) = bilinear_(perm[i], perm[j]);
  }
  return FiniteQuadraticModule(std::move(orders), std::move(qd), std::move(bl));
}

FiniteQuadraticModule discriminant_module(const GramLattice& a) { return discriminant_data(a).module; }

DiscriminantData discriminant_data(const GramLattice& a) {
  if (!a.is_even()) fail(ErrorCode::InvalidParameter, "discriminant form requires an even lattice");
  SmithForm s = smith_normal_form(a.gram());
  const std::size_t n = a.rank();
  std::vector<std::vector<Rational>> gens;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.diag(i, i);
    if (d == 0) fail(ErrorCode::DegenerateLattice, "lattice is degenerate");
    if (d == 1) continue;
    std::vector<Rational> g(n);
    for (std::size_t r = 0; r < n; ++r) {
      g[r] = Rational(s.right(r, i), d);
      g[r].canonicalize();
    }
    gens.push_back(std::move(g));
    orders.push_back(d);
  }
  const std::size_t m = gens.size();
  auto pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[j] != 0) v += x[i] * Rational(a.gram()(i, j)) * y[j];
    }
    return v;
  };
  std::vector<Rational> qd(m);
  RatMatrix bl(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    qd[i] = pair(gens[i], gens[i]);
    for (std::size_t j = 0; j < m; ++j) bl(i, j) = pair(gens[i], gens[j]);
  }
  return {FiniteQuadraticModule(std::move(orders), std::move(qd), std::move(bl)), std::move(gens)};
}

std::vector<JordanBlock> jordan_decomposition(const IntMatrix& gram, const Integer& p) {
  RatMatrix a = to_rational(gram);
  std::vector<std::size_t> alive(a.rows());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<JordanBlock> blocks;
  const Rational prat(p);

  auto val = [&](const Rational& x) { return valuation(x, p); };

  while (!alive.empty()) {
    int best = 0;
    bool have = false;
    for (std::size_t i : alive)
      for (std::size_t j : alive)
        if (a(i, j) != 0 && (!have || val(a(i, j)) < best)) {
          best = val(a(i, j));
          have = true;
        }
    if (!have) fail(ErrorCode::DegenerateLattice, "degenerate matrix in Jordan decomposition");

    std::vector<std::size_t> pivot;
    for (std::size_t i : alive)
      if (a(i, i) != 0 && val(a(i, i)) == best) {
        pivot = {i};
        break;
      }
    if (pivot.empty()) {
      std::size_t pi = 0, pj = 0;
      for (std::size_t i : alive)
        for (std::size_t j : alive)
          if (i != j && a(i, j) != 0 && val(a(i, j)) == best) {
            pi = i;
            pj = j;
          }
      if (p != 2) {
        // e_i <- e_i + e_j gives a diagonal entry of minimal valuation.
        for (std::size_t k : alive)
          if (k != pi) a(pi, k) += a(pj, k);
        a(pi, pi) = a(pi, pi) + a(pj, pi) + a(pi, pj);
        for (std::size_t k : alive)
          if (k != pi) a(k, pi) = a(pi, k);
        pivot = {pi};
      } else {
        pivot = {pi, pj};
      }
    }

    Rational scale = 1;
    for (int t = 0; t < best; ++t) scale *= prat;
    for (int t = 0; t > best; --t) scale /= prat;
    const std::size_t k = pivot.size();
    RatMatrix block(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) block(r, c) = a(pivot[r], pivot[c]);
    RatMatrix unit(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) unit(r, c) = block(r, c) / scale;
    blocks.push_back({best, unit});

    RatMatrix binv = inverse(block);
    for (std::size_t pv : pivot) alive.erase(std::find(alive.begin(), alive.end(), pv));
    // Schur complement: a_rest -= C binv C^T.
    std::vector<std::vector<Rational>> coupling(alive.size(), std::vector<Rational>(k));
    for (std::size_t r = 0; r < alive.size(); ++r)
      for (std::size_t c = 0; c < k; ++c) {
        Rational s = 0;
        for (std::size_t t = 0; t < k; ++t) s += a(alive[r], pivot[t]) * binv(t, c);
        coupling[r][c] = s;
      }
    for (std::size_t r = 0; r < alive.size(); ++r)
      for (std::size_t c = 0; c < alive.size(); ++c) {
        Rational s = 0;
        for (std::size_t t = 0; t < k; ++t) s += coupling[r][t] * a(pivot[t], alive[c]);
        a(alive[r], alive[c]) -= s;
      }
  }
  return blocks;
}

MilgramResult milgram(const FiniteQuadraticModule& m, unsigned precision_bits, GaussSumMethod method) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  if (m.is_trivial()) return {0, 0.0};
  if (method == GaussSumMethod::Jordan)
    fail(ErrorCode::InvalidParameter, "the Jordan route needs a Gram matrix; use the lattice overload");
  if (method == GaussSumMethod::Auto)
    method = m.order() <= Integer(static_cast<unsigned long>(kEnumerateLimit)) ? GaussSumMethod::Enumerate
                                                                               : GaussSumMethod::PrimaryParts;
  auto sum = method == GaussSumMethod::Enumerate ? evaluate(enumerate_phases(m), prec) : primary_gauss_sum(m, prec);
  return finish(sum, m.order(), prec);
}

MilgramResult milgram(const GramLattice& a, unsigned precision_bits, GaussSumMethod method) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  const Integer order = abs(determinant(a));
  if (order == 0) fail(ErrorCode::DegenerateLattice, "degenerate Gram matrix");
  if (!a.is_even()) fail(ErrorCode::InvalidParameter, "discriminant form requires an even lattice");
  if (order == 1) return {0, 0.0};
  if (method == GaussSumMethod::Auto)
    method = order <= Integer(static_cast<unsigned long>(kEnumerateLimit)) ? GaussSumMethod::Enumerate
                                                                           : GaussSumMethod::Jordan;
  if (method != GaussSumMethod::Jordan) return milgram(discriminant_module(a), precision_bits, method);
  return finish(jordan_gauss_sum(a, prec), Integer(1), prec);
}

int milgram_invariant(const FiniteQuadraticModule& m, unsigned precision_bits) {
  return checked(milgram(m, precision_bits));
}

int milgram_invariant(const GramLattice& a, unsigned precision_bits) { return checked(milgram(a, precision_bits)); }

}  // namespace hkt
