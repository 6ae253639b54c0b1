#include "hkt/cusp_dim.hpp"

#include "hkt/error.hpp"
#include "hkt/weil.hpp"
#include "precise_complex.hpp"

#include <complex>

namespace hkt {
namespace {

constexpr double kRoundingTolerance = 1e-20;

Integer checked_round(const detail::PreciseComplex& z, bool imag, const Rational& factor, unsigned long root,
                      const char* what) {
  double residual = 0;
  Integer v = z.rounded(imag, factor, root, residual);
  if (!(residual < kRoundingTolerance))
    fail(ErrorCode::InternalError, std::string(what) + " is not integral (residual " + std::to_string(residual) + ")");
  return v;
}

// Sum of halved roots of unity: 1/2 sum_k counts[k] zeta_N^k.
detail::PreciseComplex half_root_sum(const std::vector<long>& counts, long n, mpfr_prec_t prec) {
  detail::PreciseComplex total(prec);
  for (long k = 0; k < n; ++k) {
    long c = counts[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    auto z = detail::PreciseComplex::unit_root(make_rational(k, n), prec);
    z.scale(make_rational(c, 2));
    total += z;
  }
  return total;
}

}  // namespace

DimensionData dimension_data(const FiniteQuadraticModule& m, const Rational& k, bool dual, unsigned precision_bits) {
  if (k < 2) fail(ErrorCode::UnsupportedWeight, "weight " + to_string(k) + " is below 2");
  Rational twice = k * 2;
  if (twice.get_den() != 1) fail(ErrorCode::ParityError, "weight must lie in (1/2)Z");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  WeilRepMatrices w = weil_matrices(m, dual, precision_bits);
  const long s = dual ? -w.milgram : w.milgram;
  Integer excess = Integer(twice.get_num()) - s;
  if (mpz_odd_p(excess.get_mpz_t()))
    fail(ErrorCode::ParityError, "2k - s is odd for k = " + to_string(k) + ", s = " + std::to_string(w.milgram));

  DimensionData out;
  out.weight = k;
  out.dual = dual;
  out.symmetric = mod(excess, Integer(4)) == 0;
  const long n = w.level;
  const std::size_t size = w.size();
  const long sign = out.symmetric ? 1 : -1;

  out.orbit_count = 0;
  out.isotropic_count = 0;
  out.alpha_t = 0;
  for (std::size_t a = 0; a < size; ++a) {
    const std::size_t b = w.negation[a];
    if (b < a || (!out.symmetric && b == a)) continue;
    ++out.orbit_count;
    out.alpha_t += make_rational(w.t[a], n);
    if (w.t[a] == 0) ++out.isotropic_count;
  }

  // Twice the traces of sqrt|D| S P and sqrt|D| S T P on the eigenspace.
  std::vector<long> s_counts(static_cast<std::size_t>(n), 0), st_counts(static_cast<std::size_t>(n), 0);
  for (std::size_t a = 0; a < size; ++a) {
    const std::size_t b = w.negation[a];
    auto bump = [&](std::vector<long>& counts, long e, long v) {
      counts[static_cast<std::size_t>(((e % n) + n) % n)] += v;
    };
    bump(s_counts, w.s(a, a), 1);
    bump(s_counts, w.s(a, b), sign);
    bump(st_counts, w.s(a, a) + w.t[a], 1);
    bump(st_counts, w.s(a, b) + w.t[a], sign);
  }
  auto tr_s = half_root_sum(s_counts, n, prec);
  auto tr_st = half_root_sum(st_counts, n, prec);
  tr_s.divide_sqrt(w.order);
  tr_st.divide_sqrt(w.order);

  // sigma = e^{pi i k/2} S: eigenvalues +-1.  u = e^{pi i k/3} ST: cube roots of 1.
  auto sigma = detail::PreciseComplex::unit_root(Rational(k / 4), prec) * tr_s;
  auto u = detail::PreciseComplex::unit_root(Rational(k / 6), prec) * tr_st;
  const Integer d = out.orbit_count;
  Integer re_sigma = checked_round(sigma, false, 1, 1, "trace of S");
  Integer minus_one = d - re_sigma;
  if (mpz_odd_p(minus_one.get_mpz_t())) fail(ErrorCode::InternalError, "S eigenvalue count is not integral");
  minus_one /= 2;
  Integer twice_re_u = checked_round(u, false, 2, 1, "trace of ST");
  Integer diff = checked_round(u, true, 2, 3, "trace of ST");
  Integer m0 = d + twice_re_u;
  if (m0 % 3 != 0) fail(ErrorCode::InternalError, "ST eigenvalue count is not integral");
  m0 /= 3;
  Integer rest = d - m0;
  if (mpz_odd_p(Integer(rest + diff).get_mpz_t())) fail(ErrorCode::InternalError, "ST eigenvalue split is not integral");
  Integer m1 = (rest + diff) / 2;
  Integer m2 = (rest - diff) / 2;
  if (minus_one < 0 || minus_one > d || m0 < 0 || m1 < 0 || m2 < 0)
    fail(ErrorCode::InternalError, "negative eigenvalue multiplicity");

  out.alpha_s = make_rational(minus_one, Integer(2));
  out.alpha_st = make_rational(Integer(2 * m1 + m2), Integer(3));
  Rational dim = Rational(d) + Rational(d) * k / 12 - out.alpha_s - out.alpha_st - out.alpha_t;
  if (dim.get_den() != 1) fail(ErrorCode::InternalError, "dimension formula returned " + to_string(dim));
  out.modular = dim.get_num();
  out.cusp = out.modular - out.isotropic_count;
  if (k == 2) out.cusp += invariant_dimension(m, !dual, precision_bits);
  if (out.modular < 0 || out.cusp < 0) fail(ErrorCode::InternalError, "dimension formula returned a negative value");
  return out;
}

Integer dim_modular_forms(const FiniteQuadraticModule& m, const Rational& k, bool dual, unsigned precision_bits) {
  return dimension_data(m, k, dual, precision_bits).modular;
}

Integer dim_cusp_forms(const FiniteQuadraticModule& m, const Rational& k, bool dual, unsigned precision_bits) {
  return dimension_data(m, k, dual, precision_bits).cusp;
}

Integer invariant_dimension(const FiniteQuadraticModule& m, bool dual, unsigned precision_bits) {
  WeilRepMatrices w = weil_matrices(m, dual, precision_bits);
  const std::size_t size = w.size();
  std::vector<std::size_t> fixed;
  for (std::size_t a = 0; a < size; ++a)
    if (w.t[a] == 0) fixed.push_back(a);
  if (fixed.empty()) return 0;

  using C = std::complex<long double>;
  const long double root = std::sqrt(static_cast<long double>(w.order.get_d()));
  const long double two_pi = 2 * std::acos(-1.0L);
  std::vector<std::vector<C>> rows(size, std::vector<C>(fixed.size()));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      long double angle = two_pi * static_cast<long double>(w.s(a, fixed[j])) / static_cast<long double>(w.level);
      rows[a][j] = std::polar(1.0L / root, angle) - (a == fixed[j] ? C(1) : C(0));
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < fixed.size() && rank < size; ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < size; ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[best][col])) best = r;
    if (std::abs(rows[best][col]) < 1e-9L) continue;
    std::swap(rows[best], rows[rank]);
    for (std::size_t r = rank + 1; r < size; ++r) {
      C f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < fixed.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return Integer(static_cast<unsigned long>(fixed.size() - rank));
}

ScRankBound sc_rank_bound(const GramLattice& lattice, int r_max, unsigned precision_bits) {
  if (r_max < 0) fail(ErrorCode::InvalidParameter, "r_max must be nonnegative");
  Signature sig = signature(lattice);
  if (sig.positive != 2 || sig.negative < 1)
    fail(ErrorCode::WrongSignature, "expected signature (2, b), got (" + std::to_string(sig.positive) + ", " +
                                        std::to_string(sig.negative) + ")");
  ScRankBound out;
  out.weight = make_rational(static_cast<long>(sig.negative) + 2, 2);
  out.bounds.push_back(Integer(1));
  if (r_max >= 1) {
    out.cusp_dim = dim_cusp_forms(discriminant_module(lattice), out.weight, true, precision_bits);
    out.bounds.push_back(Integer(1) + out.cusp_dim);
  }
  for (int r = 2; r <= r_max; ++r) out.bounds.push_back(std::nullopt);
  return out;
}

}  // namespace hkt
