#include "hkt/moduli.hpp"

#include "hkt/error.hpp"

#include <algorithm>

namespace hkt {
namespace {

// Exact decimal when the denominator has only factors 2 and 5, else p/q.
std::string show(const Rational& r) {
  Integer den = r.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return to_string(r);
  const int digits = std::max(twos, fives);
  if (digits == 0) return to_string(r);
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = r * Rational(scale);
  Integer v = scaled.get_num();
  std::string sign = v < 0 ? "-" : "";
  if (v < 0) v = -v;
  std::string body = v.get_str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits + 1) - body.size(), '0');
  body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  return sign + body;
}

Integer sigma(long m) {
  Integer s = 0;
  for (long d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

// e(S^[n]) from prod (1 - q^k)^{-24}.
Integer hilbert_euler(int n) {
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int rep = 0; rep < 24; ++rep)
      for (int m = k; m <= n; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
  return c[static_cast<std::size_t>(n)];
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::K3n: return "k3n";
    case FamilyKind::Kummer: return "kummer";
    case FamilyKind::OGDim6: return "og6";
    case FamilyKind::OGDim10: return "og10";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "k3n") return FamilyKind::K3n;
  if (name == "kummer") return FamilyKind::Kummer;
  if (name == "og6") return FamilyKind::OGDim6;
  if (name == "og10") return FamilyKind::OGDim10;
  fail(ErrorCode::InvalidParameter, "unknown family '" + std::string(name) + "' (k3n, kummer, og6, og10)");
}

Rational fujiki_k3n(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "n must be at least 1");
  Integer two_n = 1;
  for (int i = 0; i < n; ++i) two_n *= 2;
  return make_rational(factorial(static_cast<unsigned>(2 * n)), factorial(static_cast<unsigned>(n)) * two_n);
}

Rational fujiki_kummer(int n) { return fujiki_k3n(n) * Rational(n + 1); }

ModuliFamily moduli_family(FamilyKind kind, int n) {
  ModuliFamily f;
  f.kind = kind;
  switch (kind) {
    case FamilyKind::K3n:
      if (n < 1) fail(ErrorCode::InvalidParameter, "n must be at least 1");
      f.n = n;
      f.name = "K3^[" + std::to_string(n) + "]";
      f.bb_lattice = k3n_lattice(n);
      f.b2 = static_cast<int>(f.bb_lattice.rank());
      f.fujiki = fujiki_k3n(n);
      f.euler_characteristic = hilbert_euler(n);
      if (n == 1) f.note = "n = 1 is a K3 surface; the <0> summand is dropped, b2 = 22";
      break;
    case FamilyKind::Kummer:
      if (n < 1) fail(ErrorCode::InvalidParameter, "n must be at least 1");
      f.n = n;
      f.name = "Kummer_" + std::to_string(n);
      f.bb_lattice = kummer_lattice(n);
      f.b2 = 7;
      f.fujiki = fujiki_kummer(n);
      f.euler_characteristic = Integer(n + 1) * (n + 1) * (n + 1) * sigma(n + 1);
      break;
    case FamilyKind::OGDim6:
      f.n = 3;
      f.name = "OG_dim6";
      f.bb_lattice = orthogonal_sum({repeat_sum(hyperbolic_plane(), 3), rank_one(-2), rank_one(-2)}, "OG_dim6");
      f.b2 = 8;
      f.euler_characteristic = 1920;
      f.canonical_lattice = false;
      f.note = "lattice up to genus not specified; signature-correct placeholder; printed label for this type: OG10";
      break;
    case FamilyKind::OGDim10:
      f.n = 5;
      f.name = "OG_dim10";
      f.bb_lattice = orthogonal_sum(
          {repeat_sum(hyperbolic_plane(), 3), repeat_sum(e8(true), 2), rank_one(-2), rank_one(-2)}, "OG_dim10");
      f.b2 = 24;
      f.euler_characteristic = 176904;
      f.canonical_lattice = false;
      f.note = "lattice up to genus not specified; signature-correct placeholder; printed label for this type: OG6";
      break;
  }
  f.fiber_dim = 2 * f.n;
  if (static_cast<int>(f.bb_lattice.rank()) != f.b2) fail(ErrorCode::InternalError, "registry rank mismatch");
  return f;
}

std::vector<ModuliFamily> builtin_families(int n) {
  if (n < 1) fail(ErrorCode::InvalidParameter, "n must be at least 1");
  return {moduli_family(FamilyKind::K3n, n), moduli_family(FamilyKind::Kummer, n),
          moduli_family(FamilyKind::OGDim6), moduli_family(FamilyKind::OGDim10)};
}

const HypothesisCheck* HypothesisReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

HypothesisReport hypothesis_report(const ModuliFamily& fam, const HypothesisParams& params) {
  HypothesisReport rep;
  rep.family = fam.name;
  const int m = fam.b2;
  const Rational eighth = make_rational(m - 3, 8);
  const Rational quarter = make_rational(m - 3, 4);
  const int b = fam.moduli_dim();

  {
    HypothesisCheck c{"Thm 4.3.2", "m >= 6 and n < (m - 3)/8", "", false, ""};
    bool rank_ok = m >= 6;
    bool n_ok = Rational(fam.n) < eighth;
    c.instance = std::to_string(fam.n) + " < " + show(eighth);
    if (!rank_ok) c.instance += "; m = " + std::to_string(m) + " < 6";
    c.verdict = rank_ok && n_ok;
    c.conclusion = c.verdict ? "NL_hom = R_hom; CTC holds"
                   : rank_ok ? "only NL_hom = DR_hom is available"
                             : "does not apply";
    rep.checks.push_back(c);
  }
  {
    HypothesisCheck c{"Thm 8.1.1", "n < (m - 3)/8", std::to_string(fam.n) + " < " + show(eighth), false, ""};
    c.verdict = Rational(fam.n) < eighth;
    c.conclusion = c.verdict ? "every class in CH^{2n} of the universal family is c_{2n} up to NL-supported classes"
                             : "does not apply";
    rep.checks.push_back(c);
  }
  if (params.rank_sigma) {
    const int rs = *params.rank_sigma;
    HypothesisCheck c{"Prop 4.1.2", "m - rank(Sigma) >= 5",
                      std::to_string(m) + " - " + std::to_string(rs) + " = " + std::to_string(m - rs) + " >= 5", false, ""};
    c.verdict = rs >= 1 && m - rs >= 5;
    c.conclusion = c.verdict ? "NL^1 = Pic" : "does not apply";
    rep.checks.push_back(c);
  }
  if (params.codim) {
    HypothesisCheck c{"Thm 8.2.1", "codim < (m - 3)/4", std::to_string(*params.codim) + " < " + show(quarter), false, ""};
    c.verdict = *params.codim >= 0 && Rational(*params.codim) < quarter;
    c.conclusion = c.verdict ? "cup products agree up to NL-supported classes" : "does not apply";
    rep.checks.push_back(c);
  }
  if (params.b_list) {
    const auto& bl = *params.b_list;
    bool zero_tail = true;
    int first_bad = 0;
    for (std::size_t j = 0; j < bl.size(); ++j)
      if (bl[j] != 0 && Rational(static_cast<long>(j + 1)) >= quarter) {
        zero_tail = false;
        if (!first_bad) first_bad = static_cast<int>(j + 1);
      }
    HypothesisCheck c{"Thm 8.3.1", "b_j = 0 for j >= (m - 3)/4, and b = m - 3 >= 3", "", false, ""};
    c.instance = "j >= " + show(quarter) + ": " +
                 (zero_tail ? std::string("all b_j vanish") : "b_" + std::to_string(first_bad) + " != 0") + "; b = " +
                 std::to_string(b) + " >= 3";
    c.verdict = zero_tail && b >= 3;
    c.conclusion = c.verdict ? "the kappa class lies in NL_hom" : "does not apply";
    rep.checks.push_back(c);
  }
  if (params.r) {
    HypothesisCheck c{"Prop 9.2.1", "1 <= r <= b",
                      "1 <= " + std::to_string(*params.r) + " <= " + std::to_string(b), false, ""};
    c.verdict = *params.r >= 1 && *params.r <= b;
    c.conclusion = c.verdict ? "dim SC^r <= dim SC^{r-1} + dim S_{(b+2)/2}(dual rho)" : "does not apply";
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace hkt
