#include "hkt/chern.hpp"

#include "hkt/error.hpp"

#include <sstream>

namespace hkt {

int ChernMonomial::degree() const {
  int d = lambda;
  for (std::size_t j = 0; j < c.size(); ++j) d += static_cast<int>(j + 1) * c[j];
  return d;
}

ChernPolynomial::ChernPolynomial(int rank) : rank_(rank) {
  if (rank < 0) fail(ErrorCode::InvalidParameter, "negative bundle rank");
}

ChernPolynomial ChernPolynomial::constant(int rank, const Rational& value) {
  ChernPolynomial p(rank);
  p.add_term({std::vector<int>(static_cast<std::size_t>(rank), 0), 0}, value);
  return p;
}

ChernPolynomial ChernPolynomial::chern_class(int rank, int j) {
  ChernPolynomial p(rank);
  if (j == 0) return constant(rank, 1);
  if (j < 0 || j > rank) return p;
  ChernMonomial m{std::vector<int>(static_cast<std::size_t>(rank), 0), 0};
  m.c[static_cast<std::size_t>(j - 1)] = 1;
  p.add_term(m, 1);
  return p;
}

ChernPolynomial ChernPolynomial::lambda(int rank) {
  ChernPolynomial p(rank);
  p.add_term({std::vector<int>(static_cast<std::size_t>(rank), 0), 1}, 1);
  return p;
}

Rational ChernPolynomial::coefficient(const ChernMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ChernPolynomial::add_term(const ChernMonomial& m, const Rational& coeff) {
  if (static_cast<int>(m.c.size()) != rank_) fail(ErrorCode::InvalidParameter, "monomial rank mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ChernPolynomial ChernPolynomial::homogeneous_component(int degree) const {
  ChernPolynomial out(rank_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace(m, c);
  return out;
}

bool ChernPolynomial::contains_c1() const {
  for (const auto& [m, c] : terms_)
    if (rank_ > 0 && m.c[0] > 0) return true;
  return false;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& o) {
  if (o.rank_ != rank_) fail(ErrorCode::InvalidParameter, "rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& o) {
  if (o.rank_ != rank_) fail(ErrorCode::InvalidParameter, "rank mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ChernPolynomial ChernPolynomial::scaled(const Rational& k) const {
  ChernPolynomial out(rank_);
  if (k == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
  return out;
}

ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b) {
  if (a.rank_ != b.rank_) fail(ErrorCode::InvalidParameter, "rank mismatch");
  ChernPolynomial out(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ChernMonomial m = ma;
      for (std::size_t j = 0; j < m.c.size(); ++j) m.c[j] += mb.c[j];
      m.lambda += mb.lambda;
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string ChernPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << hkt::to_string(c);
    first = false;
    for (std::size_t j = 0; j < m.c.size(); ++j)
      if (m.c[j] > 0) os << "*c" << j + 1 << (m.c[j] > 1 ? "^" + std::to_string(m.c[j]) : "");
    if (m.lambda > 0) os << "*l" << (m.lambda > 1 ? "^" + std::to_string(m.lambda) : "");
  }
  return os.str();
}

std::vector<ChernPolynomial> todd_series(int max_degree, int rank) {
  if (max_degree < 0) fail(ErrorCode::InvalidParameter, "negative Todd degree");
  const auto d = static_cast<std::size_t>(max_degree);

  // (1 - e^{-x}) / x = sum_m (-1)^m x^m / (m+1)!, and a_k with
  // log(x / (1 - e^{-x})) = sum_k a_k x^k.
  std::vector<Rational> g(d + 1), l(d + 1, 0), a(d + 1, 0);
  for (std::size_t m = 0; m <= d; ++m) {
    g[m] = Rational(1) / Rational(factorial(static_cast<unsigned>(m + 1)));
    if (m % 2 == 1) g[m] = -g[m];
  }
  for (std::size_t k = 1; k <= d; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j < k; ++j) s += Rational(static_cast<long>(j)) * l[j] * g[k - j];
    l[k] = g[k] - s / Rational(static_cast<long>(k));
    a[k] = -l[k];
  }

  // Newton: p_k = sum_{j<k} (-1)^{j-1} c_j p_{k-j} + (-1)^{k-1} k c_k.
  std::vector<ChernPolynomial> p(d + 1, ChernPolynomial(rank));
  for (std::size_t k = 1; k <= d; ++k) {
    ChernPolynomial pk = ChernPolynomial::chern_class(rank, static_cast<int>(k)).scaled(
        Rational(static_cast<long>(k % 2 == 1 ? k : -static_cast<long>(k))));
    for (std::size_t j = 1; j < k; ++j) {
      ChernPolynomial t = ChernPolynomial::chern_class(rank, static_cast<int>(j)) * p[k - j];
      if (j % 2 == 1) pk += t;
      else pk -= t;
    }
    p[k] = pk;
  }

  // Td = exp(L), L_k = a_k p_k; E_m = (1/m) sum_k k L_k E_{m-k}.
  std::vector<ChernPolynomial> e(d + 1, ChernPolynomial(rank));
  e[0] = ChernPolynomial::constant(rank, 1);
  for (std::size_t m = 1; m <= d; ++m) {
    ChernPolynomial acc(rank);
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k] == 0) continue;
      acc += (p[k] * e[m - k]).scaled(a[k] * Rational(static_cast<long>(k)));
    }
    e[m] = acc.scaled(Rational(1) / Rational(static_cast<long>(m)));
  }
  return e;
}

ChernPolynomial todd_component(int i, int rank) { return todd_series(i, rank).back(); }

ChernPolynomial substitute_c1(const ChernPolynomial& p, int n) {
  if (p.rank() == 0) return p;
  ChernPolynomial out(p.rank());
  const Integer factor = -n;
  for (const auto& [m, c] : p.terms()) {
    ChernMonomial r = m;
    const int e = r.c[0];
    r.c[0] = 0;
    r.lambda += e;
    Integer f = 1;
    for (int t = 0; t < e; ++t) f *= factor;
    out.add_term(r, c * Rational(f));
  }
  return out;
}

}  // namespace hkt
