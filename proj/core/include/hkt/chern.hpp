#pragma once

#include "hkt/arith.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hkt {

// lambda^lambda * prod_j c_j^c[j-1]
struct ChernMonomial {
  std::vector<int> c;
  int lambda = 0;

  int degree() const;
  auto operator<=>(const ChernMonomial&) const = default;
};

// Polynomial in the Chern classes c_1..c_rank of a rank-`rank` bundle and a
// base class lambda of degree 1. The zero polynomial has no terms.
class ChernPolynomial {
 public:
  explicit ChernPolynomial(int rank = 0);

  static ChernPolynomial constant(int rank, const Rational& value);
  static ChernPolynomial chern_class(int rank, int j);  // c_j, zero for j > rank
  static ChernPolynomial lambda(int rank);

  int rank() const noexcept { return rank_; }
  int fiber_dim() const noexcept { return rank_ / 2; }
  const std::map<ChernMonomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ChernMonomial& m) const;

  void add_term(const ChernMonomial& m, const Rational& coeff);
  ChernPolynomial homogeneous_component(int degree) const;
  bool contains_c1() const;

  ChernPolynomial& operator+=(const ChernPolynomial& o);
  ChernPolynomial& operator-=(const ChernPolynomial& o);
  ChernPolynomial scaled(const Rational& k) const;
  friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
  friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
  friend ChernPolynomial operator*(const ChernPolynomial& a, const ChernPolynomial& b);
  friend bool operator==(const ChernPolynomial&, const ChernPolynomial&) = default;

  std::string to_string() const;

 private:
  int rank_;
  std::map<ChernMonomial, Rational> terms_;
};

// Degree-i part of prod x_k / (1 - e^{-x_k}) written in c_1..c_rank.
ChernPolynomial todd_component(int i, int rank);
// td_0, ..., td_max_degree in one pass.
std::vector<ChernPolynomial> todd_series(int max_degree, int rank);

// Replace c_1 of the relative tangent bundle by -n lambda.
ChernPolynomial substitute_c1(const ChernPolynomial& p, int n);

}  // namespace hkt
