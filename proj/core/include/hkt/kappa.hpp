#pragma once

#include "hkt/chern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hkt {

// constant + chi * chi_coeff, chi the Euler number of the fibre.
struct ChiLinear {
  Rational constant = 0;
  Rational chi = 0;

  bool is_zero() const { return constant == 0 && chi == 0; }
  Rational at(const Rational& chi_value) const { return constant + chi * chi_value; }
  ChiLinear& operator+=(const ChiLinear& o) {
    constant += o.constant;
    chi += o.chi;
    return *this;
  }
  ChiLinear& operator-=(const ChiLinear& o) {
    constant -= o.constant;
    chi -= o.chi;
    return *this;
  }
  ChiLinear operator*(const Rational& k) const { return {constant * k, chi * k}; }
  friend bool operator==(const ChiLinear&, const ChiLinear&) = default;
  std::string to_string() const;
};

// lambda^lambda * kappa_{a; b}. A key with empty a and b is the unit (a pure
// power of lambda); a non-empty b has length 2n.
struct KappaKey {
  std::vector<int> a;
  std::vector<int> b;
  int lambda = 0;

  bool is_unit() const noexcept { return a.empty() && b.empty(); }
  int degree(int n) const;
  auto operator<=>(const KappaKey&) const = default;
};

class KappaExpression {
 public:
  explicit KappaExpression(int n = 1) : n_(n) {}

  static KappaExpression unit(int n, int lambda_power, const ChiLinear& coeff);

  int fiber_half_dim() const noexcept { return n_; }
  const std::map<KappaKey, ChiLinear>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ChiLinear coefficient(const KappaKey& k) const;

  void add_term(const KappaKey& k, const ChiLinear& c);
  KappaExpression& operator+=(const KappaExpression& o);
  KappaExpression& operator-=(const KappaExpression& o);
  KappaExpression scaled(const Rational& k) const;
  KappaExpression times_lambda(int power) const;
  KappaExpression truncated(int lambda_bound) const;  // drop lambda^e, e >= bound
  KappaExpression with_chi(const Rational& chi) const;

  // Degree common to all terms; nullopt for the zero expression. Throws
  // DegreeMismatch when terms disagree.
  std::optional<int> degree() const;
  std::string to_string() const;

  friend bool operator==(const KappaExpression&, const KappaExpression&) = default;

 private:
  int n_;
  std::map<KappaKey, ChiLinear> terms_;
};

struct PushforwardOptions {
  bool euler = false;       // kappa_{0,...,0,1} -> chi
  bool odd_vanish = false;  // odd fibre Chern classes vanish
  bool keep_c1 = false;     // carry c_1 as the index b_1 instead of rejecting it
};

// pi_* of a polynomial in the relative Chern classes and lambda.
KappaExpression pushforward(const ChernPolynomial& p, const PushforwardOptions& options = {});

struct Relation {
  int degree = 0;
  KappaExpression lhs;
  KappaExpression rhs;  // units only
  std::optional<int> lambda_bound;
};

struct GrrOptions {
  PushforwardOptions pushforward;
  std::optional<int> truncate_lambda_at;
};

// pi_*(td_{i+2n}) = sum_{j=0}^n (-j lambda)^i / i! for 0 <= i <= i_max.
std::vector<Relation> grr_relations(int n, int i_max, const GrrOptions& options = {});

struct LambdaReduction {
  bool determined = false;
  int degree = 0;
  KappaExpression value;  // units only, when determined
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  std::size_t free_dimension = 0;  // unknowns - rank
  // Consequences of the relations that involve no kappa symbol.
  std::vector<KappaExpression> constraints;
};

LambdaReduction reduce_to_lambda(const KappaExpression& target, const std::vector<Relation>& relations);

// Symbol kappa_{a; b} with |b| = 2n, after substituting c_1 and applying the
// vanishing rules. Nonzero a-exponents are kept formally.
KappaExpression kappa_symbol(const std::vector<int>& a, const std::vector<int>& b, int n,
                             const PushforwardOptions& options = {});

// All b-tuples of length 2n whose symbol survives the vanishing rules and has
// degree between 0 and max_degree, ordered by degree then lexicographically.
std::vector<std::vector<int>> surviving_tuples(int n, int max_degree, const PushforwardOptions& options);

// Degree-2 relation for n = 2 with c_1 kept as b_1, compared with the printed
// identity (1/60480)(k_{0,3,0,0} - 9 k_{0,1,0,1} - 5 k_{2,0,0,1} + 11 k_{2,2,0,0}) = 5 l^2/2
// and the printed value k_{0,3,0,0} - 9 k_{0,1,0,1} = (42/84 + 11 chi/45360) l^2.
struct LiteratureComparison {
  std::vector<std::vector<int>> symbols;  // b-tuples compared
  std::vector<Rational> engine;           // coefficients, scaled by 60480
  std::vector<Rational> printed;
  KappaExpression engine_relation;        // full relation lhs, c_1 kept
  ChiLinear engine_combination;           // value of engine[0] k_{0,3,0,0} + engine[1] k_{0,1,0,1}
  ChiLinear printed_relation_combination; // k_{0,3,0,0} - 9 k_{0,1,0,1} implied by the printed relation
  ChiLinear printed_value;                // 42/84 + 11 chi/45360
  bool coefficients_agree = false;
  bool values_agree = false;
};
LiteratureComparison compare_with_literature();

}  // namespace hkt
