#pragma once

#include "hkt/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hkt {

enum class FamilyKind { K3n, Kummer, OGDim6, OGDim10 };

struct ModuliFamily {
  FamilyKind kind = FamilyKind::K3n;
  std::string name;
  int n = 1;          // half of the complex dimension
  int fiber_dim = 2;  // complex dimension 2n
  int b2 = 0;         // second Betti number m_Lambda
  std::optional<Rational> fujiki;
  std::optional<Integer> euler_characteristic;
  GramLattice bb_lattice;
  bool canonical_lattice = true;  // false for signature-only placeholders
  std::string note;

  int moduli_dim() const noexcept { return b2 - 3; }
};

std::string family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

// n is ignored for the two O'Grady types (n = 3 and n = 5).
ModuliFamily moduli_family(FamilyKind kind, int n = 1);
// K3^[n], Kummer_n, and the two O'Grady types.
std::vector<ModuliFamily> builtin_families(int n);

Rational fujiki_k3n(int n);
Rational fujiki_kummer(int n);

struct HypothesisParams {
  std::optional<int> rank_sigma;
  std::optional<int> codim;
  std::optional<std::vector<int>> b_list;  // b_1, ..., b_2n
  std::optional<int> r;
};

struct HypothesisCheck {
  std::string id;
  std::string hypothesis;
  std::string instance;
  bool verdict = false;
  std::string conclusion;
};

struct HypothesisReport {
  std::string family;
  std::vector<HypothesisCheck> checks;

  const HypothesisCheck* find(std::string_view id) const;
};

// Checks whose parameters are missing are skipped.
HypothesisReport hypothesis_report(const ModuliFamily& fam, const HypothesisParams& params = {});

}  // namespace hkt
