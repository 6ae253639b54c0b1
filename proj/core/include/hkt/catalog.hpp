#pragma once

#include "hkt/lattice.hpp"
#include "hkt/quadratic_module.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hkt {

// Lattice JSON: {"label": string, "gram": [[int]]}. Entries may be JSON
// integers or decimal strings (for values beyond 64 bits).
std::string lattice_to_json(const GramLattice& a);
GramLattice lattice_from_json(std::string_view text);

// Module JSON: {"invariant_factors": [int], "q_diag": ["p/q"], "b_offdiag": [["p/q"]]}.
std::string module_to_json(const FiniteQuadraticModule& m);
FiniteQuadraticModule module_from_json(std::string_view text);

struct CatalogEntry {
  GramLattice lattice;
  std::string note;
};

// The lattices shipped in lattices.json, built in code.
std::vector<CatalogEntry> builtin_catalog();
std::string catalog_to_json(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(std::string_view text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

// HK_CATALOG if set, else `fallback` if it exists, else the built-in list.
std::vector<CatalogEntry> default_catalog(const std::optional<std::filesystem::path>& fallback = std::nullopt);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view label);

}  // namespace hkt
