#include "hkt/catalog.hpp"

#include "hkt/error.hpp"
#include "hkt/moduli.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace hkt {
namespace {

using nlohmann::ordered_json;

ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from(const ordered_json& v) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0) fail(ErrorCode::ParseError, "bad integer '" + v.get<std::string>() + "'");
    return z;
  }
  fail(ErrorCode::ParseError, "expected an integer, got " + v.dump());
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

ordered_json lattice_json(const GramLattice& a) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.rank(); ++j) row.push_back(integer_json(a.gram()(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"label", a.label()}, {"gram", std::move(rows)}};
}

GramLattice lattice_from(const ordered_json& j) {
  if (!j.is_object() || !j.contains("gram")) fail(ErrorCode::ParseError, "lattice JSON needs a \"gram\" field");
  const auto& g = j.at("gram");
  if (!g.is_array()) fail(ErrorCode::ParseError, "\"gram\" must be an array of rows");
  IntMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_array() || g[i].size() != g.size()) fail(ErrorCode::ParseError, "Gram matrix must be square");
    for (std::size_t k = 0; k < g.size(); ++k) m(i, k) = integer_from(g[i][k]);
  }
  std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  return GramLattice(std::move(m), std::move(label));
}

}  // namespace

std::string lattice_to_json(const GramLattice& a) { return lattice_json(a).dump(); }

GramLattice lattice_from_json(std::string_view text) { return lattice_from(parse(text)); }

std::string module_to_json(const FiniteQuadraticModule& m) {
  ordered_json orders = ordered_json::array(), q = ordered_json::array(), b = ordered_json::array();
  for (const auto& d : m.invariant_factors()) orders.push_back(integer_json(d));
  for (const auto& v : m.q_diag()) q.push_back(to_string(v));
  for (std::size_t i = 0; i < m.generators(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.generators(); ++j) row.push_back(to_string(m.bilinear()(i, j)));
    b.push_back(std::move(row));
  }
  return ordered_json{{"invariant_factors", orders}, {"q_diag", q}, {"b_offdiag", b}}.dump();
}

FiniteQuadraticModule module_from_json(std::string_view text) {
  auto j = parse(text);
  if (!j.is_object() || !j.contains("invariant_factors") || !j.contains("q_diag"))
    fail(ErrorCode::ParseError, "module JSON needs \"invariant_factors\" and \"q_diag\"");
  std::vector<Integer> orders;
  for (const auto& v : j.at("invariant_factors")) orders.push_back(integer_from(v));
  std::vector<Rational> q;
  for (const auto& v : j.at("q_diag")) {
    if (!v.is_string() && !v.is_number_integer()) fail(ErrorCode::ParseError, "q_diag entries must be \"p/q\" strings");
    q.push_back(parse_rational(v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>())));
  }
  const std::size_t r = orders.size();
  RatMatrix b(r, r);
  if (j.contains("b_offdiag")) {
    const auto& rows = j.at("b_offdiag");
    if (!rows.is_array() || rows.size() != r) fail(ErrorCode::ParseError, "b_offdiag must be an r x r array");
    for (std::size_t i = 0; i < r; ++i) {
      if (!rows[i].is_array() || rows[i].size() != r) fail(ErrorCode::ParseError, "b_offdiag must be an r x r array");
      for (std::size_t k = 0; k < r; ++k) {
        const auto& v = rows[i][k];
        b(i, k) = parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
  } else {
    for (std::size_t i = 0; i < r; ++i) b(i, i) = mod(q[i] / 2, Integer(1));
  }
  return FiniteQuadraticModule(std::move(orders), std::move(q), std::move(b));
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({hyperbolic_plane(), "hyperbolic plane"});
  out.push_back({e8(true), "negative definite E8"});
  for (int n = 1; n <= 5; ++n)
    out.push_back({k3n_lattice(n), n == 1 ? "K3 surfaces: the <0> summand is dropped" : "K3^[n] type"});
  for (int n = 1; n <= 4; ++n) out.push_back({kummer_lattice(n), "generalized Kummer type"});
  for (auto kind : {FamilyKind::OGDim6, FamilyKind::OGDim10}) {
    auto fam = moduli_family(kind);
    out.push_back({fam.bb_lattice, "placeholder with the right rank and signature; lattice up to genus not specified"});
  }
  out.push_back({k3_lattice(),
                 "U^3 + E8(-1)^2; a printed variant U^2 + E8(-1)^3 has signature (3, 27) and is not used"});
  return out;
}

std::string catalog_to_json(const std::vector<CatalogEntry>& entries) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : entries) {
    auto j = lattice_json(e.lattice);
    if (!e.note.empty()) j["note"] = e.note;
    arr.push_back(std::move(j));
  }
  ordered_json root{{"lattices", std::move(arr)}};
  // One lattice per line keeps the file diffable.
  std::ostringstream os;
  os << "{\n  \"lattices\": [\n";
  const auto& list = root.at("lattices");
  for (std::size_t i = 0; i < list.size(); ++i) os << "    " << list[i].dump() << (i + 1 < list.size() ? ",\n" : "\n");
  os << "  ]\n}\n";
  return os.str();
}

std::vector<CatalogEntry> catalog_from_json(std::string_view text) {
  auto j = parse(text);
  const ordered_json* list = &j;
  if (j.is_object() && j.contains("lattices")) list = &j.at("lattices");
  if (!list->is_array()) fail(ErrorCode::ParseError, "catalog must be an array or {\"lattices\": [...]}");
  std::vector<CatalogEntry> out;
  for (const auto& e : *list) {
    std::string note = e.contains("note") && e.at("note").is_string() ? e.at("note").get<std::string>() : "";
    out.push_back({lattice_from(e), std::move(note)});
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return catalog_from_json(buf.str());
}

std::vector<CatalogEntry> default_catalog(const std::optional<std::filesystem::path>& fallback) {
  if (const char* env = std::getenv("HK_CATALOG"); env && *env) return load_catalog(env);
  if (fallback && std::filesystem::exists(*fallback)) return load_catalog(*fallback);
  return builtin_catalog();
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog, std::string_view label) {
  for (const auto& e : catalog)
    if (e.lattice.label() == label) return &e;
  return nullptr;
}

}  // namespace hkt
