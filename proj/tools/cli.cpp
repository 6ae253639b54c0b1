#include "cli.hpp"

#include "hkt/catalog.hpp"
#include "hkt/cusp_dim.hpp"
#include "hkt/error.hpp"
#include "hkt/kappa.hpp"
#include "hkt/lattice.hpp"
#include "hkt/moduli.hpp"
#include "hkt/nl_cycles.hpp"
#include "hkt/quadratic_module.hpp"
#include "hkt/weil.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace hkt::cli {
namespace {

using json = nlohmann::ordered_json;

#ifndef HKT_CATALOG_PATH
#define HKT_CATALOG_PATH ""
#endif

struct Common {
  std::string format = "text";
  unsigned precision_bits = kDefaultPrecisionBits;
  unsigned threads = 1;
  bool json() const { return format == "json"; }
};

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

json lattice_json(const GramLattice& a) { return json::parse(lattice_to_json(a)); }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string kappa_name(const std::vector<int>& b) { return "κ̃_{" + join_ints(b) + "}"; }

std::string lambda_text(int e) {
  if (e == 0) return "";
  return e == 1 ? "λ" : "λ^" + std::to_string(e);
}

// c * body, written p body / q.
std::string scaled_text(const Rational& c, const std::string& body) {
  if (body.empty()) return to_string(c);
  Integer p = c.get_num(), q = c.get_den();
  std::string head = p == 1 ? "" : p == -1 ? "-" : p.get_str();
  return head + body + (q == 1 ? "" : "/" + q.get_str());
}

std::string chi_text(const ChiLinear& c, const std::string& body) {
  if (c.chi == 0) return scaled_text(c.constant, body);
  if (c.constant == 0) return scaled_text(c.chi, "χ" + body);
  std::string chi_part = scaled_text(c.chi < 0 ? Rational(-c.chi) : c.chi, "χ");
  std::string inner = to_string(c.constant) + (c.chi < 0 ? " - " : " + ") + chi_part;
  return body.empty() ? inner : "(" + inner + ")" + body;
}

// lambda polynomial with chi-linear coefficients, highest power first.
std::string units_text(const KappaExpression& e) {
  if (e.is_zero()) return "0";
  std::string s;
  const auto& terms = e.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string t = chi_text(it->second, lambda_text(it->first.lambda));
    if (s.empty())
      s = t;
    else if (t.front() == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s;
}

std::string symbol_body(const KappaKey& k) {
  std::string s;
  if (!k.a.empty()) s = "κ_{" + join_ints(k.a) + ";" + join_ints(k.b) + "}";
  else if (!k.b.empty()) s = kappa_name(k.b);
  return s + lambda_text(k.lambda);
}

// Rational combination of symbols written as (content)(integer combination).
std::string factored_text(const KappaExpression& e) {
  std::vector<std::pair<KappaKey, Rational>> terms;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) terms.emplace_back(it->first, it->second.constant);
  if (terms.empty()) return "0";
  // Bare symbols first, then lambda multiples of lower ones.
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first.lambda < y.first.lambda; });
  Integer num = 0, den = 1;
  for (const auto& [k, c] : terms) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational content = make_rational(num, den);
  if (terms.front().second < 0) content = -content;
  std::string inner;
  for (const auto& [k, c] : terms) {
    Rational x = c / content;
    std::string t = scaled_text(x, symbol_body(k));
    if (inner.empty())
      inner = t;
    else if (t.front() == '-')
      inner += " - " + t.substr(1);
    else
      inner += " + " + t;
  }
  if (content == 1) return inner;
  return "(" + to_string(content) + ")(" + inner + ")";
}

json units_json(const KappaExpression& e) {
  json arr = json::array();
  for (const auto& [k, c] : e.terms())
    arr.push_back({{"lambda_pow", k.lambda}, {"coeff", to_string(c.constant)}, {"chi_coeff", to_string(c.chi)}});
  return arr;
}

json relation_json(const Relation& r) {
  json lhs = json::array();
  for (const auto& [k, c] : r.lhs.terms()) {
    json t{{"kappa", k.b}, {"lambda_pow", k.lambda}, {"coeff", to_string(c.constant)}, {"chi_coeff", to_string(c.chi)}};
    if (!k.a.empty()) t["a"] = k.a;
    lhs.push_back(std::move(t));
  }
  return {{"degree", r.degree}, {"lhs", std::move(lhs)}, {"rhs", units_json(r.rhs)}};
}

// All b-tuples of length 2n with sum j b_j = target, lexicographically.
void tuples(int len, int target, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int j = static_cast<int>(cur.size()) + 1;
  if (static_cast<int>(cur.size()) == len) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int b = 0; b * j <= target; ++b) {
    cur.push_back(b);
    tuples(len, target - b * j, cur, out);
    cur.pop_back();
  }
}

struct LatticeInput {
  std::string name;
  int n = 0;
  int g = 0;
  std::string gram;
  std::string file;
};

void add_lattice_options(CLI::App* sub, LatticeInput& in) {
  sub->add_option("--name", in.name, "U, E8, Ln, LKn, K3, Lg, OG6, OG10 or a catalog label");
  sub->add_option("--n", in.n, "parameter for Ln and LKn");
  sub->add_option("--g", in.g, "genus for Lg");
  sub->add_option("--gram", in.gram, "lattice JSON or a bare Gram matrix [[...]]");
  sub->add_option("--file", in.file, "file holding lattice JSON");
}

bool has_lattice(const LatticeInput& in) { return !in.name.empty() || !in.gram.empty() || !in.file.empty(); }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidParameter, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

GramLattice parse_lattice_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') return lattice_from_json("{\"gram\":" + text + "}");
  return lattice_from_json(text);
}

std::vector<CatalogEntry> catalog() { return default_catalog(std::filesystem::path(HKT_CATALOG_PATH)); }

GramLattice resolve_lattice(const LatticeInput& in) {
  int given = !in.name.empty() + !in.gram.empty() + !in.file.empty();
  if (given != 1) fail(ErrorCode::InvalidParameter, "give exactly one of --name, --gram, --file");
  if (!in.gram.empty()) return parse_lattice_text(in.gram);
  if (!in.file.empty()) return parse_lattice_text(read_file(in.file));

  auto cat = catalog();
  auto lookup = [&](const std::string& label) -> std::optional<GramLattice> {
    if (const auto* e = find_entry(cat, label)) return e->lattice;
    return std::nullopt;
  };
  const std::string& nm = in.name;
  auto need = [&](int v, const char* flag) {
    if (v < 1) fail(ErrorCode::InvalidParameter, "--name " + nm + " needs " + flag + " >= 1");
  };
  if (nm == "Ln") {
    need(in.n, "--n");
    return lookup("L_" + std::to_string(in.n)).value_or(k3n_lattice(in.n));
  }
  if (nm == "LKn") {
    need(in.n, "--n");
    return lookup("L_K," + std::to_string(in.n)).value_or(kummer_lattice(in.n));
  }
  if (nm == "Lg") {
    if (in.g < 2) fail(ErrorCode::InvalidParameter, "--name Lg needs --g >= 2");
    return polarized_k3_lattice(in.g);
  }
  if (nm == "U") return lookup("U").value_or(hyperbolic_plane());
  if (nm == "E8" || nm == "E8_neg") return lookup("E8(-1)").value_or(e8(true));
  if (nm == "K3") return lookup("L_K3").value_or(k3_lattice());
  if (nm == "OG6") return lookup("OG_dim6").value_or(moduli_family(FamilyKind::OGDim6).bb_lattice);
  if (nm == "OG10") return lookup("OG_dim10").value_or(moduli_family(FamilyKind::OGDim10).bb_lattice);
  if (auto l = lookup(nm)) return *l;
  fail(ErrorCode::InvalidParameter, "unknown lattice name '" + nm + "'");
}

IntVector parse_vector(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be a JSON array");
  IntVector v;
  for (const auto& x : j) {
    if (x.is_number_integer()) v.emplace_back(x.get<long>());
    else if (x.is_string()) v.emplace_back(x.get<std::string>());
    else fail(ErrorCode::ParseError, "vector entries must be integers");
  }
  return v;
}

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

json module_json(const FiniteQuadraticModule& m) { return json::parse(module_to_json(m)); }

std::string module_text(const FiniteQuadraticModule& m) {
  if (m.is_trivial()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < m.generators(); ++i) s += (i ? " + " : "") + ("Z/" + m.invariant_factors()[i].get_str());
  s += ", q = [";
  for (std::size_t i = 0; i < m.generators(); ++i) s += (i ? ", " : "") + to_string(m.q_diag()[i]);
  return s + "]";
}

// ---- lattice ----

struct LatticeArgs {
  LatticeInput in;
  std::string vector;
  bool list = false;
};

json lattice_report(const GramLattice& a, const Common& c) {
  json j = lattice_json(a);
  j["rank"] = a.rank();
  j["even"] = a.is_even();
  Integer det = determinant(a);
  j["determinant"] = integer_json(det);
  if (det != 0) {
    Signature s = signature(a);
    j["signature"] = {s.positive, s.negative};
    if (a.is_even()) {
      auto m = discriminant_module(a);
      j["discriminant"] = module_json(m);
      j["discriminant_order"] = integer_json(m.order());
      j["milgram"] = milgram_invariant(a, c.precision_bits);
    }
  }
  return j;
}

void lattice_text(const json& j, std::ostream& out) {
  out << "label: " << (j["label"].get<std::string>().empty() ? "-" : j["label"].get<std::string>()) << "\n";
  out << "rank: " << j["rank"] << "\n";
  out << "even: " << (j["even"].get<bool>() ? "yes" : "no") << "\n";
  out << "determinant: " << j["determinant"].dump() << "\n";
  if (j.contains("signature")) out << "signature: (" << j["signature"][0] << "," << j["signature"][1] << ")\n";
  if (j.contains("discriminant_order")) {
    out << "discriminant group order: " << j["discriminant_order"] << "\n";
    out << "milgram invariant: " << j["milgram"] << "\n";
  }
}

int cmd_lattice(const LatticeArgs& args, const Common& c, std::ostream& out) {
  if (args.list) {
    auto cat = catalog();
    json arr = json::array();
    for (const auto& e : cat) {
      json j = lattice_report(e.lattice, c);
      if (!e.note.empty()) j["note"] = e.note;
      arr.push_back(std::move(j));
    }
    if (c.json()) {
      out << json{{"lattices", arr}}.dump(2) << "\n";
    } else {
      for (const auto& j : arr) {
        out << j["label"].get<std::string>() << ": rank " << j["rank"] << ", signature (" << j["signature"][0] << ","
            << j["signature"][1] << "), det " << j["determinant"];
        if (j.contains("note")) out << "  [" << j["note"].get<std::string>() << "]";
        out << "\n";
      }
    }
    return kOk;
  }
  GramLattice a = resolve_lattice(args.in);
  if (!args.vector.empty()) {
    LatticeVector v(parse_vector(args.vector));
    if (v.size() != a.rank()) fail(ErrorCode::InvalidParameter, "vector length does not match lattice rank");
    Integer h2 = a.pairing(v.coords(), v.coords());
    Complement comp = orthogonal_complement_with_basis(a, v);
    json j = lattice_report(comp.lattice, c);
    j["h_square"] = integer_json(h2);
    j["basis"] = matrix_json(comp.basis.transpose());
    if (c.json()) {
      out << j.dump(2) << "\n";
    } else {
      out << "orthogonal complement of a vector of square " << h2.get_str() << "\n";
      lattice_text(j, out);
    }
    return kOk;
  }
  json j = lattice_report(a, c);
  if (c.json()) {
    out << j.dump(2) << "\n";
  } else {
    lattice_text(j, out);
    if (a.rank() <= 8) out << "gram: " << matrix_text(a.gram()) << "\n";
  }
  return kOk;
}

// ---- weil ----

struct WeilArgs {
  LatticeInput in;
  std::string module;
  bool dual = false;
  std::string weight;
  bool sc_bound = false;
  bool matrices = false;
};

int cmd_weil(const WeilArgs& args, const Common& c, std::ostream& out) {
  std::optional<GramLattice> lattice;
  FiniteQuadraticModule m;
  if (!args.module.empty()) {
    if (has_lattice(args.in)) fail(ErrorCode::InvalidParameter, "give either a lattice or --module, not both");
    m = module_from_json(args.module.front() == '{' ? args.module : read_file(args.module));
  } else {
    lattice = resolve_lattice(args.in);
    m = discriminant_module(*lattice);
  }
  const int s = milgram_invariant(m, c.precision_bits);
  json j;
  if (lattice) {
    Signature sig = signature(*lattice);
    j["lattice"] = lattice_json(*lattice);
    j["signature"] = {sig.positive, sig.negative};
  }
  j["module"] = module_json(m);
  j["order"] = integer_json(m.order());
  j["milgram"] = s;
  j["dual"] = args.dual;

  if (m.order() <= 4096) {
    auto w = weil_matrices(m, args.dual, c.precision_bits);
    auto rep = check_weil_relations(w);
    j["level"] = w.level;
    j["relations"] = {{"t_diagonal_unitary", rep.t_diagonal_unitary}, {"s_symmetric", rep.s_symmetric},
                      {"unitary", rep.unitary},
                      {"gauss_sum_is_root", rep.gauss_sum_is_root},
                      {"s_squared", rep.s_squared},
                      {"braid", rep.braid},
                      {"s_fourth", rep.s_fourth}};
    if (!rep.all()) fail(ErrorCode::InternalError, "Weil representation relations failed");
    if (args.matrices) {
      j["t_exponents"] = w.t;
      json rows = json::array();
      for (std::size_t i = 0; i < w.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < w.size(); ++k) row.push_back(w.s(i, k));
        rows.push_back(std::move(row));
      }
      j["s_exponents"] = std::move(rows);
    }
  } else if (args.matrices) {
    fail(ErrorCode::CapExceeded, "explicit matrices are limited to modules of order <= 4096");
  }

  if (!args.weight.empty()) {
    Rational k = parse_rational(args.weight);
    auto d = dimension_data(m, k, args.dual, c.precision_bits);
    j["dimension"] = {{"k", to_string(k)}, {"dual", args.dual}, {"dim", integer_json(d.cusp)},
                      {"dim_modular", integer_json(d.modular)}};
  }
  if (args.sc_bound) {
    if (!lattice) fail(ErrorCode::InvalidParameter, "--sc-bound needs a lattice");
    auto b = sc_rank_bound(*lattice, 1, c.precision_bits);
    json bounds = json::array();
    for (const auto& x : b.bounds) bounds.push_back(x ? integer_json(*x) : json(nullptr));
    j["sc_rank_bound"] = {{"k", to_string(b.weight)}, {"cusp_dim", integer_json(b.cusp_dim)}, {"bounds", bounds}};
  }

  if (c.json()) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (lattice) out << "lattice: " << (lattice->label().empty() ? "-" : lattice->label()) << "\n";
  out << "discriminant module: " << module_text(m) << "\n";
  out << "order: " << m.order().get_str() << "\n";
  out << "milgram invariant: " << s << "\n";
  if (j.contains("relations")) {
    out << "level: " << j["level"] << "\n";
    out << "weil relations (" << (args.dual ? "dual" : "standard") << "): all hold exactly\n";
  }
  if (j.contains("dimension"))
    out << "dim S_" << j["dimension"]["k"].get<std::string>() << " = " << j["dimension"]["dim"].dump()
        << ", dim M_" << j["dimension"]["k"].get<std::string>() << " = " << j["dimension"]["dim_modular"].dump() << "\n";
  if (j.contains("sc_rank_bound")) {
    const auto& b = j["sc_rank_bound"];
    out << "special cycle rank bound (weight " << b["k"].get<std::string>() << "): r=0: " << b["bounds"][0].dump()
        << ", r=1: " << b["bounds"][1].dump() << "\n";
  }
  return kOk;
}

// ---- kappa ----

struct KappaArgs {
  int n = 2;
  int imax = 6;
  std::string chi;
  int truncate_b = 0;
  bool keep_odd = false;
};

int cmd_kappa(const KappaArgs& args, const Common& c, std::ostream& out) {
  if (args.n < 1) fail(ErrorCode::InvalidParameter, "--n must be at least 1");
  if (args.imax < 0) fail(ErrorCode::InvalidParameter, "--imax must be nonnegative");
  if (args.imax > 12) fail(ErrorCode::CapExceeded, "--imax is capped at 12");
  if (args.truncate_b < 0 || args.truncate_b == 1)
    fail(ErrorCode::InvalidParameter, "--truncate-b needs b >= 2");
  std::optional<Rational> chi;
  if (!args.chi.empty()) chi = parse_rational(args.chi);

  GrrOptions plain;
  plain.pushforward.odd_vanish = !args.keep_odd;
  if (args.truncate_b) plain.truncate_lambda_at = args.truncate_b - 1;
  GrrOptions euler = plain;
  euler.pushforward.euler = true;

  auto relations = grr_relations(args.n, args.imax, plain);
  auto euler_relations = grr_relations(args.n, args.imax, euler);

  json j;
  j["n"] = args.n;
  j["imax"] = args.imax;
  j["odd_classes_vanish"] = !args.keep_odd;
  if (chi) j["chi"] = to_string(*chi);
  if (args.truncate_b) j["truncate_b"] = args.truncate_b;
  json rels = json::array();
  for (const auto& r : relations) rels.push_back(relation_json(r));
  j["relations"] = std::move(rels);

  struct Solved {
    std::vector<int> b;
    LambdaReduction red;
  };
  std::vector<Solved> solved;
  for (int d = 0; d <= args.imax; ++d) {
    std::vector<std::vector<int>> list;
    std::vector<int> cur;
    tuples(2 * args.n, 2 * args.n + d, cur, list);
    for (auto& b : list) {
      KappaExpression target = kappa_symbol({}, b, args.n, euler.pushforward);
      if (args.truncate_b) target = target.truncated(args.truncate_b - 1);
      if (target.is_zero()) continue;
      solved.push_back({b, reduce_to_lambda(target, euler_relations)});
    }
  }
  json sol = json::array();
  std::vector<KappaExpression> constraints;
  for (const auto& s : solved) {
    json e{{"kappa", s.b}, {"degree", s.red.degree}, {"determined", s.red.determined}};
    if (s.red.determined) {
      e["value"] = units_json(s.red.value);
      if (chi) e["value_at_chi"] = units_json(s.red.value.with_chi(*chi));
    } else {
      e["free_dimension"] = s.red.free_dimension;
    }
    sol.push_back(std::move(e));
    for (const auto& k : s.red.constraints)
      if (std::find(constraints.begin(), constraints.end(), k) == constraints.end()) constraints.push_back(k);
  }
  j["solved"] = std::move(sol);
  json cons = json::array();
  for (const auto& k : constraints) cons.push_back(units_json(k));
  j["constraints"] = std::move(cons);

  std::optional<LiteratureComparison> lit;
  if (args.n == 2 && args.imax >= 2 && !args.truncate_b) {
    lit = compare_with_literature();
    json sym = json::array(), eng = json::array(), pr = json::array();
    for (std::size_t i = 0; i < lit->symbols.size(); ++i) {
      sym.push_back(lit->symbols[i]);
      eng.push_back(to_string(lit->engine[i]));
      pr.push_back(to_string(lit->printed[i]));
    }
    auto cj = [](const ChiLinear& v) { return json{{"coeff", to_string(v.constant)}, {"chi_coeff", to_string(v.chi)}}; };
    j["literature_comparison"] = {{"scale", 60480},
                                  {"symbols", sym},
                                  {"engine", eng},
                                  {"printed", pr},
                                  {"coefficients_agree", lit->coefficients_agree},
                                  {"engine_combination", cj(lit->engine_combination)},
                                  {"printed_relation_combination", cj(lit->printed_relation_combination)},
                                  {"printed_value", cj(lit->printed_value)},
                                  {"values_agree", lit->values_agree}};
  }

  if (c.json()) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "GRR relations, n = " << args.n << " (κ̃_{0,...,0,1} kept as a symbol";
  out << (args.keep_odd ? "" : ", odd Chern classes vanish");
  if (args.truncate_b) out << ", λ^" << args.truncate_b - 1 << " = 0";
  out << ")\n";
  for (std::size_t i = 0; i < relations.size(); ++i)
    out << "  i = " << i << ": " << factored_text(relations[i].lhs) << " = " << units_text(relations[i].rhs) << "\n";
  out << "solved values (κ̃_{0,...,0,1} = χ)\n";
  for (const auto& s : solved) {
    out << "  " << kappa_name(s.b) << " = ";
    if (!s.red.determined) {
      out << "undetermined (free dimension " << s.red.free_dimension << ")\n";
      continue;
    }
    out << units_text(s.red.value);
    if (chi) out << " = " << units_text(s.red.value.with_chi(*chi));
    out << "\n";
  }
  for (const auto& k : constraints) out << "  constraint: " << units_text(k) << " = 0\n";
  if (lit) {
    out << "comparison with the printed degree-2 identity (coefficients x 60480)\n";
    for (std::size_t i = 0; i < lit->symbols.size(); ++i)
      out << "  " << kappa_name(lit->symbols[i]) << ": engine " << to_string(lit->engine[i]) << ", printed "
          << to_string(lit->printed[i]) << (lit->engine[i] == lit->printed[i] ? "" : "  DISCREPANCY") << "\n";
    out << "  engine: " << to_string(lit->engine[0]) << kappa_name(lit->symbols[0]) << " - "
        << to_string(Rational(-lit->engine[1])) << kappa_name(lit->symbols[1]) << " = "
        << chi_text(lit->engine_combination, "λ^2") << "\n";
    out << "  printed relation implies " << kappa_name(lit->symbols[0]) << " - 9" << kappa_name(lit->symbols[1])
        << " = " << chi_text(lit->printed_relation_combination, "λ^2") << "\n";
    out << "  printed value: " << chi_text(lit->printed_value, "λ^2")
        << (lit->values_agree ? "" : "  DISCREPANCY") << "\n";
  }
  return kOk;
}

// ---- nl ----

struct NlArgs {
  int g = 2;
  long max_disc = 64;
  long max_index = 1000;
};

int cmd_nl(const NlArgs& args, const Common& c, std::ostream& out) {
  if (args.g < 2) fail(ErrorCode::InvalidParameter, "--g must be at least 2");
  if (args.max_disc < 1) fail(ErrorCode::InvalidParameter, "--max-disc must be positive");
  if (args.max_index < 1) fail(ErrorCode::InvalidParameter, "--max-index must be positive");
  if (args.max_index > 100000) fail(ErrorCode::CapExceeded, "--max-index is capped at 100000");
  NLFamily fam = nl_family(args.g, Integer(args.max_disc), c.threads);
  // Every index occurring in the family is at most sqrt(max_disc / 4).
  Integer needed = isqrt(Integer(args.max_disc));
  if (needed > args.max_index) fail(ErrorCode::CapExceeded, "family needs sublattice index up to " + needed.get_str());
  BasisChange bc = nl_basis_change(fam, c.threads);

  json j;
  j["g"] = args.g;
  j["h_square"] = integer_json(fam.h_square);
  j["max_disc"] = args.max_disc;
  json members = json::array();
  for (const auto& m : fam.members) {
    json e = lattice_json(m);
    e["disc"] = integer_json(determinant(m));
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  j["basis_change"] = matrix_json(bc.matrix);
  j["inverse"] = matrix_json(bc.inverse);
  j["determinant"] = integer_json(bc.determinant);

  if (c.json()) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "NL family g = " << args.g << ", h^2 = " << fam.h_square.get_str() << ", |disc| <= " << args.max_disc << ": "
      << fam.members.size() << " lattices\n";
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    out << "  [" << i << "] " << matrix_text(fam.members[i].gram()) << " disc " << determinant(fam.members[i]).get_str()
        << "\n";
  out << "Z(i) = c(i) + sum m(i,j) c(j):\n";
  std::size_t off = 0;
  for (std::size_t i = 0; i < bc.matrix.rows(); ++i)
    for (std::size_t k = 0; k < bc.matrix.cols(); ++k)
      if (i != k && bc.matrix(i, k) != 0) {
        out << "  m(" << i << "," << k << ") = " << bc.matrix(i, k).get_str() << "\n";
        ++off;
      }
  out << "off-diagonal entries: " << off << "\n";
  out << "determinant: " << bc.determinant.get_str() << "\n";
  bool integral_inverse = (bc.matrix * bc.inverse) == IntMatrix::identity(bc.matrix.rows());
  out << "inverse integral: " << (integral_inverse ? "yes" : "no") << "\n";
  return kOk;
}

// ---- check ----

struct CheckArgs {
  std::string family = "k3n";
  int n = 1;
  std::optional<int> rank_sigma;
  std::optional<int> codim;
  std::string b_list;
  std::optional<int> r;
};

int cmd_check(const CheckArgs& args, const Common& c, std::ostream& out) {
  ModuliFamily fam = moduli_family(parse_family_kind(args.family), args.n);
  HypothesisParams p;
  p.rank_sigma = args.rank_sigma;
  p.codim = args.codim;
  p.r = args.r;
  if (!args.b_list.empty()) {
    std::vector<int> bl;
    std::stringstream ss(args.b_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        bl.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad --b-list entry '" + tok + "'");
      }
    }
    p.b_list = std::move(bl);
  }
  auto rep = hypothesis_report(fam, p);
  Signature sig = signature(fam.bb_lattice);

  json j;
  j["family"] = fam.name;
  j["n"] = fam.n;
  j["fiber_dim"] = fam.fiber_dim;
  j["b2"] = fam.b2;
  j["moduli_dim"] = fam.moduli_dim();
  j["signature"] = {sig.positive, sig.negative};
  j["fujiki"] = fam.fujiki ? json(to_string(*fam.fujiki)) : json(nullptr);
  j["euler_characteristic"] = fam.euler_characteristic ? integer_json(*fam.euler_characteristic) : json(nullptr);
  j["canonical_lattice"] = fam.canonical_lattice;
  if (!fam.note.empty()) j["note"] = fam.note;
  json checks = json::array();
  for (const auto& ch : rep.checks)
    checks.push_back({{"id", ch.id},
                      {"hypothesis", ch.hypothesis},
                      {"instance", ch.instance},
                      {"verdict", ch.verdict},
                      {"conclusion", ch.conclusion}});
  j["checks"] = std::move(checks);

  if (c.json()) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << fam.name << ": dim " << fam.fiber_dim << ", b2 = " << fam.b2 << ", signature " << signature_text(sig)
      << ", moduli dim " << fam.moduli_dim();
  if (fam.fujiki) out << ", Fujiki " << to_string(*fam.fujiki);
  if (fam.euler_characteristic) out << ", χ = " << fam.euler_characteristic->get_str();
  out << "\n";
  if (!fam.note.empty()) out << "note: " << fam.note << "\n";
  for (const auto& ch : rep.checks)
    out << ch.id << ": " << ch.instance << " - " << (ch.verdict ? "HOLDS" : "FAILS") << " (" << ch.conclusion << ")\n";
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return kCapExceeded;
    case ErrorCode::InconsistentForm:
    case ErrorCode::InternalError: return kInternalFailure;
    default: return kInvalidInput;
  }
}

int report_error(const Common& c, std::string_view code, const std::string& detail, int exit, std::ostream& out,
                 std::ostream& err) {
  if (c.json())
    out << json{{"error", code}, {"detail", detail}}.dump() << "\n";
  else
    err << "error: " << code << ": " << detail << "\n";
  return exit;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, Weil representation and tautological class computations", "hkt"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--precision-bits", common.precision_bits, "MPFR precision for Gauss sums")
      ->check(CLI::Range(64u, 100000u));
  app.add_option("--threads", common.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));

  LatticeArgs la;
  auto* lat = app.add_subcommand("lattice", "lattice invariants and orthogonal complements");
  add_lattice_options(lat, la.in);
  lat->add_option("--vector", la.vector, "primitive vector [x1,...]; report its orthogonal complement");
  lat->add_flag("--catalog", la.list, "list the lattice catalog");

  WeilArgs wa;
  auto* weil = app.add_subcommand("weil", "discriminant module, Weil representation and dimensions");
  add_lattice_options(weil, wa.in);
  weil->add_option("--module", wa.module, "module JSON or a file holding it");
  weil->add_flag("--dual", wa.dual, "use the dual representation");
  weil->add_option("--k", wa.weight, "weight p/q for the dimension of cusp forms");
  weil->add_flag("--sc-bound", wa.sc_bound, "special cycle rank bound (signature (2,b) lattices)");
  weil->add_flag("--matrices", wa.matrices, "print T and sqrt|D| S as exponents of zeta_level");

  KappaArgs ka;
  auto* kap = app.add_subcommand("kappa", "GRR relations among kappa classes");
  kap->add_option("--n", ka.n, "half fibre dimension");
  kap->add_option("--imax", ka.imax, "largest relation degree");
  kap->add_option("--chi", ka.chi, "numeric Euler characteristic of the fibre");
  kap->add_option("--truncate-b", ka.truncate_b, "set lambda^(b-1) = 0");
  kap->add_flag("--keep-odd", ka.keep_odd, "do not assume odd fibre Chern classes vanish");

  NlArgs na;
  auto* nl = app.add_subcommand("nl", "special to connected cycle basis change on the K3 period space");
  nl->add_option("--g", na.g, "genus, h^2 = 2g - 2");
  nl->add_option("--max-disc", na.max_disc, "largest |disc| of family members");
  nl->add_option("--max-index", na.max_index, "largest sublattice index enumerated");

  CheckArgs ca;
  auto* chk = app.add_subcommand("check", "numeric hypotheses of the main theorems");
  chk->add_option("--family", ca.family, "k3n, kummer, og6 or og10");
  chk->add_option("--n", ca.n, "half dimension for k3n and kummer");
  chk->add_option("--rank-sigma", ca.rank_sigma, "rank of Sigma");
  chk->add_option("--codim", ca.codim, "codimension");
  chk->add_option("--b-list", ca.b_list, "comma separated b_1,...,b_2n");
  chk->add_option("--r", ca.r, "special cycle codimension r");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (std::find(args.begin(), args.end(), "json") != args.end()) common.format = "json";
    return report_error(common, "invalid-argument", e.what(), kInvalidInput, out, err);
  }

  try {
    if (lat->parsed()) return cmd_lattice(la, common, out);
    if (weil->parsed()) return cmd_weil(wa, common, out);
    if (kap->parsed()) return cmd_kappa(ka, common, out);
    if (nl->parsed()) return cmd_nl(na, common, out);
    return cmd_check(ca, common, out);
  } catch (const Error& e) {
    return report_error(common, error_code_name(e.code()), e.what(), exit_code_for(e.code()), out, err);
  } catch (const std::exception& e) {
    return report_error(common, "internal-error", e.what(), kInternalFailure, out, err);
  }
}

}  // namespace hkt::cli
