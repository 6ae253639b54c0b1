#include "hkt/binary_forms.hpp"

#include "hkt/error.hpp"

#include <algorithm>

namespace hkt::binary {
namespace {

IntMatrix mat2(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  IntMatrix m(2, 2);
  m(0, 0) = p;
  m(0, 1) = q;
  m(1, 0) = r;
  m(1, 1) = s;
  return m;
}

IntMatrix inverse2(const IntMatrix& m) {
  Integer det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det != 1 && det != -1) fail(ErrorCode::InternalError, "matrix not in GL2(Z)");
  return mat2(det * m(1, 1), -det * m(0, 1), -det * m(1, 0), det * m(0, 0));
}

const IntMatrix& reflection() {
  static const IntMatrix j = mat2(1, 0, 0, -1);
  return j;
}

bool proper_reduced(const BinaryForm& f, const Integer& root) {
  const Integer abs_a = abs(f.a);
  return f.b <= root && root < 2 * abs_a + f.b && 2 * abs_a - f.b <= root;
}

// One step of the reduction operator on forms of non-square discriminant.
Reduction rho(const BinaryForm& f, const Integer& disc, const Integer& root) {
  const Integer abs_c = abs(f.c);
  Integer r;
  if (abs_c > root) {
    r = abs_c - mod(Integer(abs_c + f.b), Integer(2 * abs_c));
  } else {
    r = root - mod(Integer(root + f.b), Integer(2 * abs_c));
  }
  Integer s = (r + f.b) / (2 * f.c);
  BinaryForm next{f.c, r, (r * r - disc) / (4 * f.c)};
  return {next, mat2(0, -1, 1, s)};
}

std::optional<IntMatrix> proper_equivalence_indefinite(const BinaryForm& f, const BinaryForm& g) {
  Reduction rf = reduce_indefinite(f);
  Reduction rg = reduce_indefinite(g);
  for (const auto& step : reduction_cycle(rf.form)) {
    if (step.form == rg.form) return rf.transform * step.transform * inverse2(rg.transform);
  }
  return std::nullopt;
}

// Normalized bases (v, w) with v primitive isotropic and f(v x + w y) = s xy + c y^2,
// 0 <= c < s, for square discriminant s^2.
struct IsotropicBasis {
  IntMatrix basis;
  Integer c;
};

std::vector<IsotropicBasis> isotropic_bases(const BinaryForm& f) {
  const Integer disc = f.discriminant();
  const Integer s = isqrt(disc);
  std::vector<IntVector> lines;
  auto add_line = [&](Integer x, Integer y) {
    Integer g = gcd(x, y);
    x /= g;
    y /= g;
    for (const auto& l : lines)
      if ((l[0] == x && l[1] == y) || (l[0] == -x && l[1] == -y)) return;
    lines.push_back({x, y});
  };
  if (f.a == 0) {
    add_line(1, 0);
    add_line(Integer(-f.c), f.b);
  } else {
    add_line(Integer(-f.b + s), Integer(2 * f.a));
    add_line(Integer(-f.b - s), Integer(2 * f.a));
  }
  std::vector<IsotropicBasis> out;
  for (const auto& line : lines) {
    for (int sign : {1, -1}) {
      Integer p = sign * line[0];
      Integer q = sign * line[1];
      Integer g, u, w;
      // p * w - q * u == 1
      mpz_gcdext(g.get_mpz_t(), w.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      u = -u;
      IntMatrix m = mat2(p, u, q, w);
      BinaryForm t = transform(f, m);
      if (t.b < 0) {
        m(0, 1) = -m(0, 1);
        m(1, 1) = -m(1, 1);
        t = transform(f, m);
      }
      Integer shift = -floor_div(t.c, t.b);
      m(0, 1) += shift * m(0, 0);
      m(1, 1) += shift * m(1, 0);
      t = transform(f, m);
      out.push_back({m, t.c});
    }
  }
  return out;
}

std::vector<IntVector> short_vectors(const BinaryForm& f, const Integer& bound) {
  // f positive definite: 4a f(x,y) = (2ax + by)^2 + (4ac - b^2) y^2.
  const Integer delta = 4 * f.a * f.c - f.b * f.b;
  Integer ymax = isqrt(Integer(4 * f.a * bound / delta)) + 1;
  std::vector<IntVector> out;
  for (Integer y = -ymax; y <= ymax; ++y) {
    Integer xmax = isqrt(Integer(4 * f.c * bound / delta)) + 1;
    for (Integer x = -xmax; x <= xmax; ++x)
      if (evaluate(f, x, y) <= bound && (x != 0 || y != 0)) out.push_back({x, y});
  }
  return out;
}

std::vector<IntMatrix> definite_automorphisms(const BinaryForm& f) {
  BinaryForm pos = f.a > 0 ? f : BinaryForm{-f.a, -f.b, -f.c};
  std::vector<IntMatrix> out;
  auto vecs = short_vectors(pos, std::max(pos.a, pos.c));
  for (const auto& v1 : vecs) {
    if (evaluate(pos, v1[0], v1[1]) != pos.a) continue;
    for (const auto& v2 : vecs) {
      IntMatrix m = mat2(v1[0], v2[0], v1[1], v2[1]);
      Integer det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      if ((det == 1 || det == -1) && transform(pos, m) == pos) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

BinaryForm from_gram(const IntMatrix& gram) {
  if (gram.rows() != 2 || gram.cols() != 2)
    fail(ErrorCode::UnsupportedRank, "binary form requires a 2x2 Gram matrix");
  return {gram(0, 0), 2 * gram(0, 1), gram(1, 1)};
}

Integer evaluate(const BinaryForm& f, const Integer& x, const Integer& y) {
  return f.a * x * x + f.b * x * y + f.c * y * y;
}

BinaryForm transform(const BinaryForm& f, const IntMatrix& m) {
  const Integer &p = m(0, 0), &q = m(0, 1), &r = m(1, 0), &s = m(1, 1);
  return {evaluate(f, p, r), 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
          evaluate(f, q, s)};
}

Reduction reduce_definite(const BinaryForm& f) {
  const bool negative = f.a < 0;
  BinaryForm g = negative ? BinaryForm{-f.a, -f.b, -f.c} : f;
  IntMatrix m = IntMatrix::identity(2);
  while (true) {
    Integer t = floor_div(Integer(g.a - g.b), Integer(2 * g.a));
    if (t != 0) {
      IntMatrix step = mat2(1, t, 0, 1);
      g = transform(g, step);
      m = m * step;
    }
    if (g.a > g.c || (g.a == g.c && g.b < 0)) {
      IntMatrix step = mat2(0, -1, 1, 0);
      g = transform(g, step);
      m = m * step;
      continue;
    }
    break;
  }
  if (negative) g = {-g.a, -g.b, -g.c};
  return {g, m};
}

Reduction reduce_indefinite(const BinaryForm& f) {
  const Integer disc = f.discriminant();
  const Integer root = isqrt(disc);
  BinaryForm g = f;
  IntMatrix m = IntMatrix::identity(2);
  while (!proper_reduced(g, root)) {
    Reduction step = rho(g, disc, root);
    g = step.form;
    m = m * step.transform;
  }
  return {g, m};
}

std::vector<Reduction> reduction_cycle(const BinaryForm& reduced) {
  const Integer disc = reduced.discriminant();
  const Integer root = isqrt(disc);
  std::vector<Reduction> cycle;
  cycle.push_back({reduced, IntMatrix::identity(2)});
  BinaryForm g = reduced;
  IntMatrix m = IntMatrix::identity(2);
  do {
    Reduction step = rho(g, disc, root);
    g = step.form;
    m = m * step.transform;
    cycle.push_back({g, m});
  } while (!(g == reduced));
  return cycle;
}

std::optional<IntMatrix> find_equivalence(const BinaryForm& f, const BinaryForm& g) {
  const Integer disc = f.discriminant();
  if (disc == 0 || g.discriminant() == 0)
    fail(ErrorCode::DegenerateLattice, "degenerate binary form");
  if (disc != g.discriminant()) return std::nullopt;

  if (disc < 0) {
    if ((f.a > 0) != (g.a > 0)) return std::nullopt;
    Reduction rf = reduce_definite(f);
    for (bool improper : {false, true}) {
      BinaryForm h = improper ? transform(g, reflection()) : g;
      Reduction rh = reduce_definite(h);
      if (rf.form == rh.form) {
        IntMatrix m = rf.transform * inverse2(rh.transform);
        return improper ? m * reflection() : m;
      }
    }
    return std::nullopt;
  }

  if (is_square(disc)) {
    auto bf = isotropic_bases(f);
    auto bg = isotropic_bases(g);
    for (const auto& x : bf)
      for (const auto& y : bg)
        if (x.c == y.c) return x.basis * inverse2(y.basis);
    return std::nullopt;
  }

  if (auto m = proper_equivalence_indefinite(f, g)) return m;
  if (auto m = proper_equivalence_indefinite(f, transform(g, reflection())))
    return *m * reflection();
  return std::nullopt;
}

std::vector<IntMatrix> automorphism_generators(const BinaryForm& f) {
  const Integer disc = f.discriminant();
  if (disc == 0) fail(ErrorCode::DegenerateLattice, "degenerate binary form");
  std::vector<IntMatrix> gens;
  gens.push_back(mat2(-1, 0, 0, -1));

  if (disc < 0) {
    Reduction r = reduce_definite(f);
    IntMatrix back = inverse2(r.transform);
    for (const auto& a : definite_automorphisms(r.form)) gens.push_back(r.transform * a * back);
    return gens;
  }

  if (is_square(disc)) {
    auto bases = isotropic_bases(f);
    const auto& first = bases.front();
    for (const auto& other : bases)
      if (other.c == first.c) gens.push_back(other.basis * inverse2(first.basis));
    return gens;
  }

  Reduction r = reduce_indefinite(f);
  auto cycle = reduction_cycle(r.form);
  IntMatrix back = inverse2(r.transform);
  gens.push_back(r.transform * cycle.back().transform * back);
  if (auto m = proper_equivalence_indefinite(f, transform(f, reflection())))
    gens.push_back(*m * reflection());
  return gens;
}

}  // namespace hkt::binary
