#include "hkt/matrix.hpp"

#include "hkt/error.hpp"

#include <utility>

namespace hkt {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (!input.square()) fail(ErrorCode::InvalidParameter, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& input) {
  const std::size_t n = input.rows();
  RatMatrix a = input;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorCode::DegenerateLattice, "matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      a.add_row(i, c, f);
      inv.add_row(i, c, f);
    }
  }
  return inv;
}

std::size_t rank(const RatMatrix& input) {
  RatMatrix a = input;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      a.add_row(i, r, Rational(-a(i, c) / a(r, c)));
    }
    ++r;
  }
  return r;
}

std::vector<Integer> SmithForm::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(diag.rows(), diag.cols()); ++i) out.push_back(diag(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), IntMatrix::identity(cols), m};
  IntMatrix& a = s.diag;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return s;
      a.swap_rows(t, pi);
      s.left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      s.right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        a.add_row(i, t, Integer(-q));
        s.left.add_row(i, t, Integer(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        a.add_col(j, t, Integer(-q));
        s.right.add_col(j, t, Integer(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain on the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row(t, i, Integer(1));
            s.left.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.left(t, j) = -s.left(t, j);
    }
  }
  return s;
}

IntMatrix hermite_columns(const IntMatrix& input) {
  if (!input.square()) fail(ErrorCode::InvalidParameter, "hermite_columns expects a square matrix");
  const std::size_t n = input.rows();
  IntMatrix h = input;
  // Column operations only; process rows bottom-up so the result is upper triangular.
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t r = n - 1 - step;
    // Combine columns 0..r so that only column r has a nonzero entry in row r.
    for (std::size_t j = 0; j < r; ++j) {
      while (h(r, j) != 0) {
        if (h(r, r) == 0 || abs(h(r, j)) < abs(h(r, r))) {
          h.swap_cols(j, r);
          continue;
        }
        Integer q = floor_div(h(r, j), h(r, r));
        h.add_col(j, r, Integer(-q));
      }
    }
    if (h(r, r) == 0) fail(ErrorCode::DependentVectors, "hermite_columns: matrix is singular");
    if (h(r, r) < 0)
      for (std::size_t i = 0; i < n; ++i) h(i, r) = -h(i, r);
  }
  // Reduce entries to the right of each pivot.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = r + 1; j < n; ++j) {
      Integer q = floor_div(h(r, j), h(r, r));
      if (q != 0) h.add_col(j, r, Integer(-q));
    }
  return h;
}

IntMatrix integer_kernel(std::span<const Integer> row) {
  const std::size_t n = row.size();
  IntMatrix a(1, n);
  for (std::size_t j = 0; j < n; ++j) a(0, j) = row[j];
  SmithForm s = smith_normal_form(a);
  // a * right = left^{-1} * diag; diag has at most one nonzero entry (column 0).
  std::size_t first_zero = (s.diag(0, 0) == 0) ? 0 : 1;
  IntMatrix k(n, n - first_zero);
  for (std::size_t j = first_zero; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - first_zero) = s.right(i, j);
  return k;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (inv(i, j).get_den() != 1) fail(ErrorCode::InternalError, "matrix is not unimodular");
      out(i, j) = inv(i, j).get_num();
    }
  return out;
}

}  // namespace hkt
