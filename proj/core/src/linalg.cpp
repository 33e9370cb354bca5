#include "ldikit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ldikit {

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("matmul shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int &aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix to_int_matrix(const GeneratorMatrix &m) {
  IntMatrix out(m.row_count(), 2 * m.n);
  for (int r = 0; r < m.row_count(); ++r)
    for (int c = 0; c < 2 * m.n; ++c)
      out.at(r, c) = m.rows[r].entries[static_cast<size_t>(c)];
  return out;
}

namespace {

void row_swap(IntMatrix &m, int i, int j) {
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void col_swap(IntMatrix &m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

/* row i += f * row j */
void row_axpy(IntMatrix &m, int i, int j, const Int &f) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

/* col i += f * col j */
void col_axpy(IntMatrix &m, int i, int j, const Int &f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}

void row_negate(IntMatrix &m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix &a) {
  SmithDecomposition s;
  s.D = a;
  s.U = IntMatrix::identity(a.rows);
  s.V = IntMatrix::identity(a.cols);
  IntMatrix &d = s.D;

  const int bound = std::min(a.rows, a.cols);
  for (int t = 0; t < bound; ++t) {
    /* find the entry of least magnitude in the t.. submatrix */
    int pr = -1, pc = -1;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j)
        if (d.at(i, j) != 0 &&
            (pr < 0 || abs(d.at(i, j)) < abs(d.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    if (pr != t) {
      row_swap(d, t, pr);
      row_swap(s.U, t, pr);
    }
    if (pc != t) {
      col_swap(d, t, pc);
      col_swap(s.V, t, pc);
    }

    for (;;) {
      bool clean = true;
      /* clear column t with floor-quotient steps; remainders shrink */
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), d.at(i, t).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        row_axpy(d, i, t, -f);
        row_axpy(s.U, i, t, -f);
        if (d.at(i, t) != 0) {
          row_swap(d, t, i);
          row_swap(s.U, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), d.at(t, j).get_mpz_t(),
                   d.at(t, t).get_mpz_t());
        col_axpy(d, j, t, -f);
        col_axpy(s.V, j, t, -f);
        if (d.at(t, j) != 0) {
          col_swap(d, t, j);
          col_swap(s.V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      /* pivot must divide everything that remains */
      bool divides_all = true;
      for (int i = t + 1; i < d.rows && divides_all; ++i)
        for (int j = t + 1; j < d.cols && divides_all; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(),
                               d.at(t, t).get_mpz_t())) {
            row_axpy(d, t, i, 1);
            row_axpy(s.U, t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }

    if (d.at(t, t) < 0) {
      row_negate(d, t);
      row_negate(s.U, t);
    }
  }

  s.rank = 0;
  for (int t = 0; t < bound; ++t)
    if (d.at(t, t) != 0) ++s.rank;
  return s;
}

int rank_mod(const IntMatrix &a, const Int &m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  SmithDecomposition s = smith_normal_form(a);
  int rank = 0;
  for (int i = 0; i < s.rank; ++i)
    if (!mpz_divisible_p(s.diag(i).get_mpz_t(), m.get_mpz_t())) ++rank;
  return rank;
}

int rank_mod(const GeneratorMatrix &m, const Int &modulus) {
  return rank_mod(to_int_matrix(m), modulus);
}

IntMatrix integer_kernel(const IntMatrix &a) {
  SmithDecomposition s = smith_normal_form(a);
  /* a (V e_i) = U^-1 D e_i = 0 for i >= rank, and V is unimodular, so
     those columns are a basis of the full kernel lattice */
  IntMatrix out(a.cols - s.rank, a.cols);
  for (int i = s.rank; i < a.cols; ++i)
    for (int c = 0; c < a.cols; ++c) out.at(i - s.rank, c) = s.V.at(c, i);
  return out;
}

namespace {

/* Membership and solving both reduce to D y = U b with y = V^-1 x. */
std::optional<std::vector<Int>> solve_from_snf(const SmithDecomposition &s,
                                               const std::vector<Int> &b) {
  const int rows = s.U.rows, cols = s.V.rows;
  std::vector<Int> c(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) c[i] += s.U.at(i, j) * b[static_cast<size_t>(j)];
  std::vector<Int> y(cols, 0);
  const int bound = std::min(rows, cols);
  for (int i = 0; i < bound; ++i) {
    if (s.diag(i) == 0) {
      if (c[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(c[i].get_mpz_t(), s.diag(i).get_mpz_t()))
      return std::nullopt;
    y[i] = c[i] / s.diag(i);
  }
  for (int i = bound; i < rows; ++i)
    if (c[i] != 0) return std::nullopt;
  std::vector<Int> x(cols, 0);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) x[i] += s.V.at(i, j) * y[static_cast<size_t>(j)];
  return x;
}

IntMatrix transpose(const IntMatrix &m) {
  IntMatrix out(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(c, r) = m.at(r, c);
  return out;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer(const IntMatrix &a,
                                              const std::vector<Int> &b) {
  if (static_cast<int>(b.size()) != a.rows)
    throw std::invalid_argument("right side length mismatch");
  return solve_from_snf(smith_normal_form(a), b);
}

bool row_lattice_contains(const IntMatrix &m, const std::vector<Int> &e) {
  return solve_integer(transpose(m), e).has_value();
}

bool row_span_contains_mod(const IntMatrix &m, const std::vector<Int> &e,
                           const Int &q) {
  if (q < 2) throw std::invalid_argument("modulus must be at least 2");
  /* membership mod q is membership in the lattice spanned by the rows
     plus q times each unit vector */
  IntMatrix ext(m.rows + m.cols, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) ext.at(r, c) = m.at(r, c);
  for (int c = 0; c < m.cols; ++c) ext.at(m.rows + c, c) = q;
  return row_lattice_contains(ext, e);
}

LatticeMembership::LatticeMembership(const IntMatrix &row_basis)
    : snf_(smith_normal_form(transpose(row_basis))), cols_(row_basis.cols) {}

bool LatticeMembership::contains(const std::vector<Int> &e) const {
  if (static_cast<int>(e.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  return solve_from_snf(snf_, e).has_value();
}

}  // namespace ldikit
