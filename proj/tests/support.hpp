// Shared fixtures and independent oracles for the test suite.
//
// Everything in here is deliberately written against the public headers only,
// and the oracles (Hermite form, Bareiss determinant, GF(p) rank, brute-force
// undetectable-error search) use different algorithms than the library so a
// bug has to show up twice to slip through.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <ldikit/ldi.hpp>
#include <ldikit/linalg.hpp>
#include <ldikit/pauli.hpp>

namespace testsupport {

using ldikit::GeneratorMatrix;
using ldikit::Int;
using ldikit::IntMatrix;
using ldikit::LocalDimension;
using ldikit::PauliVector;

inline GeneratorMatrix mk(int n, LocalDimension dim,
                          const std::vector<std::vector<long>>& rows) {
  GeneratorMatrix m(n, dim);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != 2 * n)
      throw std::invalid_argument("mk: row length");
    PauliVector v(n);
    for (int i = 0; i < 2 * n; ++i) v.entries[i] = r[i];
    m.append_row(v);
  }
  return m;
}

// Six-generator distance-3 code on seven registers, B = 1.  The X half is the
// binary parity-check matrix of the [7,4] Hamming code, the Z half is the same
// support with alternating signs chosen so every pairwise product vanishes
// over the integers.
inline const std::vector<std::vector<long>>& steane_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1, 1, 1, 1, 0, 0, 0, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 1, 1, 0, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 1, 1, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 1, -1, 1, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, -1, 0, -1, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 0, 0, 1, -1, 0, -1, 1}};
  return rows;
}

// Same code in its textbook mod-2 form: all signs +1.
inline const std::vector<std::vector<long>>& steane_mod2_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1, 1, 1, 1, 0, 0, 0, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 1, 0, 1, 1, 0, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 1, 1, /**/ 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 1, 1, 1, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 0, 1, 1, 0, 1, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, /**/ 0, 0, 1, 1, 0, 1, 1}};
  return rows;
}

inline GeneratorMatrix steane(LocalDimension dim = LocalDimension::prime(2)) {
  return mk(7, dim, steane_rows());
}

inline GeneratorMatrix steane_mod2() {
  return mk(7, LocalDimension::prime(2), steane_mod2_rows());
}

// ---------------------------------------------------------------------------
// Independent integer linear algebra (row-style Hermite form).

struct Hnf {
  // Nonzero rows in echelon order, pivots positive.
  std::vector<std::vector<Int>> rows;
  std::vector<int> pivot_col;
};

inline Hnf hermite_form(std::vector<std::vector<Int>> a) {
  Hnf h;
  if (a.empty()) return h;
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    // Repeatedly reduce column c below row r until one nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = r; i < static_cast<int>(a.size()); ++i) {
        if (a[i][c] == 0) continue;
        if (best < 0 || cmp(abs(a[i][c]), abs(a[best][c])) < 0) best = i;
      }
      if (best < 0) break;
      std::swap(a[r], a[best]);
      if (a[r][c] < 0)
        for (auto& x : a[r]) x = -x;
      bool clean = true;
      for (int i = r + 1; i < static_cast<int>(a.size()); ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];  // truncation is fine, we loop to fixpoint
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    bool have_pivot = r < static_cast<int>(a.size()) && a[r][c] != 0;
    if (!have_pivot) continue;
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    h.pivot_col.push_back(c);
    ++r;
  }
  a.resize(r);
  h.rows = std::move(a);
  return h;
}

inline int integer_rank_oracle(const std::vector<std::vector<Int>>& a) {
  return static_cast<int>(hermite_form(a).rows.size());
}

inline bool lattice_contains_oracle(const Hnf& h, std::vector<Int> e) {
  for (std::size_t k = 0; k < h.rows.size(); ++k) {
    const int c = h.pivot_col[k];
    if (e[c] == 0) continue;
    if (e[c] % h.rows[k][c] != 0) return false;
    Int q = e[c] / h.rows[k][c];
    for (std::size_t j = 0; j < e.size(); ++j) e[j] -= q * h.rows[k][j];
  }
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

inline std::vector<std::vector<Int>> rows_of(const GeneratorMatrix& m) {
  std::vector<std::vector<Int>> out;
  out.reserve(m.rows.size());
  for (const auto& r : m.rows) out.push_back(r.entries);
  return out;
}

// Fraction-free determinant (Bareiss).
inline Int bareiss_det(IntMatrix a) {
  if (a.rows != a.cols) throw std::invalid_argument("det: square only");
  const int n = a.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

// Plain Gaussian elimination over GF(p).
inline int gf_rank_oracle(std::vector<std::vector<long long>> a, long long p) {
  if (a.empty()) return 0;
  const int cols = static_cast<int>(a[0].size());
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(a.size()); ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    // invert a[r][c] by Fermat
    long long inv = 1, base = a[r][c] % p, exp = p - 2;
    while (exp) {
      if (exp & 1) inv = inv * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    for (auto& x : a[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == r || a[i][c] == 0) continue;
      long long f = a[i][c];
      for (int j = 0; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Random mutually commuting generator sets.
//
// Start from a structured solution (identity X block, symmetrized Z block so
// every pairwise product is 0 mod q) and scramble with product-preserving
// moves: row swaps, row adds, unit row scales, register swaps, and the
// (x,z) -> (z,-x) register rotation.  css = true keeps X rows and Z rows pure
// and skips the rotation.

inline GeneratorMatrix random_commuting_code(std::mt19937_64& rng, int n,
                                             long q, bool css = false) {
  auto uni = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  std::vector<std::vector<long>> rows;
  if (!css) {
    const int r = static_cast<int>(uni(1, n));
    std::vector<std::vector<long>> x2(r, std::vector<long>(n - r));
    std::vector<std::vector<long>> z2(r, std::vector<long>(n - r));
    std::vector<std::vector<long>> z1(r, std::vector<long>(r));
    for (auto& v : x2)
      for (auto& x : v) x = uni(0, q - 1);
    for (auto& v : z2)
      for (auto& x : v) x = uni(0, q - 1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j <= i; ++j) z1[i][j] = uni(0, q - 1);
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        long dot = 0;
        for (int t = 0; t < n - r; ++t)
          dot += x2[i][t] * z2[j][t] - x2[j][t] * z2[i][t];
        z1[i][j] = (((z1[j][i] + dot) % q) + q) % q;
      }
    for (int i = 0; i < r; ++i) {
      std::vector<long> row(2 * n, 0);
      row[i] = 1;
      for (int t = 0; t < n - r; ++t) row[r + t] = x2[i][t];
      for (int j = 0; j < r; ++j) row[n + j] = z1[i][j];
      for (int t = 0; t < n - r; ++t) row[n + r + t] = z2[i][t];
      rows.push_back(row);
    }
  } else {
    const int rx = static_cast<int>(uni(1, std::max(1, n - 1)));
    std::vector<std::vector<long long>> a(rx, std::vector<long long>(n));
    for (auto& v : a)
      for (auto& x : v) x = uni(0, q - 1);
    // mod-q kernel of a via elimination (q prime here)
    std::vector<std::vector<long long>> work = a;
    std::vector<int> pivot_of_col(n, -1);
    int r = 0;
    for (int c = 0; c < n && r < rx; ++c) {
      int piv = -1;
      for (int i = r; i < rx; ++i)
        if (work[i][c] % q != 0) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(work[r], work[piv]);
      long long inv = 1, base = ((work[r][c] % q) + q) % q, exp = q - 2;
      while (exp) {
        if (exp & 1) inv = inv * base % q;
        base = base * base % q;
        exp >>= 1;
      }
      for (auto& x : work[r]) x = ((x * inv) % q + q) % q;
      for (int i = 0; i < rx; ++i) {
        if (i == r) continue;
        long long f = work[i][c] % q;
        for (int j = 0; j < n; ++j)
          work[i][j] = ((work[i][j] - f * work[r][j]) % q + q) % q;
      }
      pivot_of_col[c] = r;
      ++r;
    }
    std::vector<std::vector<long>> kernel;
    for (int c = 0; c < n; ++c) {
      if (pivot_of_col[c] >= 0) continue;
      std::vector<long> v(n, 0);
      v[c] = 1;
      for (int c2 = 0; c2 < n; ++c2)
        if (pivot_of_col[c2] >= 0)
          v[c2] = static_cast<long>((q - work[pivot_of_col[c2]][c] % q) % q);
      kernel.push_back(v);
    }
    const int rz = static_cast<int>(uni(1, static_cast<long>(kernel.size())));
    for (int i = 0; i < rx; ++i) {
      std::vector<long> row(2 * n, 0);
      for (int j = 0; j < n; ++j) row[j] = static_cast<long>(a[i][j]);
      rows.push_back(row);
    }
    for (int i = 0; i < rz; ++i) {
      std::vector<long> row(2 * n, 0);
      for (;;) {
        std::fill(row.begin(), row.end(), 0);
        for (const auto& k : kernel) {
          long c = uni(0, q - 1);
          for (int j = 0; j < n; ++j)
            row[n + j] = (row[n + j] + c * k[j]) % q;
        }
        bool nonzero = false;
        for (int j = 0; j < n; ++j) nonzero |= row[n + j] != 0;
        if (nonzero) break;
      }
      rows.push_back(row);
    }
  }

  const int nrows = static_cast<int>(rows.size());
  int css_split = 0;  // css: adds and swaps must stay inside one half
  if (css)
    for (const auto& r : rows) {
      bool purex = true;
      for (int j = 0; j < n; ++j) purex &= r[n + j] == 0;
      if (purex) ++css_split;
    }
  const int nops = 3 * n + 4;
  for (int t = 0; t < nops; ++t) {
    const int kind = static_cast<int>(uni(0, css ? 3 : 4));
    if (kind == 0 && nrows > 1) {  // add c * row j to row i
      int i = static_cast<int>(uni(0, nrows - 1));
      int j = static_cast<int>(uni(0, nrows - 1));
      if (css) {  // keep halves pure
        bool i_x = i < css_split, j_x = j < css_split;
        if (i_x != j_x) continue;
      }
      if (i == j) continue;
      long c = uni(1, q - 1);
      for (int s = 0; s < 2 * n; ++s)
        rows[i][s] = (rows[i][s] + c * rows[j][s]) % q;
    } else if (kind == 1 && nrows > 1) {
      int i = static_cast<int>(uni(0, nrows - 1));
      int j = static_cast<int>(uni(0, nrows - 1));
      if (css) {
        bool i_x = i < css_split, j_x = j < css_split;
        if (i_x != j_x) continue;
      }
      std::swap(rows[i], rows[j]);
    } else if (kind == 2) {  // unit scale
      int i = static_cast<int>(uni(0, nrows - 1));
      long c = uni(1, q - 1);
      for (int s = 0; s < 2 * n; ++s) rows[i][s] = rows[i][s] * c % q;
    } else if (kind == 3 && n > 1) {  // register swap
      int i = static_cast<int>(uni(0, n - 1));
      int j = static_cast<int>(uni(0, n - 1));
      for (auto& row : rows) {
        std::swap(row[i], row[j]);
        std::swap(row[n + i], row[n + j]);
      }
    } else if (kind == 4) {  // (x, z) -> (z, -x) on one register
      int i = static_cast<int>(uni(0, n - 1));
      for (auto& row : rows) {
        long x = row[i], z = row[n + i];
        row[i] = z;
        row[n + i] = ((-x) % q + q) % q;
      }
    }
  }
  return mk(n, LocalDimension::prime(q), rows);
}

// ---------------------------------------------------------------------------
// Brute-force search for the smallest-weight error with exactly zero integer
// syndrome (and, when the generators do not span full rank over the integers,
// outside their row lattice).  Coefficients per register range over the box
// [-box, box]^2 minus the origin.  Returns 0 when nothing is found.

inline int naive_undetectable_weight(const GeneratorMatrix& m, int w_max,
                                     int box) {
  const int n = m.n;
  const int r = m.row_count();
  const bool full_rank = integer_rank_oracle(rows_of(m)) == n;
  Hnf lattice = hermite_form(rows_of(m));

  std::vector<std::vector<long long>> mx(r, std::vector<long long>(n));
  std::vector<std::vector<long long>> mz(r, std::vector<long long>(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      mx[i][j] = m.rows[i].entries[j].get_si();
      mz[i][j] = m.rows[i].entries[n + j].get_si();
    }

  std::vector<int> support;
  std::vector<std::pair<int, int>> choice;
  std::vector<long long> syn(r, 0);

  std::function<bool(int)> fill = [&](int depth) -> bool {
    if (depth == static_cast<int>(support.size())) {
      for (int i = 0; i < r; ++i)
        if (syn[i] != 0) return false;
      if (!full_rank) {
        std::vector<Int> e(2 * n, 0);
        for (std::size_t s = 0; s < support.size(); ++s) {
          e[support[s]] = choice[s].first;
          e[n + support[s]] = choice[s].second;
        }
        if (lattice_contains_oracle(lattice, e)) return false;
      }
      return true;
    }
    const int site = support[depth];
    for (int a = -box; a <= box; ++a)
      for (int b = -box; b <= box; ++b) {
        if (a == 0 && b == 0) continue;
        for (int i = 0; i < r; ++i)
          syn[i] += mx[i][site] * b - mz[i][site] * a;
        choice[depth] = {a, b};
        if (fill(depth + 1)) return true;
        for (int i = 0; i < r; ++i)
          syn[i] -= mx[i][site] * b - mz[i][site] * a;
      }
    return false;
  };

  for (int w = 1; w <= w_max; ++w) {
    support.assign(w, 0);
    choice.assign(w, {0, 0});
    std::vector<int> comb(w);
    for (int i = 0; i < w; ++i) comb[i] = i;
    while (true) {
      support.assign(comb.begin(), comb.end());
      std::fill(syn.begin(), syn.end(), 0);
      if (fill(0)) return w;
      int i = w - 1;
      while (i >= 0 && comb[i] == n - w + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return 0;
}

}  // namespace testsupport
