#pragma once

#include <optional>
#include <vector>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* Dense integer matrix with exact entries. Small and simple on purpose:
   everything in this library is desk scale (tens of rows and columns). */
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a; /* row major, size rows*cols */

  IntMatrix() = default;
  IntMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  Int &at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int &at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static IntMatrix identity(int k);
  bool operator==(const IntMatrix &) const = default;
};

IntMatrix matmul(const IntMatrix &a, const IntMatrix &b);

/* Treats each generator as a row of 2n integers. */
IntMatrix to_int_matrix(const GeneratorMatrix &m);

/* U * a * V = D with U, V unimodular and D diagonal, nonnegative, each
   diagonal entry dividing the next. rank is the count of nonzero entries. */
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  int rank = 0;

  Int diag(int i) const { return D.at(i, i); }
};

SmithDecomposition smith_normal_form(const IntMatrix &a);

/* Rank of a over Z_m for any modulus m >= 2: the number of invariant
   factors of a that are nonzero modulo m. Works for composite m, where
   plain elimination does not. */
int rank_mod(const IntMatrix &a, const Int &m);
int rank_mod(const GeneratorMatrix &m, const Int &modulus);

/* Basis of { v : a v = 0 } over Z, one basis vector per returned row.
   The basis spans the full kernel lattice (it is saturated, not a finite
   index sublattice). Row count is cols - rank. */
IntMatrix integer_kernel(const IntMatrix &a);

/* Whether e lies in the lattice generated by the rows of m over Z. */
bool row_lattice_contains(const IntMatrix &m, const std::vector<Int> &e);

/* Whether e mod q lies in the row span of m over Z_q (any q >= 2).
   Equivalent to membership in the lattice spanned by the rows of m
   together with q times each unit vector. */
bool row_span_contains_mod(const IntMatrix &m, const std::vector<Int> &e,
                           const Int &q);

/* One integer solution x of a x = b, if any exists. */
std::optional<std::vector<Int>> solve_integer(const IntMatrix &a,
                                              const std::vector<Int> &b);

/* Reusable membership tester: factors its matrix once, then answers many
   queries. Used by the distance searches, where the same lattice is probed
   for every candidate error. */
class LatticeMembership {
public:
  explicit LatticeMembership(const IntMatrix &row_basis);
  bool contains(const std::vector<Int> &e) const;

private:
  SmithDecomposition snf_;
  int cols_ = 0;
};

/* --- canonicalization over a prime field ---------------------------- */

/* One reversible step of the canonicalization. Replaying the recorded
   list against the original input reproduces the canonical matrix entry
   for entry, so the transcript doubles as an audit trail.

     Swap          rows i and j trade places
     Scale         row i *= c
     AddMultiple   row i += c * row j
     ReduceRow     row i reduced entrywise into [0, c)
     RegisterSwap  registers i and j trade places (x and z columns move
                   together)
     DftSwap       register i trades x and z powers: (x, z) -> (z, -x) */
enum class RowOpKind { Swap, Scale, AddMultiple, ReduceRow, RegisterSwap, DftSwap };

struct RowOp {
  RowOpKind kind;
  int i = 0;
  int j = 0;
  Int c = 0;

  bool operator==(const RowOp &) const = default;
};

void apply_row_op(GeneratorMatrix &m, const RowOp &op);
GeneratorMatrix replay_ops(const GeneratorMatrix &input,
                           const std::vector<RowOp> &ops);

/* Result of Gaussian elimination over Z_q, q prime. The first rank rows
   carry an exact identity block in the x part of register slots
   0..rank-1 (exact over the integers, not just mod q: entries are reduced
   representatives in [0, q)). Rows beyond rank are exactly zero.
   register_map[slot] is the input register now sitting at that slot.
   pivot_cols[i] locates pivot i in the input column layout: the x column
   of that register, or n + register when a DftSwap rotated it. */
struct CanonicalForm {
  GeneratorMatrix matrix;
  std::vector<RowOp> ops_log;
  std::vector<int> pivot_cols;
  std::vector<int> register_map;
  int rank = 0;
};

/* Requires q prime and pairwise commutation of the rows mod q. Pivots are
   taken from x columns first; a register whose remaining column is pure z
   is rotated with a DftSwap. Deterministic: smallest register index, then
   smallest row index. */
CanonicalForm canonical_form(const GeneratorMatrix &m, const Int &q);

/* Reduced row echelon form over Z_q using row operations only (no
   register moves), entries reduced into [0, q). Two matrices have equal
   row span mod q if and only if their echelon forms are equal, so this is
   the canonical row space representative. Zero rows are dropped. */
GeneratorMatrix rref_mod(const GeneratorMatrix &m, const Int &q);

bool same_row_span_mod(const GeneratorMatrix &a, const GeneratorMatrix &b,
                       const Int &q);

} // namespace ldikit
