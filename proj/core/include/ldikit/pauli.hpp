#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ldikit {

/* Exact arbitrary magnitude integer. All exponent arithmetic in this
   library is done over the integers; reduction modulo a local dimension
   happens only at the points where an operation says it does. */
using Int = mpz_class;

/* The kind of register a code acts on.

   Prime and Modulo carry an integer modulus. Integers means exponents are
   kept exact with no reduction at all, which is the setting in which a
   single generator matrix serves every local dimension at once. RealsModulo
   and Reals tag continuous interpretations (rotor and full phase space);
   they carry no integer modulus and only affect reporting. */
enum class DimKind { Prime, Modulo, Integers, RealsModulo, Reals };

struct LocalDimension {
  DimKind kind = DimKind::Integers;
  Int modulus = 0; /* meaningful for Prime and Modulo only */

  static LocalDimension prime(const Int &q);
  static LocalDimension modulo(const Int &m);
  static LocalDimension integers();
  static LocalDimension reals_modulo();
  static LocalDimension reals();

  /* Prime(q) if q is prime, otherwise Modulo(q). */
  static LocalDimension from_modulus(const Int &q);

  bool operator==(const LocalDimension &) const = default;
};

std::string to_string(const LocalDimension &dim);

/* Exponent vector of an n register Pauli operator: X^{a} Z^{b} is stored
   as the 2n integers (a_0 .. a_{n-1} | b_0 .. b_{n-1}). The map from
   operators to vectors turns operator products into entrywise sums. */
struct PauliVector {
  int n = 0;
  std::vector<Int> entries; /* size 2n, x part then z part */

  PauliVector() = default;
  explicit PauliVector(int n_) : n(n_), entries(2 * static_cast<size_t>(n_)) {}

  Int &x(int i) { return entries[static_cast<size_t>(i)]; }
  const Int &x(int i) const { return entries[static_cast<size_t>(i)]; }
  Int &z(int i) { return entries[static_cast<size_t>(n + i)]; }
  const Int &z(int i) const { return entries[static_cast<size_t>(n + i)]; }

  bool is_zero() const;

  bool operator==(const PauliVector &) const = default;
};

/* Parses whitespace separated site tokens into exponent form. Site tokens:
   "I", "X", "Z", explicit exponents as in "X^3" or "Z^-1", and combined
   sites like "X^2Z^-1" or "XZ". An omitted exponent means 1. When
   expect_n >= 0 the token count must match it. Throws std::invalid_argument
   on malformed tokens or register count mismatch. */
PauliVector phi_encode(const std::string &pauli, int expect_n = -1);

/* Inverse of phi_encode. Exponent 1 is left implicit ("X", not "X^1");
   a site with both exponents zero renders as "I". */
std::string phi_decode(const PauliVector &v);

/* sum_k (u_x[k] v_z[k] - u_z[k] v_x[k]), exact over the integers.
   Zero modulo q is commutation of the underlying operators at local
   dimension q; zero over the integers is commutation at every local
   dimension simultaneously. Throws on register count mismatch. */
Int symplectic_product(const PauliVector &u, const PauliVector &v);

/* Number of registers acted on, i.e. sites where (x, z) != (0, 0).
   The magnitude of an exponent does not matter, only that it is nonzero. */
int pauli_weight(const PauliVector &v);

/* A list of stabilizer generators over a common register count. */
struct GeneratorMatrix {
  int n = 0;
  LocalDimension dim = LocalDimension::integers();
  std::vector<PauliVector> rows;

  GeneratorMatrix() = default;
  GeneratorMatrix(int n_, LocalDimension dim_) : n(n_), dim(dim_) {}

  int row_count() const { return static_cast<int>(rows.size()); }
  void append_row(const PauliVector &row);

  bool operator==(const GeneratorMatrix &) const = default;
};

/* Builds a matrix from raw entry rows, each of length 2n. */
GeneratorMatrix matrix_from_rows(int n, LocalDimension dim,
                                 const std::vector<std::vector<Int>> &rows);

/* Exact integer symplectic products of e against every row of m, in row
   order. Reduce the values mod q to get the syndrome at local dimension q. */
struct Syndrome {
  std::vector<Int> values;

  bool all_zero() const;
  bool all_zero_mod(const Int &q) const;
};

Syndrome syndrome_of(const GeneratorMatrix &m, const PauliVector &e);

} // namespace ldikit
