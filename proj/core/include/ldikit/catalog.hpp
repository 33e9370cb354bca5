#pragma once

#include <string>
#include <vector>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* A worked code shipped with the library. The matrix commutes exactly
   over the integers, so the same entry table is a stabilizer code at
   every local dimension; declared_* records the parameters of the code
   it started from. logicals, when present, are curated conjugate pairs
   [X1, Z1, ...] that commute with every row exactly over the integers. */
struct CatalogEntry {
  std::string name;
  GeneratorMatrix matrix;
  int declared_n = 0;
  int declared_k = 0;
  int declared_d = 0;
  LocalDimension declared_dim;
  std::string notes;
  std::vector<PauliVector> logicals;
};

/* Two registers, generators XX^-1 and ZZ: the smallest invariant pair.
   k = 0; the lone code state at dimension q is the uniform superposition
   of |j, q-j mod q>. q_display (>= 2) is recorded as the declared
   dimension and does not affect the matrix. */
CatalogEntry two_register_example(const Int &q_display);

/* The seven register distance three code in invariant form, entry bound
   B = 1, with curated logicals: X all ones, Z alternating signs. */
CatalogEntry steane_ldi();

/* Invariant form of the [[2^N-1, 2^N-1-2N, 3]] family, N >= 3: x rows are
   the binary parity checks of length 2^N-1, z rows the same checks with
   the sign of column j flipped when the low three bits of j have odd
   parity. Entry bound stays 1 for every member, so the css cutoff is 2:
   the whole family works at every local dimension of at least 2.
   N = 3 returns the steane_ldi matrix. */
CatalogEntry hamming_family(int N);

/* Toric code on an N x N torus (N >= 2), one generator dropped from each
   of the plaquette and vertex families: [[2N^2, 2, N]]. Signs are chosen
   so every plaquette/vertex product cancels exactly over the integers:
   plaquettes carry +1 north and west, -1 south and east; vertices +1
   north and east, -1 south and west. */
CatalogEntry toric_code(int N);

/* Names understood by catalog_lookup: "two_register", "steane_ldi",
   "hamming_N" (N >= 3), "toric_N" (N >= 2). */
std::vector<std::string> catalog_names();
CatalogEntry catalog_lookup(const std::string &name);

} // namespace ldikit
