#pragma once

#include <tuple>
#include <vector>

#include "ldikit/linalg.hpp"
#include "ldikit/pauli.hpp"

namespace ldikit {

/* Outcome of the pairwise integer commutation check. A matrix is local
   dimension invariant when every pairwise symplectic product vanishes
   exactly over the integers, in which case the same matrix is a valid
   stabilizer code at every local dimension. B is the largest entry
   magnitude, the value the cutoff formulas in bounds.hpp consume. */
struct LdiReport {
  GeneratorMatrix matrix; /* the checked matrix, dim retagged Integers
                             when is_ldi holds */
  bool is_ldi = false;
  /* (i, j, value) for each ordered pair i < j with nonzero product */
  std::vector<std::tuple<int, int, Int>> violations;
  Int B = 0;
};

LdiReport verify_ldi(const GeneratorMatrix &m);

enum class LdiVariant { LowerTriangular, Css };

/* Rewrites a code that commutes mod q (q prime) into a matrix whose rows
   commute exactly over the integers, without changing the code: the output
   reduced mod q has the same Z_q row span as the input. Dependent rows are
   dropped, so the output has full rank over Z.

   LowerTriangular: canonicalize, then cancel each below diagonal product
   by adding it to the z part of the later row at the earlier row's pivot
   register. Register moves performed during canonicalization are undone at
   the end so the output lines up with the input site for site.

   Css: requires every row to be pure x or pure z after reduction mod q.
   The two blocks are row reduced separately and each cross product, a
   multiple of q, is cancelled on the z side at the x row's pivot column.
   Pure x rows stay pure x and pure z rows stay pure z. */
GeneratorMatrix make_ldi(const GeneratorMatrix &m, const Int &q,
                         LdiVariant variant);

/* Worst case entry magnitude of the LowerTriangular construction for a
   code with k logical registers at local dimension q: (2 + k(q-1))(q-1). */
Int b_entry_bound(const Int &q, int k);

} // namespace ldikit
