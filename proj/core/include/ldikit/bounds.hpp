#pragma once

#include <optional>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* Cutoffs above which an invariant generator matrix with entry bound B and
   distance d is guaranteed to keep that distance at every local dimension
   p beyond the cutoff. All values are exact big integers; half integer
   exponents round up, so the returned bound is never optimistic.

   pstar_hadamard     B^{2(d-1)} (2(d-1))^{d-1}
   pstar_alternative  (B(q-1)(d-1)(1+(d-1)^2(q-1)^{d-1}(d-2)^{(d-2)/2}))^{d-1}
   pstar_css          B^{d-1} (d-1)^{(d-1)/2}

   Preconditions: B >= 1, d >= 2, q >= 2. */
Int pstar_hadamard(const Int &b, int d);
Int pstar_alternative(const Int &b, const Int &q, int d);
Int pstar_css(const Int &b, int d);

struct BoundReport {
  Int B = 0;  /* max entry magnitude of the matrix */
  Int q = 0;  /* origin local dimension, feeds the alternative bound */
  int d = 0;  /* declared distance the caller vouches for */
  bool css = false;
  Int p_star_hadamard = 0;
  Int p_star_alternative = 0;
  std::optional<Int> p_star_css; /* present when the matrix is css */
  Int best = 0; /* least applicable cutoff */
  /* Rotor codes live at local dimension 2*pi. best <= 6 certifies 2*pi is
     past every cutoff, checked in exact arithmetic (no floating point). */
  bool rotor_ok = false;
};

/* Computes every applicable cutoff for m. B is measured from the matrix,
   css is detected (every row pure x or pure z), d and q are supplied by
   the caller. Requires m to pass verify_ldi. */
BoundReport report_for(const GeneratorMatrix &m, const Int &q, int d);

} // namespace ldikit
