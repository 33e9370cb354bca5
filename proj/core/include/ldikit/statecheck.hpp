#pragma once

#include <complex>
#include <vector>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* Dense state vector of n registers of dimension q. Register 0 is the
   most significant digit: basis index of |j_0 .. j_{n-1}> is
   sum_i j_i q^{n-1-i}. Capped at q^n <= 16384 amplitudes. */
struct DenseState {
  int n = 0;
  long q = 0;
  std::vector<std::complex<double>> amplitudes;

  static DenseState basis(int n, long q, long index);
};

inline constexpr long kMaxStateSize = 16384;

/* Applies X^a Z^b per register with exponents reduced mod q: Z first,
   then the cyclic shift, so site (a, b) maps |j> to w^{b j} |j + a mod q>
   with w = exp(2 pi i / q). Swapping the application order costs a global
   phase: applying u first and then v yields w^{symplectic_product(u, v)}
   times the state from applying v first and then u. */
DenseState apply_pauli(const DenseState &s, const PauliVector &p);

/* |<a|b>|, the overlap with global phase quotiented out. */
double overlap(const DenseState &a, const DenseState &b);

/* Whether p maps s to itself up to global phase: |<s|P|s>| >= 1 - tol. */
bool stabilizes(const DenseState &s, const PauliVector &p, double tol = 1e-8);

/* Projects a basis seed onto the joint +1 eigenspace of the rows of m at
   dimension q and normalizes. Rows must commute mod q. Seeds are tried in
   basis order until the projection is nonzero; if every seed dies, or some
   row fails to stabilize the result (a row whose operator has no +1
   eigenvalue, e.g. an order 2q mix at q = 2), throws std::invalid_argument.
   Throws BudgetExceeded when q^n > 16384. Deterministic: the first nonzero
   amplitude is made real positive. */
DenseState stabilized_state(const GeneratorMatrix &m, long q);

} // namespace ldikit
