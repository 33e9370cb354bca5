#pragma once

#include <string>
#include <vector>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* Additive (continuous variable) reading of an exponent vector: the row
   (a | b) becomes the quadrature combination a.x + b.p, the nullifier
   that annihilates the code states. Registers are 1-based when rendered. */
struct Nullifier {
  std::vector<Int> x_coeffs; /* coefficients of x_1 .. x_n */
  std::vector<Int> p_coeffs; /* coefficients of p_1 .. p_n */
  std::string rendered;
};

/* Renders a vector as an additive expression: x terms then p terms, each
   ordered by register, coefficient 1 implicit, -1 rendered as a bare
   leading minus, e.g. "p3-2p6+p7". The zero vector renders as "0". */
std::string render_additive(const PauliVector &v);

Nullifier nullifier_of(const PauliVector &v);

/* One nullifier per generator row. Requires m to pass verify_ldi: only an
   exactly commuting matrix gives a consistent set of simultaneous
   nullifiers. Throws std::invalid_argument otherwise. */
std::vector<Nullifier> to_nullifiers(const GeneratorMatrix &m);

/* a_u . b_v - a_v . b_u: the coefficient the canonical commutation
   relations produce for [A_u, A_v]. Equal to symplectic_product for every
   pair, which is what lets one matrix serve both readings. */
Int additive_commutator(const PauliVector &u, const PauliVector &v);

/* Additive forms of a conjugate logical pair set for m at prime p.
   Each returned quadrature combination has additive_commutator zero with
   every nullifier of m exactly over the integers (not just mod p); pair
   members keep a nonzero product with each other. Requires m to pass
   verify_ldi and the mod p logicals to admit integer commuting
   representatives, which holds for any matrix produced by make_ldi. */
std::vector<Nullifier> logical_quadratures(const GeneratorMatrix &m,
                                           const Int &p);

/* The integer commuting representatives behind logical_quadratures. */
std::vector<PauliVector> integer_logicals(const GeneratorMatrix &m,
                                          const Int &p);

} // namespace ldikit
