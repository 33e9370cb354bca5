#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldikit/linalg.hpp"
#include "ldikit/pauli.hpp"

namespace ldikit {

/* No practical limit; searches are bounded by w_max, not the budget,
   unless the caller lowers it. */
inline constexpr uint64_t kDefaultBudget = UINT64_MAX;

struct DistanceResult {
  /* least witness weight, absent if nothing was found up to searched_weight */
  std::optional<int> d;
  int searched_weight = 0;
  std::optional<PauliVector> witness;
};

/* Exhaustive minimum distance at local dimension p (any integer >= 2).
   Enumerates error vectors of weight 1..w_max with per site exponent
   pairs in [0,p)^2 minus (0,0) and returns the least weight admitting a
   vector with all syndromes zero mod p that lies outside the mod p row
   span of m. When the row span already fills the commutant (no logical
   registers, k = 0) the span test is dropped and any nonzero undetectable
   vector counts, which is the usual distance convention for k = 0 codes.
   Witnesses are deterministic: first hit in lexicographic order.
   Throws BudgetExceeded before starting any weight level whose candidate
   count would push the total past the budget. */
DistanceResult distance_mod(const GeneratorMatrix &m, const Int &p, int w_max,
                            uint64_t budget = kDefaultBudget);

/* Minimum weight of an error with exactly zero syndrome over the integers,
   i.e. one that no local dimension can ever detect. Requires m to pass
   verify_ldi. For each support the candidates form the integer kernel of
   the submatrix on those registers; a support contributes a witness when
   the kernel realizes the full support and is not contained in the integer
   row lattice of m (for k = 0, when it is nonzero). Weights ascend, so the
   first hit is minimal. */
DistanceResult d_star(const GeneratorMatrix &m, int w_max,
                      uint64_t budget = kDefaultBudget);

/* Verdict order matters: detectability is checked first, then group
   membership mod p, then exact integer syndromes.

   Detectable   some syndrome is nonzero mod p
   InGroup      undetectable mod p and inside the mod p row span
   Unavoidable  integer syndrome exactly zero and outside the span:
                undetectable at every local dimension
   Artifact     syndrome zero mod p but nonzero over the integers: an
                accident of this particular p, detectable at some other */
enum class ErrorClass { Detectable, InGroup, Unavoidable, Artifact };

struct ErrorVerdict {
  ErrorClass tag = ErrorClass::Detectable;
  Syndrome witness_syndrome; /* exact integer products, one per row */
};

ErrorVerdict classify_error(const GeneratorMatrix &m, const PauliVector &e,
                            const Int &p);

/* 2k vectors spanning the commutant quotient mod p (p prime), returned in
   conjugate pairs [X1, Z1, X2, Z2, ...]: products between pair members are
   1 mod p, every other pairwise product and every product against a
   generator is 0 mod p. Representatives are reduced into [0, p). */
std::vector<PauliVector> logical_operators(const GeneratorMatrix &m,
                                           const Int &p);

struct PhaseSpaceResult {
  double d_ps = 0.0;  /* sqrt(norm_sq) */
  Int norm_sq = 0;
  PauliVector witness;
  int coeff_bound = 0;
  int w_max = 0;
};

/* Euclidean length of the shortest integer vector with zero integer
   syndrome outside the row lattice (nonzero, for k = 0), minimized over
   the box |entry| <= coeff_bound, weight <= w_max. The box is part of the
   result: the value is certified minimal within it and is an upper bound
   on the unrestricted minimum. When the box holds no such vector at all,
   norm_sq and d_ps are 0 and the witness is the zero vector. */
PhaseSpaceResult phase_space_distance(const GeneratorMatrix &m,
                                      int coeff_bound, int w_max,
                                      uint64_t budget = kDefaultBudget);

/* sqrt(sum of squared entries); the length a lone vector contributes. */
Int phase_space_norm_sq(const PauliVector &v);
double phase_space_norm(const PauliVector &v);

} // namespace ldikit
