#include "ldikit/bounds.hpp"

#include <stdexcept>

#include "ldikit/ldi.hpp"

namespace ldikit {

namespace {

Int power(const Int &base, long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

/* base^(exp/2), rounded up when exp is odd; 0^0 counts as 1 */
Int half_power(const Int &base, long exp) {
  if (exp == 0) return 1;
  if (exp % 2 == 0) return power(base, exp / 2);
  Int full = power(base, exp);
  Int root;
  mpz_sqrt(root.get_mpz_t(), full.get_mpz_t());
  if (root * root < full) root += 1;
  return root;
}

void require(bool ok) {
  if (!ok) throw std::invalid_argument("cutoff needs B >= 1, q >= 2, d >= 2");
}

} // namespace

Int pstar_hadamard(const Int &b, int d) {
  require(b >= 1 && d >= 2);
  return power(b, 2L * (d - 1)) * power(Int(2) * (d - 1), d - 1);
}

Int pstar_alternative(const Int &b, const Int &q, int d) {
  require(b >= 1 && q >= 2 && d >= 2);
  Int inner = 1 + Int(d - 1) * (d - 1) * power(q - 1, d - 1) *
                      half_power(Int(d - 2), d - 2);
  return power(b * (q - 1) * (d - 1) * inner, d - 1);
}

Int pstar_css(const Int &b, int d) {
  require(b >= 1 && d >= 2);
  return power(b, d - 1) * half_power(Int(d - 1), d - 1);
}

BoundReport report_for(const GeneratorMatrix &m, const Int &q, int d) {
  LdiReport check = verify_ldi(m);
  if (!check.is_ldi)
    throw std::invalid_argument("cutoffs apply to invariant matrices only");
  BoundReport r;
  r.B = check.B < 1 ? Int(1) : check.B;
  r.q = q;
  r.d = d;
  r.css = true;
  for (const auto &row : m.rows) {
    bool any_x = false, any_z = false;
    for (int i = 0; i < m.n; ++i) {
      any_x |= row.x(i) != 0;
      any_z |= row.z(i) != 0;
    }
    if (any_x && any_z) r.css = false;
  }
  r.p_star_hadamard = pstar_hadamard(r.B, d);
  r.p_star_alternative = pstar_alternative(r.B, q, d);
  r.best = r.p_star_hadamard < r.p_star_alternative ? r.p_star_hadamard
                                                    : r.p_star_alternative;
  if (r.css) {
    r.p_star_css = pstar_css(r.B, d);
    if (*r.p_star_css < r.best) r.best = *r.p_star_css;
  }
  r.rotor_ok = r.best <= 6;
  return r;
}

} // namespace ldikit
