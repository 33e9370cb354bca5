#include "ldikit/cv.hpp"

#include <stdexcept>

#include "ldikit/distance.hpp"
#include "ldikit/ldi.hpp"
#include "ldikit/linalg.hpp"

namespace ldikit {

namespace {

void append_term(std::string &out, const Int &coeff, const char *var,
                 int reg) {
  if (coeff == 0) return;
  if (coeff > 0 && !out.empty()) out += '+';
  if (coeff == -1)
    out += '-';
  else if (coeff != 1)
    out += coeff.get_str();
  out += var;
  out += std::to_string(reg);
}

} // namespace

std::string render_additive(const PauliVector &v) {
  std::string out;
  for (int i = 0; i < v.n; ++i) append_term(out, v.x(i), "x", i + 1);
  for (int i = 0; i < v.n; ++i) append_term(out, v.z(i), "p", i + 1);
  return out.empty() ? "0" : out;
}

Nullifier nullifier_of(const PauliVector &v) {
  Nullifier f;
  f.x_coeffs.assign(v.entries.begin(), v.entries.begin() + v.n);
  f.p_coeffs.assign(v.entries.begin() + v.n, v.entries.end());
  f.rendered = render_additive(v);
  return f;
}

std::vector<Nullifier> to_nullifiers(const GeneratorMatrix &m) {
  if (!verify_ldi(m).is_ldi)
    throw std::invalid_argument(
        "simultaneous nullifiers need an invariant matrix");
  std::vector<Nullifier> out;
  out.reserve(m.rows.size());
  for (const auto &row : m.rows) out.push_back(nullifier_of(row));
  return out;
}

Int additive_commutator(const PauliVector &u, const PauliVector &v) {
  if (u.n != v.n) throw std::invalid_argument("register count mismatch");
  Int s = 0;
  for (int i = 0; i < u.n; ++i) s += u.x(i) * v.z(i) - v.x(i) * u.z(i);
  return s;
}

std::vector<PauliVector> integer_logicals(const GeneratorMatrix &m,
                                          const Int &p) {
  if (!verify_ldi(m).is_ldi)
    throw std::invalid_argument("integer logicals need an invariant matrix");
  std::vector<PauliVector> mods = logical_operators(m, p);
  if (mods.empty()) return {};

  /* commutation map: row i sends e to the product of generator i with e */
  const int r = m.row_count(), n = m.n;
  IntMatrix j(r, 2 * n);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < n; ++s) {
      j.at(i, s) = -m.rows[i].z(s);
      j.at(i, n + s) = m.rows[i].x(s);
    }

  std::vector<PauliVector> out;
  out.reserve(mods.size());
  for (const auto &l : mods) {
    /* the mod p syndrome is zero, so dividing by p poses the integer
       correction problem j y = -c/p, and l + p y commutes exactly */
    Syndrome c = syndrome_of(m, l);
    std::vector<Int> rhs(c.values.size());
    for (size_t i = 0; i < c.values.size(); ++i) {
      if (!mpz_divisible_p(c.values[i].get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("representative does not commute mod p");
      rhs[i] = -c.values[i] / p;
    }
    std::optional<std::vector<Int>> y = solve_integer(j, rhs);
    if (!y)
      throw std::invalid_argument(
          "mod p logical admits no integer commuting representative");
    PauliVector lifted = l;
    for (size_t idx = 0; idx < lifted.entries.size(); ++idx)
      lifted.entries[idx] += p * (*y)[idx];
    out.push_back(std::move(lifted));
  }
  return out;
}

std::vector<Nullifier> logical_quadratures(const GeneratorMatrix &m,
                                           const Int &p) {
  std::vector<Nullifier> out;
  for (const auto &rep : integer_logicals(m, p))
    out.push_back(nullifier_of(rep));
  return out;
}

} // namespace ldikit
