#include "ldikit/statecheck.hpp"

#include <cmath>
#include <stdexcept>

#include "ldikit/errors.hpp"

namespace ldikit {

namespace {

long state_size(int n, long q) {
  long size = 1;
  for (int i = 0; i < n; ++i) {
    if (size > kMaxStateSize / q) return -1; /* would overflow the cap */
    size *= q;
  }
  return size;
}

long reduced(const Int &v, long q) {
  Int r;
  const Int qq(q);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), qq.get_mpz_t());
  return r.get_si();
}

} // namespace

DenseState DenseState::basis(int n, long q, long index) {
  if (n < 0 || q < 2) throw std::invalid_argument("bad state shape");
  const long size = state_size(n, q);
  if (size < 0) throw std::invalid_argument("state exceeds the size cap");
  if (index < 0 || index >= size)
    throw std::invalid_argument("basis index out of range");
  DenseState s;
  s.n = n;
  s.q = q;
  s.amplitudes.assign(static_cast<size_t>(size), 0.0);
  s.amplitudes[static_cast<size_t>(index)] = 1.0;
  return s;
}

DenseState apply_pauli(const DenseState &s, const PauliVector &p) {
  if (p.n != s.n) throw std::invalid_argument("register count mismatch");
  const long q = s.q;
  const int n = s.n;
  std::vector<long> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<size_t>(i)] = reduced(p.x(i), q);
    b[static_cast<size_t>(i)] = reduced(p.z(i), q);
  }
  std::vector<long> weight(static_cast<size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    weight[static_cast<size_t>(i)] = weight[static_cast<size_t>(i + 1)] * q;

  DenseState out;
  out.n = n;
  out.q = q;
  out.amplitudes.assign(s.amplitudes.size(), 0.0);
  for (size_t idx = 0; idx < s.amplitudes.size(); ++idx) {
    if (s.amplitudes[idx] == 0.0) continue;
    long phase = 0;
    long target = 0;
    long rest = static_cast<long>(idx);
    for (int i = 0; i < n; ++i) {
      const long j = rest / weight[static_cast<size_t>(i)];
      rest %= weight[static_cast<size_t>(i)];
      phase = (phase + b[static_cast<size_t>(i)] * j) % q;
      target += ((j + a[static_cast<size_t>(i)]) % q) *
                weight[static_cast<size_t>(i)];
    }
    const std::complex<double> w = std::polar(
        1.0, 2.0 * M_PI * static_cast<double>(phase) / static_cast<double>(q));
    out.amplitudes[static_cast<size_t>(target)] += w * s.amplitudes[idx];
  }
  return out;
}

double overlap(const DenseState &a, const DenseState &b) {
  if (a.n != b.n || a.q != b.q || a.amplitudes.size() != b.amplitudes.size())
    throw std::invalid_argument("state shape mismatch");
  std::complex<double> dot = 0.0;
  for (size_t i = 0; i < a.amplitudes.size(); ++i)
    dot += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::abs(dot);
}

bool stabilizes(const DenseState &s, const PauliVector &p, double tol) {
  return overlap(s, apply_pauli(s, p)) >= 1.0 - tol;
}

DenseState stabilized_state(const GeneratorMatrix &m, long q) {
  if (q < 2) throw std::invalid_argument("dimension at least 2");
  const long size = state_size(m.n, q);
  if (size < 0) {
    Int full = 1;
    for (int i = 0; i < m.n; ++i) full *= q;
    throw BudgetExceeded(full.get_str(), Int(kMaxStateSize).get_str(),
                         "state exceeds the dense size cap");
  }
  const Int qq(q);
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = i + 1; j < m.row_count(); ++j)
      if (!mpz_divisible_p(
              Int(symplectic_product(m.rows[i], m.rows[j])).get_mpz_t(),
              qq.get_mpz_t()))
        throw std::invalid_argument("rows do not commute mod q");

  /* the rows commute exactly as operators, so the product of the per row
     averages projects onto the joint +1 eigenspace whenever each row has
     one; rows without one are caught by the final check */
  for (long seed = 0; seed < size; ++seed) {
    DenseState s = DenseState::basis(m.n, q, seed);
    for (const auto &row : m.rows) {
      DenseState acc = s;
      DenseState cur = s;
      for (long t = 1; t < q; ++t) {
        cur = apply_pauli(cur, row);
        for (size_t i = 0; i < acc.amplitudes.size(); ++i)
          acc.amplitudes[i] += cur.amplitudes[i];
      }
      for (auto &amp : acc.amplitudes) amp /= static_cast<double>(q);
      s = std::move(acc);
    }
    double norm_sq = 0.0;
    for (const auto &amp : s.amplitudes) norm_sq += std::norm(amp);
    if (norm_sq < 1e-9) continue;

    const double norm = std::sqrt(norm_sq);
    std::complex<double> rotate = 1.0;
    for (const auto &amp : s.amplitudes)
      if (std::abs(amp) > 1e-9 * norm) {
        rotate = std::conj(amp) / std::abs(amp);
        break;
      }
    for (auto &amp : s.amplitudes) {
      amp *= rotate / norm;
      if (std::abs(amp.real()) < 1e-14) amp.real(0.0);
      if (std::abs(amp.imag()) < 1e-14) amp.imag(0.0);
    }
    for (const auto &row : m.rows)
      if (!stabilizes(s, row))
        throw std::invalid_argument("a row admits no fixed state");
    return s;
  }
  throw std::invalid_argument("no basis seed survives the projection");
}

} // namespace ldikit
