#include "ldikit/distance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ldikit/errors.hpp"
#include "ldikit/ldi.hpp"

namespace ldikit {

namespace {

Int mod_pos(const Int &v, const Int &q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return r;
}

Int int_from_u64(uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

Int binomial(int n, int w) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(w));
  return r;
}

Int power(const Int &base, int exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

bool next_combination(std::vector<int> &comb, int n) {
  const int w = static_cast<int>(comb.size());
  int i = w - 1;
  while (i >= 0 && comb[static_cast<size_t>(i)] == n - w + i) --i;
  if (i < 0) return false;
  ++comb[static_cast<size_t>(i)];
  for (int j = i + 1; j < w; ++j)
    comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  return true;
}

/* levels are refused up front: a partial scan of a level would make
   "nothing found" ambiguous */
void charge_level(Int &cumulative, const Int &cost, const Int &budget,
                  const char *what) {
  cumulative += cost;
  if (cumulative > budget)
    throw BudgetExceeded(cumulative.get_str(), budget.get_str(), what);
}

template <typename T> T cast_entry(const Int &v);
template <> long long cast_entry<long long>(const Int &v) {
  return static_cast<long long>(v.get_si());
}
template <> Int cast_entry<Int>(const Int &v) { return v; }

inline Int widen(long long v) { return Int(static_cast<long>(v)); }
inline const Int &widen(const Int &v) { return v; }

/* machine word accumulation is safe when entries, modulus and depth keep
   every partial syndrome far from overflow */
bool fits_fast_path(const GeneratorMatrix &m, const Int &bound, int w_max) {
  if (w_max > 64) return false;
  for (const auto &row : m.rows)
    for (const auto &v : row.entries)
      if (abs(v) > Int(1) << 31) return false;
  return bound <= 1000000;
}

template <typename T> struct RowTables {
  int n = 0;
  int r = 0;
  std::vector<std::vector<T>> gx, gz; /* [row][site] */

  explicit RowTables(const GeneratorMatrix &m)
      : n(m.n), r(m.row_count()),
        gx(static_cast<size_t>(m.row_count()),
           std::vector<T>(static_cast<size_t>(m.n))),
        gz(static_cast<size_t>(m.row_count()),
           std::vector<T>(static_cast<size_t>(m.n))) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) {
        gx[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            cast_entry<T>(m.rows[i].x(j));
        gz[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            cast_entry<T>(m.rows[i].z(j));
      }
  }
};

/* Depth first scan of one support: per site exponent pairs (a, b) in
   [0, p)^2 minus the origin, a before b, syndromes kept incrementally.
   accept() sees the filled exponents and may veto (span test); the scan
   stops at the first accepted candidate, which is the lexicographic
   least. */
template <typename T>
bool scan_support_mod(const RowTables<T> &t, const std::vector<int> &support,
                      const T &p, std::vector<T> &syn, std::vector<T> &av,
                      std::vector<T> &bv, size_t depth,
                      const std::function<bool()> &accept) {
  if (depth == support.size()) {
    for (int i = 0; i < t.r; ++i)
      if (syn[static_cast<size_t>(i)] % p != 0) return false;
    return accept();
  }
  const size_t site = static_cast<size_t>(support[depth]);
  for (T a = 0; a < p; ++a)
    for (T b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      for (int i = 0; i < t.r; ++i)
        syn[static_cast<size_t>(i)] +=
            t.gx[static_cast<size_t>(i)][site] * b -
            t.gz[static_cast<size_t>(i)][site] * a;
      av[depth] = a;
      bv[depth] = b;
      if (scan_support_mod(t, support, p, syn, av, bv, depth + 1, accept))
        return true;
      for (int i = 0; i < t.r; ++i)
        syn[static_cast<size_t>(i)] -=
            t.gx[static_cast<size_t>(i)][site] * b -
            t.gz[static_cast<size_t>(i)][site] * a;
    }
  return false;
}

template <typename T>
std::optional<PauliVector> mod_search_level(const GeneratorMatrix &m,
                                            const IntMatrix &rows_int,
                                            const Int &p, int w,
                                            bool span_test) {
  RowTables<T> t(m);
  const T pv = cast_entry<T>(p);
  std::vector<T> syn(static_cast<size_t>(t.r), 0);
  std::vector<T> av(static_cast<size_t>(w), 0), bv(static_cast<size_t>(w), 0);
  std::vector<int> support(static_cast<size_t>(w));
  std::iota(support.begin(), support.end(), 0);
  do {
    std::optional<PauliVector> found;
    auto accept = [&]() -> bool {
      PauliVector e(m.n);
      for (size_t d = 0; d < support.size(); ++d) {
        e.x(support[d]) = widen(av[d]);
        e.z(support[d]) = widen(bv[d]);
      }
      if (span_test && row_span_contains_mod(rows_int, e.entries, p))
        return false;
      found = std::move(e);
      return true;
    };
    std::fill(syn.begin(), syn.end(), T(0));
    if (scan_support_mod<T>(t, support, pv, syn, av, bv, 0, accept))
      return found;
  } while (next_combination(support, m.n));
  return std::nullopt;
}

} // namespace

DistanceResult distance_mod(const GeneratorMatrix &m, const Int &p, int w_max,
                            uint64_t budget) {
  if (p < 2) throw std::invalid_argument("distance needs a modulus >= 2");
  DistanceResult res;
  const IntMatrix rows_int = to_int_matrix(m);
  const bool span_test = rank_mod(m, p) < m.n;
  const Int budget_int = int_from_u64(budget);
  const Int per_site = p * p - 1;
  const bool fast = fits_fast_path(m, p, w_max);
  Int cumulative = 0;
  for (int w = 1; w <= w_max; ++w) {
    charge_level(cumulative, binomial(m.n, w) * power(per_site, w), budget_int,
                 "weight level past enumeration budget");
    res.searched_weight = w;
    if (w > m.n) continue;
    std::optional<PauliVector> hit =
        fast ? mod_search_level<long long>(m, rows_int, p, w, span_test)
             : mod_search_level<Int>(m, rows_int, p, w, span_test);
    if (hit) {
      res.d = w;
      res.witness = std::move(hit);
      return res;
    }
  }
  return res;
}

namespace {

/* kernel vectors of the syndrome map restricted to the support, laid out
   as (a_0, b_0, a_1, b_1, ...) */
IntMatrix support_kernel(const GeneratorMatrix &m,
                         const std::vector<int> &support) {
  const int w = static_cast<int>(support.size());
  IntMatrix a(m.row_count(), 2 * w);
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = 0; j < w; ++j) {
      a.at(i, 2 * j) = -m.rows[i].z(support[static_cast<size_t>(j)]);
      a.at(i, 2 * j + 1) = m.rows[i].x(support[static_cast<size_t>(j)]);
    }
  return integer_kernel(a);
}

PauliVector embed_support(int n, const std::vector<int> &support,
                          const std::vector<Int> &v) {
  PauliVector e(n);
  for (size_t j = 0; j < support.size(); ++j) {
    e.x(support[j]) = v[2 * j];
    e.z(support[j]) = v[2 * j + 1];
  }
  return e;
}

} // namespace

DistanceResult d_star(const GeneratorMatrix &m, int w_max, uint64_t budget) {
  if (!verify_ldi(m).is_ldi)
    throw std::invalid_argument("d_star needs an invariant matrix");
  const IntMatrix rows_int = to_int_matrix(m);
  const bool span_test = smith_normal_form(rows_int).rank < m.n;
  const LatticeMembership lattice(rows_int);
  const Int budget_int = int_from_u64(budget);
  Int cumulative = 0;
  DistanceResult res;
  for (int w = 1; w <= w_max; ++w) {
    charge_level(cumulative, binomial(m.n, w), budget_int,
                 "support level past enumeration budget");
    res.searched_weight = w;
    if (w > m.n) continue;
    std::vector<int> support(static_cast<size_t>(w));
    std::iota(support.begin(), support.end(), 0);
    do {
      IntMatrix kernel = support_kernel(m, support);
      if (kernel.rows == 0) continue;

      /* the support is realizable only if no site is dead across the
         whole kernel */
      bool full = true;
      for (int j = 0; full && j < w; ++j) {
        bool live = false;
        for (int i = 0; i < kernel.rows && !live; ++i)
          live = kernel.at(i, 2 * j) != 0 || kernel.at(i, 2 * j + 1) != 0;
        full = live;
      }
      if (!full) continue;

      if (span_test) {
        bool outside = false;
        for (int i = 0; i < kernel.rows && !outside; ++i) {
          std::vector<Int> row(kernel.a.begin() +
                                   static_cast<size_t>(i) * kernel.cols,
                               kernel.a.begin() +
                                   static_cast<size_t>(i + 1) * kernel.cols);
          outside = !lattice.contains(embed_support(m.n, support, row).entries);
        }
        if (!outside) continue;
      }

      /* a qualifying combination exists; the box only needs to grow until
         one shows up */
      for (int box = 1; box <= 1024; ++box) {
        std::vector<int> coeff(static_cast<size_t>(kernel.rows), -box);
        for (;;) {
          std::vector<Int> v(static_cast<size_t>(kernel.cols), 0);
          for (int i = 0; i < kernel.rows; ++i)
            for (int c = 0; c < kernel.cols; ++c)
              v[static_cast<size_t>(c)] +=
                  coeff[static_cast<size_t>(i)] * kernel.at(i, c);
          bool ok = true;
          for (int j = 0; ok && j < w; ++j)
            ok = v[static_cast<size_t>(2 * j)] != 0 ||
                 v[static_cast<size_t>(2 * j + 1)] != 0;
          if (ok) {
            PauliVector e = embed_support(m.n, support, v);
            if (!span_test || !lattice.contains(e.entries)) {
              res.d = w;
              res.witness = std::move(e);
              return res;
            }
          }
          int pos = 0;
          while (pos < kernel.rows && coeff[static_cast<size_t>(pos)] == box) {
            coeff[static_cast<size_t>(pos)] = -box;
            ++pos;
          }
          if (pos == kernel.rows) break;
          ++coeff[static_cast<size_t>(pos)];
        }
      }
      throw std::runtime_error("kernel witness search did not converge");
    } while (next_combination(support, m.n));
  }
  return res;
}

ErrorVerdict classify_error(const GeneratorMatrix &m, const PauliVector &e,
                            const Int &p) {
  if (e.n != m.n)
    throw std::invalid_argument("error and code register counts differ");
  if (p < 2) throw std::invalid_argument("classification needs modulus >= 2");
  ErrorVerdict v;
  v.witness_syndrome = syndrome_of(m, e);
  if (!v.witness_syndrome.all_zero_mod(p)) {
    v.tag = ErrorClass::Detectable;
    return v;
  }
  if (row_span_contains_mod(to_int_matrix(m), e.entries, p)) {
    v.tag = ErrorClass::InGroup;
    return v;
  }
  v.tag = v.witness_syndrome.all_zero() ? ErrorClass::Unavoidable
                                        : ErrorClass::Artifact;
  return v;
}

namespace {

/* echelon stack over Z_p: rows have distinct pivots, are zero before
   their pivot and carry pivot value 1; kept sorted by pivot */
struct ModStack {
  std::vector<std::vector<Int>> rows;
  std::vector<int> pivots;
  Int p;

  explicit ModStack(const Int &p_) : p(p_) {}

  void reduce(std::vector<Int> &v) const {
    for (size_t i = 0; i < rows.size(); ++i) {
      Int f = mod_pos(v[static_cast<size_t>(pivots[i])], p);
      if (f == 0) continue;
      for (size_t c = 0; c < v.size(); ++c)
        v[c] = mod_pos(v[c] - f * rows[i][c], p);
    }
  }

  /* returns false when v reduces to zero */
  bool insert(std::vector<Int> &v) {
    reduce(v);
    int lead = -1;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        lead = static_cast<int>(c);
        break;
      }
    if (lead < 0) return false;
    Int inv;
    mpz_invert(inv.get_mpz_t(), v[static_cast<size_t>(lead)].get_mpz_t(),
               p.get_mpz_t());
    for (auto &x : v) x = mod_pos(x * inv, p);
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < lead) ++at;
    rows.insert(rows.begin() + static_cast<long>(at), v);
    pivots.insert(pivots.begin() + static_cast<long>(at), lead);
    return true;
  }
};

/* basis of { e : J e = 0 mod p } with J the commutation map of m */
std::vector<std::vector<Int>> commutant_basis_mod(const GeneratorMatrix &m,
                                                  const Int &p) {
  const int n = m.n, r = m.row_count(), cols = 2 * n;
  std::vector<std::vector<Int>> j(static_cast<size_t>(r),
                                  std::vector<Int>(static_cast<size_t>(cols)));
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < n; ++s) {
      j[static_cast<size_t>(i)][static_cast<size_t>(s)] =
          mod_pos(-m.rows[i].z(s), p);
      j[static_cast<size_t>(i)][static_cast<size_t>(n + s)] =
          mod_pos(m.rows[i].x(s), p);
    }
  std::vector<int> pivot_of_col(static_cast<size_t>(cols), -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < r; ++c) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (j[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(j[static_cast<size_t>(rank)], j[static_cast<size_t>(piv)]);
    Int inv;
    mpz_invert(inv.get_mpz_t(),
               j[static_cast<size_t>(rank)][static_cast<size_t>(c)].get_mpz_t(),
               p.get_mpz_t());
    for (auto &x : j[static_cast<size_t>(rank)]) x = mod_pos(x * inv, p);
    for (int i = 0; i < r; ++i) {
      if (i == rank) continue;
      Int f = j[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int cc = 0; cc < cols; ++cc)
        j[static_cast<size_t>(i)][static_cast<size_t>(cc)] =
            mod_pos(j[static_cast<size_t>(i)][static_cast<size_t>(cc)] -
                        f * j[static_cast<size_t>(rank)][static_cast<size_t>(cc)],
                    p);
    }
    pivot_of_col[static_cast<size_t>(c)] = rank;
    ++rank;
  }
  std::vector<std::vector<Int>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[static_cast<size_t>(c)] >= 0) continue;
    std::vector<Int> v(static_cast<size_t>(cols), 0);
    v[static_cast<size_t>(c)] = 1;
    for (int c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[static_cast<size_t>(c2)] >= 0)
        v[static_cast<size_t>(c2)] = mod_pos(
            -j[static_cast<size_t>(pivot_of_col[static_cast<size_t>(c2)])]
              [static_cast<size_t>(c)],
            p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int pair_product_mod(const std::vector<Int> &u, const std::vector<Int> &v,
                     const Int &p, int n) {
  Int s = 0;
  for (int i = 0; i < n; ++i)
    s += u[static_cast<size_t>(i)] * v[static_cast<size_t>(n + i)] -
         u[static_cast<size_t>(n + i)] * v[static_cast<size_t>(i)];
  return mod_pos(s, p);
}

} // namespace

std::vector<PauliVector> logical_operators(const GeneratorMatrix &m,
                                           const Int &p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("logical operators need a prime modulus");
  const int n = m.n;

  ModStack span(p);
  for (const auto &row : m.rows) {
    std::vector<Int> v = row.entries;
    span.insert(v);
  }

  /* quotient representatives: commutant vectors independent of the span */
  std::vector<std::vector<Int>> reps;
  for (auto &v : commutant_basis_mod(m, p)) {
    std::vector<Int> w = v;
    span.reduce(w);
    bool zero = true;
    for (const auto &x : w) zero &= x == 0;
    if (zero) continue;
    reps.push_back(w);
    std::vector<Int> copy = w;
    span.insert(copy);
  }

  /* pair them off: each pass extracts one conjugate pair and makes the
     rest commute with it */
  std::vector<PauliVector> out;
  while (!reps.empty()) {
    std::vector<Int> u = reps.front();
    reps.erase(reps.begin());
    int partner = -1;
    for (size_t j = 0; j < reps.size(); ++j)
      if (pair_product_mod(u, reps[j], p, n) != 0) {
        partner = static_cast<int>(j);
        break;
      }
    if (partner < 0)
      throw std::runtime_error("degenerate commutant pairing");
    std::vector<Int> v = reps[static_cast<size_t>(partner)];
    reps.erase(reps.begin() + partner);
    Int inv;
    Int puv = pair_product_mod(u, v, p, n);
    mpz_invert(inv.get_mpz_t(), puv.get_mpz_t(), p.get_mpz_t());
    for (auto &x : v) x = mod_pos(x * inv, p);
    for (auto &g : reps) {
      const Int cu = pair_product_mod(u, g, p, n);
      const Int cv = pair_product_mod(v, g, p, n);
      for (size_t c = 0; c < g.size(); ++c)
        g[c] = mod_pos(g[c] - cu * v[c] + cv * u[c], p);
    }
    PauliVector pu(n), pv(n);
    for (size_t c = 0; c < u.size(); ++c) {
      pu.entries[c] = mod_pos(u[c], p);
      pv.entries[c] = v[c];
    }
    out.push_back(std::move(pu));
    out.push_back(std::move(pv));
  }
  return out;
}

namespace {

template <typename T>
void box_scan(const RowTables<T> &t, const std::vector<int> &support,
              int coeff_bound, std::vector<T> &syn, std::vector<T> &av,
              std::vector<T> &bv, size_t depth, const Int &partial_norm,
              Int &best, const std::function<void(const Int &)> &accept) {
  const size_t w = support.size();
  if (best >= 0 && partial_norm + static_cast<long>(w - depth) >= best)
    return; /* every site still to fill costs at least 1 */
  if (depth == w) {
    for (int i = 0; i < t.r; ++i)
      if (syn[static_cast<size_t>(i)] != 0) return;
    accept(partial_norm);
    return;
  }
  const size_t site = static_cast<size_t>(support[depth]);
  for (int a = -coeff_bound; a <= coeff_bound; ++a)
    for (int b = -coeff_bound; b <= coeff_bound; ++b) {
      if (a == 0 && b == 0) continue;
      for (int i = 0; i < t.r; ++i)
        syn[static_cast<size_t>(i)] +=
            t.gx[static_cast<size_t>(i)][site] * T(b) -
            t.gz[static_cast<size_t>(i)][site] * T(a);
      av[depth] = T(a);
      bv[depth] = T(b);
      box_scan(t, support, coeff_bound, syn, av, bv, depth + 1,
               partial_norm + static_cast<long>(a) * a +
                   static_cast<long>(b) * b,
               best, accept);
      for (int i = 0; i < t.r; ++i)
        syn[static_cast<size_t>(i)] -=
            t.gx[static_cast<size_t>(i)][site] * T(b) -
            t.gz[static_cast<size_t>(i)][site] * T(a);
    }
}

} // namespace

Int phase_space_norm_sq(const PauliVector &v) {
  Int s = 0;
  for (const auto &e : v.entries) s += e * e;
  return s;
}

double phase_space_norm(const PauliVector &v) {
  return std::sqrt(phase_space_norm_sq(v).get_d());
}

PhaseSpaceResult phase_space_distance(const GeneratorMatrix &m,
                                      int coeff_bound, int w_max,
                                      uint64_t budget) {
  if (!verify_ldi(m).is_ldi)
    throw std::invalid_argument(
        "phase space distance needs an invariant matrix");
  if (coeff_bound < 0)
    throw std::invalid_argument("negative coefficient bound");
  PhaseSpaceResult res;
  res.coeff_bound = coeff_bound;
  res.w_max = w_max;
  res.witness = PauliVector(m.n);

  const IntMatrix rows_int = to_int_matrix(m);
  const bool span_test = smith_normal_form(rows_int).rank < m.n;
  const LatticeMembership lattice(rows_int);
  const Int budget_int = int_from_u64(budget);
  const Int side = 2 * Int(coeff_bound) + 1;
  const Int per_site = side * side - 1;
  const bool fast = fits_fast_path(m, side, w_max);
  Int cumulative = 0;
  Int best = -1;

  auto run_level = [&](auto tag, int w) {
    using T = decltype(tag);
    RowTables<T> t(m);
    std::vector<T> syn(static_cast<size_t>(t.r), T(0));
    std::vector<T> av(static_cast<size_t>(w), T(0)),
        bv(static_cast<size_t>(w), T(0));
    std::vector<int> support(static_cast<size_t>(w));
    std::iota(support.begin(), support.end(), 0);
    do {
      auto accept = [&](const Int &norm) {
        if (best >= 0 && norm >= best) return;
        PauliVector e(m.n);
        for (size_t d = 0; d < support.size(); ++d) {
          e.x(support[d]) = widen(av[d]);
          e.z(support[d]) = widen(bv[d]);
        }
        if (span_test && lattice.contains(e.entries)) return;
        best = norm;
        res.witness = std::move(e);
      };
      std::fill(syn.begin(), syn.end(), T(0));
      box_scan<T>(t, support, coeff_bound, syn, av, bv, 0, Int(0), best,
                  accept);
    } while (next_combination(support, m.n));
  };

  for (int w = 1; w <= w_max; ++w) {
    if (best >= 0 && w >= best) break; /* norm_sq >= weight: no improvement */
    charge_level(cumulative, binomial(m.n, w) * power(per_site, w), budget_int,
                 "weight level past enumeration budget");
    if (w > m.n) continue;
    if (fast)
      run_level(static_cast<long long>(0), w);
    else
      run_level(Int(0), w);
  }
  if (best >= 0) {
    res.norm_sq = best;
    res.d_ps = std::sqrt(best.get_d());
  }
  return res;
}

} // namespace ldikit
