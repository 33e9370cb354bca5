#include "ldikit/ldi.hpp"

#include <stdexcept>

namespace ldikit {

namespace {

Int mod_pos(const Int &v, const Int &q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return r;
}

void require_commuting_mod(const GeneratorMatrix &m, const Int &q) {
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = i + 1; j < m.row_count(); ++j)
      if (mod_pos(symplectic_product(m.rows[i], m.rows[j]), q) != 0)
        throw std::invalid_argument("rows do not commute mod " + q.get_str());
}

/* RegisterSwap is its own inverse; DftSwap inverts to (x, z) -> (-z, x). */
void undo_register_move(GeneratorMatrix &m, const RowOp &op) {
  if (op.kind == RowOpKind::RegisterSwap) {
    apply_row_op(m, op);
    return;
  }
  for (auto &row : m.rows) {
    Int x = row.x(op.i);
    row.x(op.i) = -row.z(op.i);
    row.z(op.i) = x;
  }
}

GeneratorMatrix make_ldi_lower(const GeneratorMatrix &m, const Int &q) {
  CanonicalForm c = canonical_form(m, q);
  GeneratorMatrix out(m.n, LocalDimension::integers());
  out.rows.assign(c.matrix.rows.begin(), c.matrix.rows.begin() + c.rank);
  const GeneratorMatrix canon = out;

  /* each below diagonal product lands on the later row, in the z part of
     the earlier row's pivot slot, where the exact identity block turns
     the added term into minus the product */
  for (int i = 1; i < c.rank; ++i)
    for (int j = 0; j < i; ++j)
      out.rows[i].z(j) += symplectic_product(canon.rows[i], canon.rows[j]);

  for (auto it = c.ops_log.rbegin(); it != c.ops_log.rend(); ++it)
    if (it->kind == RowOpKind::RegisterSwap || it->kind == RowOpKind::DftSwap)
      undo_register_move(out, *it);
  return out;
}

/* classical reduced echelon form mod q of the rows, zero rows dropped,
   pivot columns reported */
void rref_block(std::vector<std::vector<Int>> &rows, const Int &q,
                std::vector<int> &pivots) {
  if (rows.empty()) return;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size());
       ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
    Int inv;
    mpz_invert(inv.get_mpz_t(),
               rows[static_cast<size_t>(rank)][static_cast<size_t>(col)].get_mpz_t(),
               q.get_mpz_t());
    for (Int &v : rows[static_cast<size_t>(rank)]) v = mod_pos(v * inv, q);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      const Int f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int cc = 0; cc < cols; ++cc)
        rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
            mod_pos(rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] -
                        f * rows[static_cast<size_t>(rank)][static_cast<size_t>(cc)],
                    q);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(static_cast<size_t>(rank));
}

GeneratorMatrix make_ldi_css(const GeneratorMatrix &m, const Int &q) {
  if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("css construction needs a prime modulus");
  require_commuting_mod(m, q);

  std::vector<std::vector<Int>> xs, zs;
  for (const auto &row : m.rows) {
    std::vector<Int> x(static_cast<size_t>(m.n)), z(static_cast<size_t>(m.n));
    bool any_x = false, any_z = false;
    for (int i = 0; i < m.n; ++i) {
      x[static_cast<size_t>(i)] = mod_pos(row.x(i), q);
      z[static_cast<size_t>(i)] = mod_pos(row.z(i), q);
      any_x |= x[static_cast<size_t>(i)] != 0;
      any_z |= z[static_cast<size_t>(i)] != 0;
    }
    if (any_x && any_z)
      throw std::invalid_argument("css construction needs pure x or z rows");
    if (any_x) xs.push_back(std::move(x));
    if (any_z) zs.push_back(std::move(z));
  }

  std::vector<int> px, pz;
  rref_block(xs, q, px);
  rref_block(zs, q, pz);

  /* every cross product is a multiple of q; it is cancelled on the z side
     at the x row's pivot column, and pivot exclusivity keeps the
     corrections independent of each other */
  std::vector<std::vector<Int>> gram(xs.size(), std::vector<Int>(zs.size(), 0));
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < zs.size(); ++j)
      for (size_t c = 0; c < xs[i].size(); ++c) gram[i][j] += xs[i][c] * zs[j][c];
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < zs.size(); ++j)
      zs[j][static_cast<size_t>(px[i])] -= gram[i][j];

  GeneratorMatrix out(m.n, LocalDimension::integers());
  for (const auto &x : xs) {
    PauliVector v(m.n);
    for (int i = 0; i < m.n; ++i) v.x(i) = x[static_cast<size_t>(i)];
    out.rows.push_back(std::move(v));
  }
  for (const auto &z : zs) {
    PauliVector v(m.n);
    for (int i = 0; i < m.n; ++i) v.z(i) = z[static_cast<size_t>(i)];
    out.rows.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LdiReport verify_ldi(const GeneratorMatrix &m) {
  LdiReport r;
  r.matrix = m;
  for (const auto &row : m.rows)
    for (const Int &v : row.entries)
      if (abs(v) > r.B) r.B = abs(v);
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = i + 1; j < m.row_count(); ++j) {
      Int p = symplectic_product(m.rows[i], m.rows[j]);
      if (p != 0) r.violations.emplace_back(i, j, p);
    }
  r.is_ldi = r.violations.empty();
  if (r.is_ldi) r.matrix.dim = LocalDimension::integers();
  return r;
}

GeneratorMatrix make_ldi(const GeneratorMatrix &m, const Int &q,
                         LdiVariant variant) {
  return variant == LdiVariant::LowerTriangular ? make_ldi_lower(m, q)
                                                : make_ldi_css(m, q);
}

Int b_entry_bound(const Int &q, int k) {
  if (q < 2 || k < 0) throw std::invalid_argument("bad entry bound arguments");
  return (2 + k * (q - 1)) * (q - 1);
}

}  // namespace ldikit
