#include <stdexcept>

#include "ldikit/linalg.hpp"

namespace ldikit {

namespace {

Int mod_pos(const Int &v, const Int &q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return r;
}

Int mod_inverse(const Int &v, const Int &q) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t()) == 0)
    throw std::invalid_argument("not invertible mod " + q.get_str());
  return inv;
}

bool is_prime(const Int &q) {
  return q >= 2 && mpz_probab_prime_p(q.get_mpz_t(), 30) != 0;
}

}  // namespace

void apply_row_op(GeneratorMatrix &m, const RowOp &op) {
  switch (op.kind) {
    case RowOpKind::Swap:
      std::swap(m.rows.at(op.i), m.rows.at(op.j));
      break;
    case RowOpKind::Scale:
      for (Int &v : m.rows.at(op.i).entries) v *= op.c;
      break;
    case RowOpKind::AddMultiple: {
      PauliVector &dst = m.rows.at(op.i);
      const PauliVector &src = m.rows.at(op.j);
      for (size_t k = 0; k < dst.entries.size(); ++k)
        dst.entries[k] += op.c * src.entries[k];
      break;
    }
    case RowOpKind::ReduceRow:
      for (Int &v : m.rows.at(op.i).entries) v = mod_pos(v, op.c);
      break;
    case RowOpKind::RegisterSwap:
      for (auto &row : m.rows) {
        std::swap(row.x(op.i), row.x(op.j));
        std::swap(row.z(op.i), row.z(op.j));
      }
      break;
    case RowOpKind::DftSwap:
      /* (x, z) -> (z, -x): a symplectic move, products are unchanged */
      for (auto &row : m.rows) {
        Int x = row.x(op.i);
        row.x(op.i) = row.z(op.i);
        row.z(op.i) = -x;
      }
      break;
  }
}

GeneratorMatrix replay_ops(const GeneratorMatrix &input,
                           const std::vector<RowOp> &ops) {
  GeneratorMatrix m = input;
  for (const RowOp &op : ops) apply_row_op(m, op);
  return m;
}

CanonicalForm canonical_form(const GeneratorMatrix &m, const Int &q) {
  if (!is_prime(q))
    throw std::invalid_argument("canonical form needs a prime modulus");
  for (int i = 0; i < m.row_count(); ++i)
    for (int j = i + 1; j < m.row_count(); ++j)
      if (mod_pos(symplectic_product(m.rows[i], m.rows[j]), q) != 0)
        throw std::invalid_argument("rows do not commute mod " + q.get_str());

  CanonicalForm out;
  out.matrix = m;
  out.register_map.resize(static_cast<size_t>(m.n));
  for (int i = 0; i < m.n; ++i) out.register_map[static_cast<size_t>(i)] = i;

  GeneratorMatrix &w = out.matrix;
  auto emit = [&](RowOp op) {
    apply_row_op(w, op);
    out.ops_log.push_back(op);
  };

  const int rows = w.row_count();
  const int n = w.n;
  /* normalize all entries into [0, q) up front */
  for (int r = 0; r < rows; ++r) emit({RowOpKind::ReduceRow, r, 0, q});

  int rank = 0;
  for (int slot = rank; slot < n && rank < rows; ++slot) {
    /* x column first, then the z column behind a register rotation;
       smallest register, then smallest row */
    int src_slot = -1, src_row = -1;
    bool rotate = false;
    for (int s = slot; s < n && src_slot < 0; ++s) {
      for (int r = rank; r < rows; ++r)
        if (w.rows[r].x(s) != 0) {
          src_slot = s;
          src_row = r;
          break;
        }
      if (src_slot < 0)
        for (int r = rank; r < rows; ++r)
          if (w.rows[r].z(s) != 0) {
            src_slot = s;
            src_row = r;
            rotate = true;
            break;
          }
    }
    if (src_slot < 0) break;

    if (rotate) {
      emit({RowOpKind::DftSwap, src_slot, 0, 0});
      /* the negated x parts leave [0, q) */
      for (int r = 0; r < rows; ++r) emit({RowOpKind::ReduceRow, r, 0, q});
    }
    if (src_slot != slot) {
      emit({RowOpKind::RegisterSwap, slot, src_slot, 0});
      std::swap(out.register_map[static_cast<size_t>(slot)],
                out.register_map[static_cast<size_t>(src_slot)]);
    }
    if (src_row != rank) emit({RowOpKind::Swap, rank, src_row, 0});

    out.pivot_cols.push_back(out.register_map[static_cast<size_t>(slot)] +
                             (rotate ? n : 0));

    if (w.rows[rank].x(slot) != 1) {
      emit({RowOpKind::Scale, rank, 0, mod_inverse(w.rows[rank].x(slot), q)});
      emit({RowOpKind::ReduceRow, rank, 0, q});
    }
    for (int r = 0; r < rows; ++r) {
      if (r == rank || w.rows[r].x(slot) == 0) continue;
      emit({RowOpKind::AddMultiple, r, rank, q - w.rows[r].x(slot)});
      emit({RowOpKind::ReduceRow, r, 0, q});
    }
    ++rank;
  }
  out.rank = rank;

  /* leftovers are congruent to zero: commutation with the pivots pins
     every remaining entry */
  for (int r = rank; r < rows; ++r) {
    emit({RowOpKind::ReduceRow, r, 0, q});
    if (!w.rows[r].is_zero())
      throw std::invalid_argument("rows do not commute mod " + q.get_str());
  }
  return out;
}

GeneratorMatrix rref_mod(const GeneratorMatrix &m, const Int &q) {
  if (!is_prime(q)) throw std::invalid_argument("rref needs a prime modulus");
  GeneratorMatrix w = m;
  for (auto &row : w.rows)
    for (Int &v : row.entries) v = mod_pos(v, q);

  const int cols = 2 * m.n;
  int rank = 0;
  for (int col = 0; col < cols && rank < w.row_count(); ++col) {
    int pivot = -1;
    for (int r = rank; r < w.row_count(); ++r)
      if (w.rows[r].entries[static_cast<size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(w.rows[rank], w.rows[pivot]);
    Int inv = mod_inverse(w.rows[rank].entries[static_cast<size_t>(col)], q);
    for (Int &v : w.rows[rank].entries) v = mod_pos(v * inv, q);
    for (int r = 0; r < w.row_count(); ++r) {
      if (r == rank) continue;
      const Int f = w.rows[r].entries[static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c)
        w.rows[r].entries[static_cast<size_t>(c)] =
            mod_pos(w.rows[r].entries[static_cast<size_t>(c)] -
                        f * w.rows[rank].entries[static_cast<size_t>(c)],
                    q);
    }
    ++rank;
  }
  w.rows.resize(static_cast<size_t>(rank), PauliVector(m.n));
  return w;
}

bool same_row_span_mod(const GeneratorMatrix &a, const GeneratorMatrix &b,
                       const Int &q) {
  if (a.n != b.n) return false;
  GeneratorMatrix ra = rref_mod(a, q), rb = rref_mod(b, q);
  return ra.rows == rb.rows;
}

}  // namespace ldikit
