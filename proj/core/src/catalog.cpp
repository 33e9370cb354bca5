#include "ldikit/catalog.hpp"

#include <stdexcept>

namespace ldikit {

namespace {

int parse_suffix(const std::string &name, const std::string &prefix) {
  const std::string digits = name.substr(prefix.size());
  if (digits.empty()) throw std::invalid_argument("unknown catalog name");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("unknown catalog name");
  if (digits.size() > 2) throw std::invalid_argument("catalog size too large");
  return std::stoi(digits);
}

/* column j (1-based) gets sign -1 when the low three bits of j have odd
   parity; any pair of row constraints leaves a free low bit, so the signs
   cancel in every pairwise product */
int hamming_sign(int j) {
  const int low = j & 7;
  const int parity = ((low >> 2) ^ (low >> 1) ^ low) & 1;
  return parity ? -1 : 1;
}

} // namespace

CatalogEntry two_register_example(const Int &q_display) {
  if (q_display < 2) throw std::invalid_argument("display dimension >= 2");
  CatalogEntry e;
  e.name = "two_register";
  e.matrix = GeneratorMatrix(2, LocalDimension::integers());
  e.matrix.append_row(phi_encode("X X^-1"));
  e.matrix.append_row(phi_encode("Z Z"));
  e.declared_n = 2;
  e.declared_k = 0;
  e.declared_d = 2;
  e.declared_dim = LocalDimension::from_modulus(q_display);
  e.notes = "smallest invariant pair; the lone code state at dimension q is "
            "the uniform superposition of |j, q-j>";
  return e;
}

CatalogEntry steane_ldi() {
  CatalogEntry e;
  e.name = "steane_ldi";
  e.matrix = matrix_from_rows(
      7, LocalDimension::integers(),
      {{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
       {0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, -1, 1, 0},
       {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, -1, 1}});
  e.declared_n = 7;
  e.declared_k = 1;
  e.declared_d = 3;
  e.declared_dim = LocalDimension::prime(2);
  e.notes = "seven register distance three code in invariant form, entry "
            "bound 1; distance three at every local dimension";
  e.logicals.push_back(phi_encode("X X X X X X X"));
  e.logicals.push_back(phi_encode("Z Z^-1 Z Z^-1 Z Z^-1 Z"));
  return e;
}

CatalogEntry hamming_family(int N) {
  if (N < 3) throw std::invalid_argument("hamming family starts at N = 3");
  if (N > 20) throw std::invalid_argument("hamming family size too large");
  if (N == 3) {
    CatalogEntry e = steane_ldi();
    e.name = "hamming_3";
    return e;
  }
  const int n = (1 << N) - 1;
  CatalogEntry e;
  e.name = "hamming_" + std::to_string(N);
  e.matrix = GeneratorMatrix(n, LocalDimension::integers());
  for (int t = 0; t < N; ++t) {
    PauliVector row(n);
    for (int j = 1; j <= n; ++j)
      if (j & (1 << t)) row.x(j - 1) = 1;
    e.matrix.append_row(row);
  }
  for (int t = 0; t < N; ++t) {
    PauliVector row(n);
    for (int j = 1; j <= n; ++j)
      if (j & (1 << t)) row.z(j - 1) = hamming_sign(j);
    e.matrix.append_row(row);
  }
  e.declared_n = n;
  e.declared_k = n - 2 * N;
  e.declared_d = 3;
  e.declared_dim = LocalDimension::prime(2);
  e.notes = "invariant form of the binary hamming css family; entry bound "
            "stays 1 for every member";
  return e;
}

CatalogEntry toric_code(int N) {
  if (N < 2) throw std::invalid_argument("torus side at least 2");
  if (N > 32) throw std::invalid_argument("torus side too large");
  const int n = 2 * N * N;
  /* east edge of vertex (r, c), then south edge of vertex (r, c) */
  auto wrap = [N](int v) { return ((v % N) + N) % N; };
  auto east = [N, wrap](int r, int c) { return wrap(r) * N + wrap(c); };
  auto south = [N, wrap](int r, int c) {
    return N * N + wrap(r) * N + wrap(c);
  };

  CatalogEntry e;
  e.name = "toric_" + std::to_string(N);
  e.matrix = GeneratorMatrix(n, LocalDimension::integers());

  /* vertices: +1 north and east, -1 south and west; row major with the
     last one dropped (the families each carry one relation) */
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      if (r == N - 1 && c == N - 1) continue;
      PauliVector row(n);
      row.x(south(r - 1, c)) = 1;
      row.x(east(r, c)) = 1;
      row.x(south(r, c)) = -1;
      row.x(east(r, c - 1)) = -1;
      e.matrix.append_row(row);
    }
  /* plaquettes: +1 north and west, -1 south and east */
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      if (r == N - 1 && c == N - 1) continue;
      PauliVector row(n);
      row.z(east(r, c)) = 1;
      row.z(south(r, c)) = 1;
      row.z(east(r + 1, c)) = -1;
      row.z(south(r, c + 1)) = -1;
      e.matrix.append_row(row);
    }

  e.declared_n = n;
  e.declared_k = 2;
  e.declared_d = N;
  e.declared_dim = LocalDimension::prime(2);
  e.notes = "toric code on an N by N torus with signed stars and "
            "plaquettes so all products cancel over the integers";
  return e;
}

std::vector<std::string> catalog_names() {
  return {"two_register", "steane_ldi", "hamming_4",
          "hamming_5",    "toric_2",    "toric_3"};
}

CatalogEntry catalog_lookup(const std::string &name) {
  if (name == "two_register") return two_register_example(2);
  if (name == "steane_ldi") return steane_ldi();
  if (name.rfind("hamming_", 0) == 0)
    return hamming_family(parse_suffix(name, "hamming_"));
  if (name.rfind("toric_", 0) == 0)
    return toric_code(parse_suffix(name, "toric_"));
  throw std::invalid_argument("unknown catalog name: " + name);
}

} // namespace ldikit
