#include "ldikit/pauli.hpp"

#include <sstream>
#include <stdexcept>

namespace ldikit {

namespace {

bool is_probable_prime(const Int &q) {
  return mpz_probab_prime_p(q.get_mpz_t(), 30) != 0;
}

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/* Parses the exponent that may follow an X or Z: "^<signed int>", or
   nothing (meaning 1). pos sits just past the letter on entry and past
   the exponent on exit. */
Int parse_exponent(const std::string &tok, size_t &pos) {
  if (pos >= tok.size() || tok[pos] != '^') return 1;
  ++pos;
  size_t start = pos;
  if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) ++pos;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
    ++pos;
  require(pos > start && (tok[start] == '-' || tok[start] == '+'
                              ? pos > start + 1
                              : true),
          "malformed exponent in token '" + tok + "'");
  if (tok[start] == '+') ++start;
  return Int(tok.substr(start, pos - start));
}

/* One site: "I", or "X[^e]", "Z[^e]", "X[^e]Z[^e]". X strictly before Z,
   each letter at most once. */
void parse_site(const std::string &tok, Int &x, Int &z) {
  require(!tok.empty(), "empty site token");
  if (tok == "I") {
    x = 0;
    z = 0;
    return;
  }
  size_t pos = 0;
  bool saw_any = false;
  if (tok[pos] == 'X') {
    ++pos;
    x = parse_exponent(tok, pos);
    saw_any = true;
  }
  if (pos < tok.size() && tok[pos] == 'Z') {
    ++pos;
    z = parse_exponent(tok, pos);
    saw_any = true;
  }
  require(saw_any && pos == tok.size(), "malformed site token '" + tok + "'");
}

}  // namespace

LocalDimension LocalDimension::prime(const Int &q) {
  if (q < 2 || !is_probable_prime(q))
    throw std::invalid_argument("not a prime: " + q.get_str());
  return {DimKind::Prime, q};
}

LocalDimension LocalDimension::modulo(const Int &m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  return {DimKind::Modulo, m};
}

LocalDimension LocalDimension::integers() { return {DimKind::Integers, 0}; }
LocalDimension LocalDimension::reals_modulo() {
  return {DimKind::RealsModulo, 0};
}
LocalDimension LocalDimension::reals() { return {DimKind::Reals, 0}; }

LocalDimension LocalDimension::from_modulus(const Int &q) {
  if (q < 2) throw std::invalid_argument("modulus must be at least 2");
  return is_probable_prime(q) ? LocalDimension{DimKind::Prime, q}
                              : LocalDimension{DimKind::Modulo, q};
}

std::string to_string(const LocalDimension &dim) {
  switch (dim.kind) {
    case DimKind::Prime:
    case DimKind::Modulo:
      return dim.modulus.get_str();
    case DimKind::Integers:
      return "Z";
    case DimKind::RealsModulo:
      return "2pi";
    case DimKind::Reals:
      return "R";
  }
  return "?";
}

bool PauliVector::is_zero() const {
  for (const Int &v : entries)
    if (v != 0) return false;
  return true;
}

PauliVector phi_encode(const std::string &pauli, int expect_n) {
  std::istringstream in(pauli);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  require(!tokens.empty(), "no site tokens");
  if (expect_n >= 0)
    require(static_cast<int>(tokens.size()) == expect_n,
            "expected " + std::to_string(expect_n) + " sites, got " +
                std::to_string(tokens.size()));
  PauliVector v(static_cast<int>(tokens.size()));
  for (size_t i = 0; i < tokens.size(); ++i)
    parse_site(tokens[i], v.x(static_cast<int>(i)), v.z(static_cast<int>(i)));
  return v;
}

std::string phi_decode(const PauliVector &v) {
  std::string out;
  for (int i = 0; i < v.n; ++i) {
    if (i > 0) out += ' ';
    const Int &a = v.x(i), &b = v.z(i);
    if (a == 0 && b == 0) {
      out += 'I';
      continue;
    }
    if (a != 0) {
      out += 'X';
      if (a != 1) out += '^' + a.get_str();
    }
    if (b != 0) {
      out += 'Z';
      if (b != 1) out += '^' + b.get_str();
    }
  }
  return out;
}

Int symplectic_product(const PauliVector &u, const PauliVector &v) {
  if (u.n != v.n)
    throw std::invalid_argument("register count mismatch in product");
  Int acc = 0;
  for (int i = 0; i < u.n; ++i) acc += u.x(i) * v.z(i) - u.z(i) * v.x(i);
  return acc;
}

int pauli_weight(const PauliVector &v) {
  int w = 0;
  for (int i = 0; i < v.n; ++i)
    if (v.x(i) != 0 || v.z(i) != 0) ++w;
  return w;
}

void GeneratorMatrix::append_row(const PauliVector &row) {
  if (row.n != n)
    throw std::invalid_argument("row has " + std::to_string(row.n) +
                                " registers, matrix has " + std::to_string(n));
  rows.push_back(row);
}

GeneratorMatrix matrix_from_rows(int n, LocalDimension dim,
                                 const std::vector<std::vector<Int>> &rows) {
  GeneratorMatrix m(n, dim);
  for (const auto &raw : rows) {
    if (static_cast<int>(raw.size()) != 2 * n)
      throw std::invalid_argument("raw row width is not 2n");
    PauliVector v(n);
    v.entries.assign(raw.begin(), raw.end());
    m.rows.push_back(v);
  }
  return m;
}

bool Syndrome::all_zero() const {
  for (const Int &v : values)
    if (v != 0) return false;
  return true;
}

bool Syndrome::all_zero_mod(const Int &q) const {
  for (const Int &v : values)
    if (!mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t())) return false;
  return true;
}

Syndrome syndrome_of(const GeneratorMatrix &m, const PauliVector &e) {
  Syndrome s;
  s.values.reserve(m.rows.size());
  for (const auto &row : m.rows) s.values.push_back(symplectic_product(row, e));
  return s;
}

}  // namespace ldikit
