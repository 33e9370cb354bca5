#include "ldikit/codefile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ldikit {

namespace {

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool is_integer_token(const std::string &t) {
  size_t i = (t.size() > 1 && t[0] == '-') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  return true;
}

Int parse_int_token(const std::string &t, const std::string &where) {
  require(is_integer_token(t), "not an integer in " + where + ": '" + t + "'");
  return Int(t);
}

/* "n=3" -> 3, with the key checked. */
Int header_field(const std::string &tok, const std::string &key) {
  require(tok.size() > key.size() + 1 && tok.compare(0, key.size(), key) == 0 &&
              tok[key.size()] == '=',
          "bad header field, expected " + key + "=...");
  return parse_int_token(tok.substr(key.size() + 1), "header " + key);
}

std::string strip_comment(const std::string &line) {
  size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

GeneratorMatrix parse_code_stream(std::istream &in) {
  std::string line;
  std::string header;
  while (std::getline(in, line)) {
    header = strip_comment(line);
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    header.clear();
  }
  require(!header.empty(), "missing QEC1 header line");

  std::istringstream hs(header);
  std::string magic, ntok, rtok, dtok;
  hs >> magic >> ntok >> rtok >> dtok;
  require(magic == "QEC1", "unknown magic '" + magic + "'");
  require(!dtok.empty(), "truncated header");
  std::string trailing;
  require(!(hs >> trailing), "trailing header tokens");

  Int n_val = header_field(ntok, "n");
  Int rows_val = header_field(rtok, "rows");
  require(n_val >= 1 && n_val <= 4096, "n out of range");
  require(rows_val >= 0 && rows_val <= 4096, "rows out of range");
  int n = static_cast<int>(n_val.get_si());
  int rows = static_cast<int>(rows_val.get_si());

  require(dtok.size() > 4 && dtok.compare(0, 4, "dim=") == 0,
          "bad header field, expected dim=...");
  std::string dim_str = dtok.substr(4);
  LocalDimension dim = dim_str == "Z"
                           ? LocalDimension::integers()
                           : LocalDimension::from_modulus(
                                 parse_int_token(dim_str, "header dim"));

  /* Body is a token stream: rows are delimited by entry count, not line
     breaks, and a lone | is decoration. */
  std::vector<Int> entries;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    for (std::string tok; ls >> tok;) {
      if (tok == "|") continue;
      entries.push_back(parse_int_token(tok, "body"));
    }
  }
  require(static_cast<int>(entries.size()) == rows * 2 * n,
          "body has " + std::to_string(entries.size()) + " entries, header " +
              "promises " + std::to_string(rows * 2 * n));

  GeneratorMatrix m(n, dim);
  for (int r = 0; r < rows; ++r) {
    PauliVector v(n);
    for (int c = 0; c < 2 * n; ++c)
      v.entries[static_cast<size_t>(c)] = entries[static_cast<size_t>(r) * 2 * n + c];
    m.rows.push_back(std::move(v));
  }
  return m;
}

GeneratorMatrix parse_code_file(const std::string &text) {
  std::istringstream in(text);
  return parse_code_stream(in);
}

GeneratorMatrix load_code_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse_code_stream(in);
}

std::string render_code_file(const GeneratorMatrix &m) {
  std::ostringstream out;
  out << "QEC1 n=" << m.n << " rows=" << m.row_count()
      << " dim=" << to_string(m.dim) << '\n';
  for (const auto &row : m.rows) {
    for (int i = 0; i < m.n; ++i) {
      if (i > 0) out << ' ';
      out << row.x(i);
    }
    out << " |";
    for (int i = 0; i < m.n; ++i) out << ' ' << row.z(i);
    out << '\n';
  }
  return out.str();
}

void save_code_file(const GeneratorMatrix &m, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << render_code_file(m);
}

}  // namespace ldikit
