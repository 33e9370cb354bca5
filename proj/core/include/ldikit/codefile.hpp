#pragma once

#include <iosfwd>
#include <string>

#include "ldikit/pauli.hpp"

namespace ldikit {

/* Plain text exchange format for generator matrices.

     QEC1 n=<int> rows=<int> dim=<int or Z>
     <2n signed integers per row, optionally with a | between the x and
      z halves>

   Lines starting with # are comments. dim=Z marks exact integer exponents
   (the invariant setting); an integer dim is the local dimension, tagged
   Prime when prime and Modulo otherwise. render_code_file always emits the
   separator and one row per generator; parse(render(m)) == m. */
GeneratorMatrix parse_code_file(const std::string &text);
GeneratorMatrix parse_code_stream(std::istream &in);
GeneratorMatrix load_code_file(const std::string &path);

std::string render_code_file(const GeneratorMatrix &m);
void save_code_file(const GeneratorMatrix &m, const std::string &path);

} // namespace ldikit
