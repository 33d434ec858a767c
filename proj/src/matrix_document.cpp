#include "nczeta/matrix_document.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nczeta/errors.hpp"
#include "parsing.hpp"

namespace nczeta {

MatrixDocument parse_matrix(std::string_view text) {
  MatrixDocument doc;
  GeneratorTable generators;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  bool entries_started = false;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    detail::Scanner in(line, line_no);
    if (!in.at_end()) {
      if (in.peek() == '[') {
        if (doc.dim == 0) in.fail("entry before the `dim` header");
        entries_started = true;
        in.expect('[');
        const auto row = static_cast<std::size_t>(in.small_integer(1'000'000));
        in.expect(',');
        const auto col = static_cast<std::size_t>(in.small_integer(1'000'000));
        in.expect(']');
        in.expect('=');
        if (row < 1 || row > doc.dim)
          throw ValidationError("line " + std::to_string(line_no) + ": row index " + std::to_string(row) +
                                " outside 1.." + std::to_string(doc.dim));
        if (col < 1 || col > doc.dim)
          throw ValidationError("line " + std::to_string(line_no) + ": column index " + std::to_string(col) +
                                " outside 1.." + std::to_string(doc.dim));
        if (!seen.emplace(row, col).second)
          throw ValidationError("line " + std::to_string(line_no) + ": duplicate entry [" + std::to_string(row) +
                                "," + std::to_string(col) + "]");
        if (in.at_end()) in.fail("missing polynomial after '='");
        const std::size_t offset = in.position();
        doc.assignments.push_back({row, col, std::string(line.substr(offset))});
        // Parse now so generators are declared in order of appearance.
        detail::Scanner poly(line.substr(offset), line_no, offset + 1);
        AlgebraElement value = detail::parse_element_at(poly, generators);
        if (!poly.at_end()) poly.fail("unexpected character in polynomial");
        doc.named.matrix(row - 1, col - 1) = std::move(value);
      } else {
        const std::size_t kw_pos = in.position();
        const std::string keyword = in.identifier();
        if (keyword == "dim") {
          if (doc.dim != 0) in.fail_at(kw_pos, "second `dim` header");
          const long d = in.small_integer(100'000);
          if (d < 1) in.fail_at(kw_pos, "dimension must be at least 1");
          doc.dim = static_cast<std::size_t>(d);
          doc.named.matrix = AlgebraMatrix(doc.dim);
        } else if (keyword == "gens") {
          if (entries_started || generators.size() != 0) in.fail_at(kw_pos, "`gens` must precede all entries");
          while (!in.at_end()) {
            const std::size_t name_pos = in.position();
            const std::string name = in.identifier();
            if (generators.find(name)) in.fail_at(name_pos, "generator '" + name + "' listed twice");
            generators.declare(name);
          }
        } else {
          in.fail_at(kw_pos, "expected `dim`, `gens` or an entry `[i,j] = ...`");
        }
        if (!in.at_end()) in.fail("unexpected trailing text");
      }
    }
    if (end == text.size()) break;
  }
  if (doc.dim == 0) throw ParseError("missing `dim` header", line_no, 1);
  doc.named.generators = std::move(generators);
  return doc;
}

std::string to_document_text(const NamedMatrix& m) {
  std::string out = "dim " + std::to_string(m.matrix.dim()) + "\n";
  if (m.generators.size() > 0) {
    out += "gens";
    for (const auto& n : m.generators.names()) out += " " + n;
    out += "\n";
  }
  for (std::size_t i = 0; i < m.matrix.dim(); ++i)
    for (std::size_t j = 0; j < m.matrix.dim(); ++j)
      if (!m.matrix(i, j).is_zero())
        out += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " +
               to_string(m.matrix(i, j), m.generators) + "\n";
  return out;
}

}  // namespace nczeta
