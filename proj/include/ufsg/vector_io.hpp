#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ufsg/common.hpp"
#include "ufsg/rational.hpp"
#include "ufsg/semigroup_vector.hpp"
#include "ufsg/thompson.hpp"

namespace ufsg {

// Vector file format: one line per support element,
//   element <TAB> re <TAB> im
// with rationals printed p/q (bare p when q = 1). The im field may be omitted
// on input; blank lines and lines starting with '#' are skipped; repeated
// elements accumulate.
inline SemigroupVector<ThompsonElement> read_vector_tsv(std::istream& in, bool strict = false) {
  SemigroupVector<ThompsonElement> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3)
      throw parse_error("line " + std::to_string(line_no) + ": expected 2 or 3 fields");
    try {
      const ThompsonElement element = parse_element(fields[0], strict);
      Coefficient value(parse_rational(fields[1]),
                        fields.size() == 3 ? parse_rational(fields[2]) : Rational(0));
      out.add(element, std::move(value));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline void write_vector_tsv(std::ostream& os, const SemigroupVector<ThompsonElement>& v) {
  for (const auto& [element, value] : v.support())
    os << to_string(element) << '\t' << format_rational(value.re) << '\t'
       << format_rational(value.im) << '\n';
}

}  // namespace ufsg
