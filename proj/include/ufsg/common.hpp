#pragma once

#include <stdexcept>

namespace ufsg {

// Raised by the text grammars (elements, words, rationals, vector files).
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { left, right };

}  // namespace ufsg
