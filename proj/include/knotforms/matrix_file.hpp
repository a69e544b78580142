#pragma once

#include <string>
#include <string_view>

#include "knotforms/matrix.hpp"

namespace knotforms {

/// Text format: a header "q=<int> rank=<int>", then `rank` rows of
/// whitespace-separated integers. '#' starts a comment; blank lines are
/// ignored. U+2212 is accepted as a minus sign.
struct MatrixFile {
  int q = 1;
  IntMatrix matrix;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

MatrixFile parse_matrix_file(std::string_view text);
std::string emit_matrix_file(const MatrixFile& f);

}  // namespace knotforms
