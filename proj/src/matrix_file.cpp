#include "knotforms/matrix_file.hpp"

#include <regex>
#include <sstream>
#include <vector>

namespace knotforms {

namespace {

std::string normalize_minus(std::string line) {
  static const std::string unicode_minus = "\xE2\x88\x92";
  for (std::size_t pos; (pos = line.find(unicode_minus)) != std::string::npos;) line.replace(pos, unicode_minus.size(), "-");
  return line;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool parse_integer(const std::string& token, Integer& out) {
  static const std::regex pattern("[-+]?[0-9]+");
  if (!std::regex_match(token, pattern)) return false;
  out.set_str(token[0] == '+' ? token.substr(1) : token, 10);
  return true;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  MatrixFile f;
  bool have_header = false;
  std::size_t rank = 0, row = 0;
  std::vector<Integer> entries;
  int line_no = 0;
  int header_line = 0;
  std::istringstream in{std::string(text)};
  static const std::regex header(R"(\s*q\s*=\s*([-+]?[0-9]+)\s+rank\s*=\s*([-+]?[0-9]+)\s*)");

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = normalize_minus(raw.substr(0, raw.find('#')));
    auto toks = tokens(line);
    if (toks.empty()) continue;

    if (!have_header) {
      std::smatch m;
      if (!std::regex_match(line, m, header)) throw ParseError(line_no, "expected header \"q=<int> rank=<int>\"");
      if (m[1].length() > 9 || m[2].length() > 9) throw ParseError(line_no, "header value out of range");
      long q = std::stol(m[1]);
      long r = std::stol(m[2]);
      if (q < 1) throw ParseError(line_no, "q must be >= 1");
      if (r < 0) throw ParseError(line_no, "rank must be >= 0");
      f.q = static_cast<int>(q);
      rank = static_cast<std::size_t>(r);
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (row == rank) throw ParseError(line_no, "unexpected content after " + std::to_string(rank) + " rows");
    if (toks.size() != rank)
      throw ParseError(line_no, "expected " + std::to_string(rank) + " integers, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < rank; ++j) {
      Integer x;
      if (!parse_integer(toks[j], x)) throw ParseError(line_no, "not an integer: \"" + toks[j] + "\"");
      entries.push_back(std::move(x));
    }
    ++row;
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header \"q=<int> rank=<int>\"");
  if (row != rank)
    throw ParseError(line_no + 1, "expected " + std::to_string(rank) + " rows after the header on line " +
                                      std::to_string(header_line) + ", found " + std::to_string(row));
  f.matrix = IntMatrix(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) f.matrix(i, j) = std::move(entries[i * rank + j]);
  return f;
}

std::string emit_matrix_file(const MatrixFile& f) {
  std::string out = "q=" + std::to_string(f.q) + " rank=" + std::to_string(f.matrix.rows()) + "\n";
  for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) out += (j ? " " : "") + to_string(f.matrix(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace knotforms
