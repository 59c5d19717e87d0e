#include "srcomplex/matrix_io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "srcomplex/error.hpp"

namespace srcomplex {
namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

Index parse_dimension(std::string_view token) {
  const auto value = Integer::parse(token);
  if (!value || *value < Integer(0) || *value > Integer(1'000'000)) {
    throw Error(ErrorCode::MalformedHeader, "matrix header: bad dimension '" + std::string(token) + "'");
  }
  return static_cast<Index>(value->to_int64());
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) throw Error(ErrorCode::MalformedHeader, "matrix header: expected 'rows cols'");
  const Index rows = parse_dimension(tokens[0]);
  const Index cols = parse_dimension(tokens[1]);
  IntMatrix a(rows, cols);
  std::size_t next = 2;
  for (std::size_t k = 2; k < tokens.size(); ++k) {
    if (!Integer::parse(tokens[k])) {
      throw Error(ErrorCode::NonIntegerToken, "matrix entry: '" + std::string(tokens[k]) + "' is not an integer");
    }
  }
  const std::size_t expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (tokens.size() - 2 != expected) {
    throw Error(ErrorCode::EntryCountMismatch, "matrix body: expected " + std::to_string(expected) + " entries, found " +
                                                   std::to_string(tokens.size() - 2));
  }
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) a(i, j) = *Integer::parse(tokens[next++]);
  }
  return a;
}

std::string write_matrix(const IntMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += a(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

void write_matrix_file(const std::filesystem::path& path, const IntMatrix& a) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << write_matrix(a);
  if (!out) throw Error(ErrorCode::Io, "short write to " + path.string());
}

std::string matrix_hash(const IntMatrix& a) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : write_matrix(a)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace srcomplex
