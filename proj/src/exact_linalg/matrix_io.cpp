#include "ratiocert/exact_linalg/matrix_io.hpp"

#include <sstream>
#include <string>

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(0, 1);
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::size_t parse_count(const std::string& s) {
  Integer v = Integer::parse(s);
  if (v.sign() < 0) throw Error(ErrorKind::kParse, "negative dimension '" + s + "'");
  return static_cast<std::size_t>(v.to_int64());
}

}  // namespace

void write_matrix_csv(std::ostream& os, const ExactMatrix& m) {
  os << m.rows() << ',' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).to_string();
    os << '\n';
  }
}

ExactMatrix read_matrix_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error(ErrorKind::kParse, "missing matrix header");
  auto header = split_commas(line);
  if (header.size() != 2) throw Error(ErrorKind::kParse, "matrix header must be 'rows,cols'");
  const std::size_t rows = parse_count(header[0]);
  const std::size_t cols = parse_count(header[1]);
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) throw Error(ErrorKind::kParse, "matrix ended after " + std::to_string(i) + " rows");
    if (cols == 0) continue;
    auto cells = split_commas(line);
    if (cells.size() != cols) {
      throw Error(ErrorKind::kParse, "row " + std::to_string(i) + " has " + std::to_string(cells.size()) +
                                         " entries, expected " + std::to_string(cols));
    }
    for (const auto& c : cells) entries.push_back(Rational::parse(c));
  }
  return ExactMatrix(rows, cols, std::move(entries));
}

}  // namespace ratiocert
