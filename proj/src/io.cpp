#include "circrob/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace circrob {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  Index i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    Index j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view token, Index row, Index col) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("cannot parse '" + std::string(token) + "' as a number at " +
                         detail::cell(row, col),
                     row, col);
  }
  return v;
}

}  // namespace

DissimilarityMatrix<double> load_matrix(std::istream& in, double epsilon, bool csv) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (csv) std::replace(line.begin(), line.end(), ',', ' ');
    if (!split_tokens(line).empty()) lines.push_back(std::move(line));
  }
  if (lines.empty()) throw InputError("empty matrix input");

  const auto header = split_tokens(lines[0]);
  Index n = 0;
  {
    const auto [ptr, ec] = std::from_chars(header[0].data(), header[0].data() + header[0].size(), n);
    if (header.size() != 1 || ec != std::errc() || ptr != header[0].data() + header[0].size() ||
        n == 0) {
      throw InputError("first line must hold the point count n >= 1");
    }
  }

  const Index data_rows = lines.size() - 1;
  const bool lower = data_rows > 0 && n > 1 && split_tokens(lines[1]).size() == 1;
  const Index expected_rows = lower ? n - 1 : n;
  if (data_rows != expected_rows) {
    throw InputError("expected " + std::to_string(expected_rows) + " data rows for n = " +
                     std::to_string(n) + ", found " + std::to_string(data_rows));
  }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Index r = 0; r < data_rows; ++r) {
    const Index row = lower ? r + 1 : r;
    const auto tokens = split_tokens(lines[r + 1]);
    const Index want = lower ? row : n;
    if (tokens.size() != want) {
      throw InputError("row " + std::to_string(row) + " has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(want),
                       row);
    }
    for (Index c = 0; c < want; ++c) {
      const double v = parse_number(tokens[c], row, c);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = v;
      if (lower) m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(row)) = v;
    }
  }
  return DissimilarityMatrix<double>(std::move(m), epsilon);
}

DissimilarityMatrix<double> load_matrix_file(const std::filesystem::path& path, double epsilon) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return load_matrix(in, epsilon, ext == ".csv");
}

void write_matrix(std::ostream& out, const DissimilarityMatrix<double>& d) {
  const Index n = d.size();
  out << n << '\n';
  char buf[32];
  for (Index i = 0; i < n; ++i) {
    const double* row = d.column_data(i);
    for (Index j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

CircularOrder parse_order(std::string_view text, Index n) {
  std::vector<Index> seq;
  Index start = 0;
  while (start <= text.size()) {
    Index end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(start, end - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("order entry '" + std::string(token) + "' is not an index");
    }
    seq.push_back(v);
    start = end + 1;
  }
  if (seq.size() != n) {
    throw InputError("order has " + std::to_string(seq.size()) + " entries, matrix has " +
                     std::to_string(n) + " points");
  }
  return CircularOrder::from_sequence(std::move(seq));
}

std::string format_order(const CircularOrder& order) {
  std::ostringstream out;
  const auto c = order.canonical();
  for (Index i = 0; i < c.size(); ++i) out << (i ? "," : "") << c.sequence()[i];
  return out.str();
}

}  // namespace circrob
