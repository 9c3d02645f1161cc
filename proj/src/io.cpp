#include "semiprob/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "semiprob/errors.hpp"

namespace semiprob {

namespace {

// Next non-blank, non-comment line; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    if (line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

std::vector<long long> parse_integers(const std::string& line,
                                      const std::string& what) {
  std::istringstream stream(line);
  std::vector<long long> values;
  std::string token;
  while (stream >> token) {
    try {
      size_t consumed = 0;
      values.push_back(std::stoll(token, &consumed));
      if (consumed != token.size()) {
        throw std::invalid_argument(token);
      }
    } catch (const std::exception&) {
      throw ParseError(what + ": not an integer: '" + token + "'");
    }
  }
  return values;
}

}  // namespace

std::optional<FiniteSemigroup> parse_table(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) {
    return std::nullopt;
  }
  const auto header = parse_integers(line, "table header");
  if (header.size() != 1) {
    throw ParseError("table header must be a single integer (the order), got '"
                     + line + "'");
  }
  if (header[0] < 1 || header[0] > 10000) {
    throw ParseError("unreasonable table order: " + std::to_string(header[0]));
  }
  const int n = static_cast<int>(header[0]);
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (!next_data_line(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " table rows, got "
                       + std::to_string(x));
    }
    const auto row = parse_integers(line, "table row " + std::to_string(x));
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("row " + std::to_string(x) + " has "
                       + std::to_string(row.size()) + " entries, expected "
                       + std::to_string(n));
    }
    for (int y = 0; y < n; ++y) {
      if (row[y] < 0 || row[y] >= n) {
        throw BadEntryError(x, y, row[y]);
      }
      flat.push_back(static_cast<int>(row[y]));
    }
  }
  return FiniteSemigroup::from_flat(n, std::move(flat));
}

FiniteSemigroup parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  auto table = parse_table(in);
  if (!table.has_value()) {
    throw ParseError(path + ": no table found");
  }
  std::string line;
  if (next_data_line(in, line)) {
    throw ParseError(path + ": trailing content after the table: '" + line
                     + "'");
  }
  return std::move(*table);
}

std::string emit_table(const FiniteSemigroup& s) {
  std::string out = std::to_string(s.order()) + "\n";
  for (int x = 0; x < s.order(); ++x) {
    for (int y = 0; y < s.order(); ++y) {
      if (y > 0) {
        out += " ";
      }
      out += std::to_string(s.product(x, y));
    }
    out += "\n";
  }
  return out;
}

Partition parse_partition(std::istream& in, int expected_size) {
  std::string line;
  if (!next_data_line(in, line)) {
    throw ParseError("no partition data line found");
  }
  const auto values = parse_integers(line, "partition labels");
  if (static_cast<int>(values.size()) != expected_size) {
    throw ParseError("partition has " + std::to_string(values.size())
                     + " labels, expected " + std::to_string(expected_size));
  }
  std::vector<int> labels(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < INT32_MIN || values[i] > INT32_MAX) {
      throw ParseError("partition label out of range: "
                       + std::to_string(values[i]));
    }
    labels[i] = static_cast<int>(values[i]);
  }
  return Partition::from_labels(labels);
}

Partition parse_partition_file(const std::string& path, int expected_size) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open file: " + path);
  }
  return parse_partition(in, expected_size);
}

}  // namespace semiprob
