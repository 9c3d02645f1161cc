#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "semiprob/partition.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

// Table file format: a header line with the order n, then n lines of n
// whitespace-separated element indices (row x lists x*0 .. x*(n-1)). Lines
// starting with '#' and blank lines are skipped. Emission is canonical:
// parse(emit(s)) == s and re-emission is byte-identical.

// Reads one table from the stream; returns nullopt at end of input.
std::optional<FiniteSemigroup> parse_table(std::istream& in);

// Reads exactly one table; trailing data is an error.
FiniteSemigroup parse_table_file(const std::string& path);

std::string emit_table(const FiniteSemigroup& s);

// Partition file format: one data line of n block labels (any integers;
// normalized on load). '#' lines and blank lines are skipped.
Partition parse_partition(std::istream& in, int expected_size);
Partition parse_partition_file(const std::string& path, int expected_size);

}  // namespace semiprob
