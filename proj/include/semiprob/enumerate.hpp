#pragma once

#include <optional>
#include <vector>

#include "semiprob/partition.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

// Every associative n x n table exactly once, as row-major flat tables in
// lexicographic order. Backtracking cell fill with incremental associativity
// pruning; with jobs > 1 the search space is split by table prefix and the
// per-prefix results are concatenated in prefix order, so the output is
// identical for every jobs value. Guarded at n <= 5.
std::vector<std::vector<int>> enumerate_tables(int n, int jobs = 1);

// Same stream, wrapped (and re-validated) as semigroups.
std::vector<FiniteSemigroup> enumerate_semigroups(int n, int jobs = 1);

// Filters all n^(n^2) tables by a full triple scan. Independent of the
// backtracking path; n <= 3 only.
long long naive_associative_count(int n);

// Bijection transporting the first table to the second, if one exists.
// Backtracking with idempotent-image pruning; n <= 8.
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s1,
                                                 const FiniteSemigroup& s2);

bool are_isomorphic(const FiniteSemigroup& s1, const FiniteSemigroup& s2);

// Literal O(n^3) pair-scan definition of the kernel relation; oracle for
// rightrep's column-grouping theta.
Partition brute_theta(const FiniteSemigroup& s);

}  // namespace semiprob
