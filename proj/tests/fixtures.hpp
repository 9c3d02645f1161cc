#pragma once

#include "semiprob/semigroup.hpp"

// Canonical small semigroups shared across the test suites.
namespace fixtures {

using semiprob::FiniteSemigroup;

// ab = a
inline FiniteSemigroup lz2() {
  return FiniteSemigroup::from_table(2, {{0, 0}, {1, 1}});
}

// ab = b
inline FiniteSemigroup rz2() {
  return FiniteSemigroup::from_table(2, {{0, 1}, {0, 1}});
}

// two-element group
inline FiniteSemigroup c2() {
  return FiniteSemigroup::from_table(2, {{0, 1}, {1, 0}});
}

// null semigroup on two elements
inline FiniteSemigroup n2() {
  return FiniteSemigroup::from_table(2, {{0, 0}, {0, 0}});
}

// nilpotent: 2*2 = 1, every other product 0
inline FiniteSemigroup n3() {
  return FiniteSemigroup::from_table(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
}

inline FiniteSemigroup trivial() {
  return FiniteSemigroup::from_table(1, {{0}});
}

}  // namespace fixtures
