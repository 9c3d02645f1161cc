#pragma once

#include <optional>
#include <vector>

#include "semiprob/semigroup.hpp"

namespace semiprob {

// xa = xb implies a = b (every left translation injective).
bool is_left_cancellative(const FiniteSemigroup& s);

bool is_left_zero(const FiniteSemigroup& s);   // ab = a
bool is_right_zero(const FiniteSemigroup& s);  // ab = b

// Has a zero and every product equals it.
bool is_null(const FiniteSemigroup& s);

// The unique z with az = za = z for all a, if present.
std::optional<int> zero_element(const FiniteSemigroup& s);

// Has a zero z with A^k = {z} for some k <= |A|.
bool is_nilpotent(const FiniteSemigroup& s);

// Witnesses that A is a left zero semigroup E(A) extended by a null
// semigroup: every product ab equals phi(a) = a^2, which lands in E(A).
struct LeftZeroByNullDecomposition {
  ElementSet idempotent_ideal;  // E(A)
  std::vector<int> phi_map;     // phi_map[a] = a^2, fixes E(A) pointwise
};

// Succeeds iff every row of the table is constant (equivalently, P_theta = 1).
std::optional<LeftZeroByNullDecomposition> decompose_left_zero_by_null(
    const FiniteSemigroup& s);

// E(A) is a left zero subsemigroup and an ideal, and A/E(A) is nilpotent.
// E(A) is the only possible ideal in such an extension, so no search is done.
bool is_ideal_extension_left_zero_by_nilpotent(const FiniteSemigroup& s);

}  // namespace semiprob
