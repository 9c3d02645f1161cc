#pragma once

#include <map>
#include <utility>
#include <vector>

#include "semiprob/partition.hpp"
#include "semiprob/rational.hpp"
#include "semiprob/semigroup.hpp"
#include "semiprob/structure.hpp"

namespace semiprob {

// A fibered product system over a base semigroup T: one non-empty fiber A_x
// per base element and, for each base pair (x, y), a map A_x -> A_{x*y}.
// Coherent systems produce a semigroup on the disjoint union of the fibers
// with (a, x) * (b, y) = (maps[x][y](a), x*y).
struct FiberedSystem {
  FiniteSemigroup base;
  std::vector<int> fiber_sizes;
  // maps[x][y][i] = image in fiber x*y of local element i of fiber x.
  std::vector<std::vector<std::vector<int>>> maps;
};

// Global numbering lays fibers out consecutively in base-element order; the
// fibers partition records which global element belongs to which fiber.
struct FiberedSemigroup {
  FiniteSemigroup semigroup;
  Partition fibers;
};

// Validates the coherence law maps[x][y] then maps[x*y][z] == maps[x][y*z]
// and builds the semigroup; the rebuilt table is revalidated and cannot fail
// when coherence holds.
FiberedSemigroup build_fibered(const FiberedSystem& sys);

struct FiberRefinement {
  bool refines;  // every fiber inside one theta-class
  bool exact;    // fibers are exactly the theta-classes
};

FiberRefinement fibers_refine_theta(const FiniteSemigroup& s,
                                    const Partition& fibers);

// Right zero base of order m; all products land on the chosen star element
// of the right factor's fiber.
struct Construct2Spec {
  int m = 0;
  std::vector<int> fiber_sizes;
  std::vector<int> stars;  // empty means all 0
};

FiberedSemigroup build_construct2(const Construct2Spec& spec);

// m pairwise-bijective fibers of size k >= 2 over a right zero base.
FiberedSemigroup build_a_mk(int m, int k);

// One fiber of size k+1, the remaining m-1 fibers singletons (m >= 2); the
// large fiber is placed first.
FiberedSemigroup build_a_k(int m, int k);

// ((k+1)^2 + m - 1) / (m + k)^2, the kernel probability of build_a_k(m, k).
Rational predicted_p_theta_family(int m, int k);

// Left zero semigroup L = {0..left_zero_size-1} plus extra_size further
// elements; every product a*b = phi[a], with phi fixing L pointwise.
struct Construct3Spec {
  int left_zero_size = 0;
  int extra_size = 0;
  std::vector<int> phi;
};

FiniteSemigroup build_construct3(const Construct3Spec& spec);

// The same-carrier rebuild a*b = phi(a) from a decomposition; reproduces the
// decomposed semigroup exactly.
FiniteSemigroup rebuild_from_decomposition(const LeftZeroByNullDecomposition& d);

// Fibered build over a left cancellative base where maps are keyed by pairs
// (t, r) with r in tT; the map used for a product with right factor in fiber
// x is the one keyed (t, t*x). Missing referenced keys are rejected; keys
// with r outside tT are never referenced and are ignored.
FiberedSemigroup build_construct1(
    const FiniteSemigroup& base, const std::vector<int>& fiber_sizes,
    const std::map<std::pair<int, int>, std::vector<int>>& translation_maps);

}  // namespace semiprob
