#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semiprob/rational.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

// The machine-checkable claims. T1..T7 are the numbered results; PHI is the
// lattice-correspondence identity on towers, HOM the representation
// homomorphism and kernel-oracle agreement, TOWER the tower-shift and
// power-set characterizations.
enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, PHI, HOM, TOWER };

TheoremId parse_theorem_id(const std::string& id);  // UnknownCheckError
std::string theorem_id_name(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

struct VerifyBounds {
  int max_order = 0;  // exhaustive checks; 0 means the id's default
  int max_size = 0;   // T1: largest carrier size
  int max_m = 0;      // T2: base sizes 1..max_m
  int max_k = 0;      // T2: fiber sizes 2..max_k; T3: 1..max_k
  int jobs = 1;
};

VerifyBounds default_bounds(TheoremId id);

struct Counterexample {
  std::string context;  // the instance: table, parameters, congruence
  std::string check;    // which equation or equivalence failed
};

struct FamilyRow {
  int m = 0;
  int k = 0;
  Rational value;
};

struct EnumerationReport {
  std::string id;
  long long cases = 0;
  std::vector<std::pair<int, long long>> counts_by_order;
  std::vector<Counterexample> counterexamples;
  std::vector<FamilyRow> family;  // T2/T3 parameter sweeps

  bool ok() const { return counterexamples.empty(); }
};

// Runs one check over its exhaustive population or parameter grid. Bounds
// outside the supported caps raise Error.
EnumerationReport verify_theorem(TheoremId id, VerifyBounds bounds = {});

// Deterministic list of distinct construction-built semigroups of order
// <= 8, for the representation-homomorphism population.
std::vector<FiniteSemigroup> construction_sample(int count = 100);

}  // namespace semiprob
