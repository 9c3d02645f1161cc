#pragma once

#include <functional>
#include <vector>

#include "semiprob/partition.hpp"
#include "semiprob/semigroup.hpp"

namespace semiprob {

class Ideal;

struct CongruenceWitness {
  int a = -1, b = -1, x = -1;
  bool left = true;  // true: (xa, xb) violated; false: (ax, bx)
};

// True iff p is compatible with multiplication on both sides. On failure the
// first witness found (pairs by block, x ascending, left before right) is
// written to *witness when given.
bool is_congruence(const FiniteSemigroup& s, const Partition& p,
                   CongruenceWitness* witness = nullptr);

// A partition that has been validated (or produced) as a two-sided
// congruence of some semigroup. The base semigroup is not stored; callers
// pass it alongside, and sizes are checked at every use site.
class Congruence {
 public:
  // Throws NotACongruenceError (with witness) or SizeMismatchError.
  static Congruence checked(const FiniteSemigroup& s, Partition p);
  static Congruence identity(const FiniteSemigroup& s);
  static Congruence universal(const FiniteSemigroup& s);

  const Partition& partition() const { return partition_; }
  int size() const { return partition_.size(); }

  bool operator==(const Congruence& other) const = default;

 private:
  explicit Congruence(Partition p) : partition_(std::move(p)) {}

  friend std::vector<Congruence> enumerate_congruences(const FiniteSemigroup&);
  friend Congruence rees_congruence(const FiniteSemigroup&, const Ideal&);
  friend Congruence sigma_step(const FiniteSemigroup&, const Congruence&);
  friend Congruence phi(const FiniteSemigroup&, const Congruence&,
                        const Congruence&);

  Partition partition_;
};

// All congruences of s, in restricted-growth lexicographic order of their
// partitions (universal first, identity last). Guarded at n <= 7.
std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s);

struct Quotient {
  FiniteSemigroup semigroup;
  std::vector<int> projection;  // element -> block label
};

// Factor semigroup A/sigma; representatives are least block members (any
// representative gives the same table, re-asserted in debug builds).
Quotient quotient(const FiniteSemigroup& s, const Congruence& sigma);

// Non-empty two-sided ideal, validated at construction.
class Ideal {
 public:
  // Throws NotAnIdealError with the escaping product as witness.
  static Ideal checked(const FiniteSemigroup& s, ElementSet members);

  const ElementSet& members() const { return members_; }

 private:
  explicit Ideal(ElementSet m) : members_(std::move(m)) {}

  friend std::vector<Ideal> ideals(const FiniteSemigroup&);

  ElementSet members_;
};

// All non-empty ideals, ascending by size then lexicographically by member
// list. Guarded at n <= 16.
std::vector<Ideal> ideals(const FiniteSemigroup& s);

// I as one block, singletons elsewhere.
Congruence rees_congruence(const FiniteSemigroup& s, const Ideal& ideal);

// Quotient by the Rees congruence; the collapsed block is a zero element.
FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const Ideal& ideal);

// One step of the congruence tower: (a,b) related iff (xa,xb) in sigma for
// every x. The result is checked to be a congruence containing sigma; both
// hold for every congruence input, so a failure is a logic error, not bad
// input.
Congruence sigma_step(const FiniteSemigroup& s, const Congruence& sigma);

// [sigma^(0), sigma^(1), ...] until the first repeat (the repeated entry is
// not appended). Ascending chain; length is at most the order of s.
std::vector<Congruence> sigma_tower(const FiniteSemigroup& s,
                                    const Congruence& sigma);

// The lattice correspondence beta -> beta/alpha: the congruence on
// quotient(s, alpha) relating two blocks iff their members are beta-related.
// Requires alpha contained in beta (NotNestedError otherwise).
Congruence phi(const FiniteSemigroup& s, const Congruence& alpha,
               const Congruence& beta);

}  // namespace semiprob
