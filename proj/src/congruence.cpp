#include "semiprob/congruence.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "semiprob/errors.hpp"

namespace semiprob {

bool is_congruence(const FiniteSemigroup& s, const Partition& p,
                   CongruenceWitness* witness) {
  const int n = s.order();
  if (p.size() != n) {
    throw SizeMismatchError(n, p.size());
  }
  // Compatibility for the pairs (least member, other member) of each block
  // extends to all related pairs by symmetry and transitivity.
  for (const auto& block : p.blocks()) {
    const int a = block[0];
    for (size_t i = 1; i < block.size(); ++i) {
      const int b = block[i];
      for (int x = 0; x < n; ++x) {
        if (!p.same_block(s.product(x, a), s.product(x, b))) {
          if (witness != nullptr) {
            *witness = {a, b, x, true};
          }
          return false;
        }
        if (!p.same_block(s.product(a, x), s.product(b, x))) {
          if (witness != nullptr) {
            *witness = {a, b, x, false};
          }
          return false;
        }
      }
    }
  }
  return true;
}

Congruence Congruence::checked(const FiniteSemigroup& s, Partition p) {
  CongruenceWitness w;
  if (!is_congruence(s, p, &w)) {
    throw NotACongruenceError(w.a, w.b, w.x, w.left);
  }
  return Congruence(std::move(p));
}

Congruence Congruence::identity(const FiniteSemigroup& s) {
  return Congruence(Partition::identity(s.order()));
}

Congruence Congruence::universal(const FiniteSemigroup& s) {
  return Congruence(Partition::universal(s.order()));
}

std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s) {
  constexpr int kMaxOrder = 7;  // Bell(7) = 877 partitions to filter
  if (s.order() > kMaxOrder) {
    throw TooLargeError(s.order(), kMaxOrder, "enumerate_congruences");
  }
  std::vector<Congruence> out;
  for_each_partition(s.order(), [&](const Partition& p) {
    if (is_congruence(s, p)) {
      out.push_back(Congruence(p));
    }
  });
  return out;
}

Quotient quotient(const FiniteSemigroup& s, const Congruence& sigma) {
  const int n = s.order();
  const Partition& p = sigma.partition();
  if (p.size() != n) {
    throw SizeMismatchError(n, p.size());
  }
  const int m = p.num_blocks();
  std::vector<int> rep(m, -1);
  for (int e = 0; e < n; ++e) {
    if (rep[p.block_of(e)] == -1) {
      rep[p.block_of(e)] = e;  // least member: first hit in ascending scan
    }
  }
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      flat[i * m + j] = p.block_of(s.product(rep[i], rep[j]));
    }
  }
#ifndef NDEBUG
  // Well-definedness: any representative pair gives the same block.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      assert(flat[p.block_of(a) * m + p.block_of(b)]
             == p.block_of(s.product(a, b)));
    }
  }
#endif
  return Quotient{FiniteSemigroup::from_flat(m, std::move(flat)), p.labels()};
}

Ideal Ideal::checked(const FiniteSemigroup& s, ElementSet members) {
  if (members.universe() != s.order()) {
    throw SizeMismatchError(s.order(), members.universe());
  }
  if (members.empty()) {
    throw Error("ideal must be non-empty");
  }
  for (int i : members.members()) {
    for (int a = 0; a < s.order(); ++a) {
      if (!members.contains(s.product(a, i))) {
        throw NotAnIdealError(i, a, true);
      }
      if (!members.contains(s.product(i, a))) {
        throw NotAnIdealError(i, a, false);
      }
    }
  }
  return Ideal(std::move(members));
}

std::vector<Ideal> ideals(const FiniteSemigroup& s) {
  constexpr int kMaxOrder = 16;
  const int n = s.order();
  if (n > kMaxOrder) {
    throw TooLargeError(n, kMaxOrder, "ideals");
  }
  std::vector<std::vector<int>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if ((mask >> i & 1u) == 0) {
        continue;
      }
      for (int a = 0; a < n; ++a) {
        if ((mask >> s.product(a, i) & 1u) == 0
            || (mask >> s.product(i, a) & 1u) == 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      std::vector<int> members;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          members.push_back(i);
        }
      }
      found.push_back(std::move(members));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) {
                return a.size() < b.size();
              }
              return a < b;
            });
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& members : found) {
    out.push_back(Ideal(ElementSet::from_members(n, members)));
  }
  return out;
}

Congruence rees_congruence(const FiniteSemigroup& s, const Ideal& ideal) {
  const int n = s.order();
  if (ideal.members().universe() != n) {
    throw SizeMismatchError(n, ideal.members().universe());
  }
  std::vector<int> labels(n);
  int ideal_label = n;  // any fresh label; normalization renumbers
  for (int e = 0; e < n; ++e) {
    labels[e] = ideal.members().contains(e) ? ideal_label : e;
  }
  Partition p = Partition::from_labels(labels);
  assert(is_congruence(s, p));
  return Congruence(std::move(p));
}

FiniteSemigroup rees_quotient(const FiniteSemigroup& s, const Ideal& ideal) {
  return quotient(s, rees_congruence(s, ideal)).semigroup;
}

Congruence sigma_step(const FiniteSemigroup& s, const Congruence& sigma) {
  const int n = s.order();
  const Partition& p = sigma.partition();
  if (p.size() != n) {
    throw SizeMismatchError(n, p.size());
  }
  // Group elements by the block signature of their left-translate column.
  std::map<std::vector<int>, int> signature_to_block;
  std::vector<int> labels(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> signature(n);
    for (int x = 0; x < n; ++x) {
      signature[x] = p.block_of(s.product(x, a));
    }
    auto [it, inserted] = signature_to_block.try_emplace(
        std::move(signature), static_cast<int>(signature_to_block.size()));
    labels[a] = it->second;
  }
  Partition next = Partition::from_labels(labels);
  // Holds for every congruence input; asserted, not assumed.
  if (!is_congruence(s, next) || !p.refines(next)) {
    throw std::logic_error("sigma_step produced a non-congruence or lost pairs");
  }
  return Congruence(std::move(next));
}

std::vector<Congruence> sigma_tower(const FiniteSemigroup& s,
                                    const Congruence& sigma) {
  std::vector<Congruence> tower;
  tower.push_back(sigma);
  while (true) {
    Congruence next = sigma_step(s, tower.back());
    if (next.partition() == tower.back().partition()) {
      break;
    }
    tower.push_back(std::move(next));
  }
  return tower;
}

Congruence phi(const FiniteSemigroup& s, const Congruence& alpha,
               const Congruence& beta) {
  const int n = s.order();
  if (alpha.size() != n || beta.size() != n) {
    throw SizeMismatchError(n, alpha.size() != n ? alpha.size() : beta.size());
  }
  const Partition& pa = alpha.partition();
  const Partition& pb = beta.partition();
  if (!pa.refines(pb)) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (pa.same_block(a, b) && !pb.same_block(a, b)) {
          throw NotNestedError(a, b);
        }
      }
    }
  }
  // Label each alpha-block by the beta-block of its members.
  std::vector<int> labels(pa.num_blocks());
  for (int e = 0; e < n; ++e) {
    labels[pa.block_of(e)] = pb.block_of(e);
  }
  Partition image = Partition::from_labels(labels);
#ifndef NDEBUG
  assert(is_congruence(quotient(s, alpha).semigroup, image));
#endif
  return Congruence(std::move(image));
}

}  // namespace semiprob
