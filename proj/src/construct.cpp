#include "semiprob/construct.hpp"

#include <numeric>
#include <string>

#include "semiprob/errors.hpp"
#include "semiprob/rightrep.hpp"

namespace semiprob {

namespace {

std::vector<int> fiber_offsets(const std::vector<int>& sizes) {
  std::vector<int> offsets(sizes.size() + 1, 0);
  for (size_t i = 0; i < sizes.size(); ++i) {
    offsets[i + 1] = offsets[i] + sizes[i];
  }
  return offsets;
}

void check_fiber_sizes(const FiniteSemigroup& base,
                       const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.order()) {
    throw SizeMismatchError(base.order(), static_cast<int>(sizes.size()));
  }
  for (int sz : sizes) {
    if (sz < 1) {
      throw InvalidSpecError("fiber sizes must be >= 1");
    }
  }
}

FiniteSemigroup right_zero_semigroup(int m) {
  std::vector<int> flat(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      flat[x * m + y] = y;
    }
  }
  return FiniteSemigroup::from_flat(m, std::move(flat));
}

}  // namespace

FiberedSemigroup build_fibered(const FiberedSystem& sys) {
  const int m = sys.base.order();
  check_fiber_sizes(sys.base, sys.fiber_sizes);
  if (static_cast<int>(sys.maps.size()) != m) {
    throw SizeMismatchError(m, static_cast<int>(sys.maps.size()));
  }
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(sys.maps[x].size()) != m) {
      throw SizeMismatchError(m, static_cast<int>(sys.maps[x].size()));
    }
    for (int y = 0; y < m; ++y) {
      const auto& f = sys.maps[x][y];
      if (static_cast<int>(f.size()) != sys.fiber_sizes[x]) {
        throw InvalidSpecError("map for base pair (" + std::to_string(x) + ","
                               + std::to_string(y) + ") has wrong domain size");
      }
      const int target = sys.fiber_sizes[sys.base.product(x, y)];
      for (int image : f) {
        if (image < 0 || image >= target) {
          throw InvalidSpecError("map for base pair (" + std::to_string(x) + ","
                                 + std::to_string(y)
                                 + ") escapes its target fiber");
        }
      }
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int xy = sys.base.product(x, y);
      for (int z = 0; z < m; ++z) {
        const int yz = sys.base.product(y, z);
        for (int a = 0; a < sys.fiber_sizes[x]; ++a) {
          if (sys.maps[xy][z][sys.maps[x][y][a]] != sys.maps[x][yz][a]) {
            throw CoherenceViolationError(x, y, z, a);
          }
        }
      }
    }
  }

  const std::vector<int> offsets = fiber_offsets(sys.fiber_sizes);
  const int n = offsets[m];
  std::vector<int> flat(static_cast<size_t>(n) * n);
  std::vector<int> fiber_labels(n);
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < sys.fiber_sizes[x]; ++i) {
      fiber_labels[offsets[x] + i] = x;
    }
  }
  for (int x = 0; x < m; ++x) {
    for (int i = 0; i < sys.fiber_sizes[x]; ++i) {
      const int a = offsets[x] + i;
      for (int y = 0; y < m; ++y) {
        const int image = offsets[sys.base.product(x, y)] + sys.maps[x][y][i];
        for (int j = 0; j < sys.fiber_sizes[y]; ++j) {
          flat[a * n + (offsets[y] + j)] = image;
        }
      }
    }
  }
  return FiberedSemigroup{FiniteSemigroup::from_flat(n, std::move(flat)),
                          Partition::from_labels(fiber_labels)};
}

FiberRefinement fibers_refine_theta(const FiniteSemigroup& s,
                                    const Partition& fibers) {
  const Partition th = theta(s);
  return FiberRefinement{fibers.refines(th), fibers == th};
}

FiberedSemigroup build_construct2(const Construct2Spec& spec) {
  if (spec.m < 1) {
    throw InvalidSpecError("construct2 needs m >= 1");
  }
  FiniteSemigroup base = right_zero_semigroup(spec.m);
  check_fiber_sizes(base, spec.fiber_sizes);
  std::vector<int> stars = spec.stars;
  if (stars.empty()) {
    stars.assign(spec.m, 0);
  }
  if (static_cast<int>(stars.size()) != spec.m) {
    throw SizeMismatchError(spec.m, static_cast<int>(stars.size()));
  }
  for (int x = 0; x < spec.m; ++x) {
    if (stars[x] < 0 || stars[x] >= spec.fiber_sizes[x]) {
      throw InvalidSpecError("star index outside fiber " + std::to_string(x));
    }
  }
  FiberedSystem sys{std::move(base), spec.fiber_sizes, {}};
  sys.maps.resize(spec.m);
  for (int x = 0; x < spec.m; ++x) {
    sys.maps[x].resize(spec.m);
    for (int y = 0; y < spec.m; ++y) {
      // x*y = y in the right zero base; everything maps onto y's star.
      sys.maps[x][y].assign(spec.fiber_sizes[x], stars[y]);
    }
  }
  return build_fibered(sys);
}

FiberedSemigroup build_a_mk(int m, int k) {
  if (m < 1 || k < 2) {
    throw InvalidSpecError("family A^(m,k) needs m >= 1 and k >= 2");
  }
  return build_construct2(Construct2Spec{m, std::vector<int>(m, k), {}});
}

FiberedSemigroup build_a_k(int m, int k) {
  if (m < 2 || k < 1) {
    throw InvalidSpecError("family A^(k) needs m >= 2 and k >= 1");
  }
  std::vector<int> sizes(m, 1);
  sizes[0] = k + 1;
  return build_construct2(Construct2Spec{m, std::move(sizes), {}});
}

Rational predicted_p_theta_family(int m, int k) {
  if (m < 2 || k < 1) {
    throw InvalidSpecError("family A^(k) needs m >= 2 and k >= 1");
  }
  const BigInt big = BigInt(k + 1) * (k + 1);
  return Rational(big + m - 1, BigInt(m + k) * (m + k));
}

FiniteSemigroup build_construct3(const Construct3Spec& spec) {
  if (spec.left_zero_size < 1 || spec.extra_size < 0) {
    throw InvalidSpecError("construct3 needs |L| >= 1 and extra_size >= 0");
  }
  const int n = spec.left_zero_size + spec.extra_size;
  if (static_cast<int>(spec.phi.size()) != n) {
    throw SizeMismatchError(n, static_cast<int>(spec.phi.size()));
  }
  for (int e = 0; e < spec.left_zero_size; ++e) {
    if (spec.phi[e] != e) {
      throw PhiNotFixingError(e);
    }
  }
  for (int a = 0; a < n; ++a) {
    if (spec.phi[a] < 0 || spec.phi[a] >= spec.left_zero_size) {
      throw InvalidSpecError("phi value out of L at element "
                             + std::to_string(a));
    }
  }
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[a * n + b] = spec.phi[a];
    }
  }
  return FiniteSemigroup::from_flat(n, std::move(flat));
}

FiniteSemigroup rebuild_from_decomposition(
    const LeftZeroByNullDecomposition& d) {
  const int n = static_cast<int>(d.phi_map.size());
  if (d.idempotent_ideal.universe() != n) {
    throw SizeMismatchError(n, d.idempotent_ideal.universe());
  }
  for (int e : d.idempotent_ideal.members()) {
    if (d.phi_map[e] != e) {
      throw PhiNotFixingError(e);
    }
  }
  for (int a = 0; a < n; ++a) {
    if (a >= static_cast<int>(d.phi_map.size()) || d.phi_map[a] < 0
        || d.phi_map[a] >= n || !d.idempotent_ideal.contains(d.phi_map[a])) {
      throw InvalidSpecError("phi value outside the idempotent ideal at "
                             + std::to_string(a));
    }
  }
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      flat[a * n + b] = d.phi_map[a];
    }
  }
  return FiniteSemigroup::from_flat(n, std::move(flat));
}

FiberedSemigroup build_construct1(
    const FiniteSemigroup& base, const std::vector<int>& fiber_sizes,
    const std::map<std::pair<int, int>, std::vector<int>>& translation_maps) {
  if (!is_left_cancellative(base)) {
    throw InvalidSpecError("construct1 base must be left cancellative");
  }
  check_fiber_sizes(base, fiber_sizes);
  const int m = base.order();
  FiberedSystem sys{base, fiber_sizes, {}};
  sys.maps.resize(m);
  for (int t = 0; t < m; ++t) {
    sys.maps[t].resize(m);
    for (int x = 0; x < m; ++x) {
      const int r = base.product(t, x);
      auto it = translation_maps.find({t, r});
      if (it == translation_maps.end()) {
        throw InvalidSpecError("missing translation map for referenced pair ("
                               + std::to_string(t) + "," + std::to_string(r)
                               + ")");
      }
      sys.maps[t][x] = it->second;
    }
  }
  // Full coherence (validated inside) specializes exactly to the restricted
  // law over t, r in tT, q in rT, since each map depends only on (t, t*x).
  return build_fibered(sys);
}

}  // namespace semiprob
