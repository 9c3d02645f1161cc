#include "semiprob/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semiprob/congruence.hpp"
#include "semiprob/construct.hpp"
#include "semiprob/enumerate.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/partition.hpp"
#include "semiprob/rightrep.hpp"
#include "semiprob/structure.hpp"

namespace semiprob {

namespace {

std::string render_table(const FiniteSemigroup& s) {
  std::string out = "n=" + std::to_string(s.order()) + ":[";
  const auto& flat = s.flat_table();
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(flat[i]);
  }
  return out + "]";
}

std::string render_partition(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out;
}

void expect(bool condition, EnumerationReport& report, std::string context,
            std::string check) {
  if (!condition) {
    report.counterexamples.push_back(
        Counterexample{std::move(context), std::move(check)});
  }
}

// sigma^(n) with fixpoint clamping: entries beyond the tower repeat its top.
const Congruence& tower_entry(const std::vector<Congruence>& tower, int n) {
  return tower[std::min<size_t>(n, tower.size() - 1)];
}

void check_t1(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_size; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      ++report.cases;
      const Rational prob = probability_of_partition(p);
      const Rational bound(1, p.num_blocks());
      const std::vector<int> sizes = class_sizes(p);
      const bool all_equal =
          std::all_of(sizes.begin(), sizes.end(),
                      [&](int t) { return t == sizes[0]; });
      expect(prob >= bound, report, render_partition(p), "P >= 1/m");
      expect((prob == bound) == all_equal, report, render_partition(p),
             "P = 1/m iff equal class sizes");
    });
  }
}

void check_t2(const VerifyBounds& b, EnumerationReport& report) {
  for (int m = 1; m <= b.max_m; ++m) {
    for (int k = 2; k <= b.max_k; ++k) {
      ++report.cases;
      const std::string context = "m=" + std::to_string(m) + " k="
                                  + std::to_string(k);
      const FiberedSemigroup built = build_a_mk(m, k);
      const Rational p = p_theta(built.semigroup);
      report.family.push_back(FamilyRow{m, k, p});
      expect(p == Rational(1, m), report, context, "P_theta = 1/m");
      expect(theta(built.semigroup) == built.fibers, report, context,
             "theta classes are the fibers");
      expect(!is_left_reductive(built.semigroup), report, context,
             "not left reductive for k >= 2");
    }
  }
  // With k fixed, the value 1/m decreases strictly toward 0 as m grows.
  for (int m = 2; m <= b.max_m; ++m) {
    expect(Rational(1, m) < Rational(1, m - 1), report,
           "m=" + std::to_string(m), "1/m strictly decreasing");
  }
}

void check_t3(const VerifyBounds& b, EnumerationReport& report) {
  for (int m = 2; m <= 3; ++m) {
    Rational previous = Rational::zero();
    for (int k = 1; k <= b.max_k; ++k) {
      ++report.cases;
      const std::string context = "m=" + std::to_string(m) + " k="
                                  + std::to_string(k);
      const FiberedSemigroup built = build_a_k(m, k);
      const Rational p = p_theta(built.semigroup);
      report.family.push_back(FamilyRow{m, k, p});
      expect(p == predicted_p_theta_family(m, k), report, context,
             "P_theta = ((k+1)^2+m-1)/(m+k)^2");
      expect(p > previous, report, context,
             "strictly increasing toward 1 in k");
      expect(p < Rational::one(), report, context, "below 1");
      previous = p;
      if (m == 2 && k == 98) {
        expect(p == Rational(4901, 5000), report, context,
               "value at m=2, k=98 is 4901/5000");
      }
    }
  }
}

void check_t4(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    if (n == 3) {
      expect(static_cast<long long>(semigroups.size()) == 113, report, "n=3",
             "order-3 stream has 113 tables");
    }
    for (const FiniteSemigroup& s : semigroups) {
      ++report.cases;
      const bool prob_one = p_theta(s) == Rational::one();
      const auto decomposition = decompose_left_zero_by_null(s);
      expect(prob_one == decomposition.has_value(), report, render_table(s),
             "P_theta = 1 iff decomposition exists");
      if (decomposition.has_value()) {
        expect(rebuild_from_decomposition(*decomposition) == s, report,
               render_table(s), "rebuild reproduces the exact table");
      }
    }
  }
}

void check_t5(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      ++report.cases;
      const auto tower = sigma_tower(s, Congruence::identity(s));
      const bool reaches = tower.back().partition().is_universal();
      expect(reaches == is_ideal_extension_left_zero_by_nilpotent(s), report,
             render_table(s),
             "identity tower reaches omega iff left-zero-by-nilpotent");
    }
  }
}

void check_t6(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      for (const Congruence& sigma : enumerate_congruences(s)) {
        ++report.cases;
        const bool step_universal =
            sigma_step(s, sigma).partition().is_universal();
        const Quotient q = quotient(s, sigma);
        const bool decomposes =
            decompose_left_zero_by_null(q.semigroup).has_value();
        expect(step_universal == decomposes, report,
               render_table(s) + " sigma=" + render_partition(sigma.partition()),
               "sigma^(1) = omega iff quotient decomposes");
      }
    }
  }
}

void check_t7(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      for (const Congruence& sigma : enumerate_congruences(s)) {
        ++report.cases;
        const auto tower = sigma_tower(s, sigma);
        const bool reaches = tower.back().partition().is_universal();
        const Quotient q = quotient(s, sigma);
        expect(reaches == is_ideal_extension_left_zero_by_nilpotent(q.semigroup),
               report,
               render_table(s) + " sigma=" + render_partition(sigma.partition()),
               "tower reaches omega iff quotient is left-zero-by-nilpotent");
      }
    }
  }
}

void check_phi(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      const auto congruences = enumerate_congruences(s);
      for (const Congruence& sigma : congruences) {
        const std::string context =
            render_table(s) + " sigma=" + render_partition(sigma.partition());
        const Quotient q = quotient(s, sigma);
        const auto sigma_chain = sigma_tower(s, sigma);
        const auto iota_chain = sigma_tower(q.semigroup,
                                            Congruence::identity(q.semigroup));
        // Endpoint images.
        expect(phi(s, sigma, sigma).partition().is_identity(), report, context,
               "phi(sigma) = identity on the quotient");
        expect(phi(s, sigma, Congruence::universal(s)).partition()
                   .is_universal(),
               report, context, "phi(omega) = omega on the quotient");
        // phi(sigma^(n)) = theta^(n-1) of the quotient, theta^(m) = iota^(m+1).
        const int horizon = static_cast<int>(sigma_chain.size()) + 1;
        for (int step = 1; step <= horizon; ++step) {
          ++report.cases;
          const Congruence image =
              phi(s, sigma, tower_entry(sigma_chain, step));
          const Congruence& expected = tower_entry(iota_chain, step);
          expect(image.partition() == expected.partition(), report,
                 context + " n=" + std::to_string(step),
                 "phi(sigma^(n)) = theta^(n-1) on the quotient");
        }
        // Injective and order preserving on congruences above sigma.
        std::vector<const Congruence*> above;
        for (const Congruence& beta : congruences) {
          if (sigma.partition().refines(beta.partition())) {
            above.push_back(&beta);
          }
        }
        std::vector<Partition> images;
        for (const Congruence* beta : above) {
          images.push_back(phi(s, sigma, *beta).partition());
        }
        for (size_t i = 0; i < above.size(); ++i) {
          for (size_t j = 0; j < above.size(); ++j) {
            if (i != j && images[i] == images[j]) {
              expect(false, report, context, "phi injective above sigma");
            }
            if (above[i]->partition().refines(above[j]->partition())
                && !images[i].refines(images[j])) {
              expect(false, report, context, "phi order preserving");
            }
          }
        }
      }
    }
  }
}

void hom_checks(const FiniteSemigroup& s, EnumerationReport& report) {
  const int n = s.order();
  ++report.cases;
  const Partition kernel = theta(s);
  std::vector<RightMatrix> matrices;
  matrices.reserve(n);
  for (int a = 0; a < n; ++a) {
    matrices.push_back(right_matrix(s, a));
  }
  for (int a = 0; a < n; ++a) {
    const TranslationMap rho_a = rho(s, a);
    for (int b = 0; b < n; ++b) {
      const int ab = s.product(a, b);
      expect(matrix_product(matrices[a], matrices[b]) == matrices[ab], report,
             render_table(s) + " a=" + std::to_string(a) + " b="
                 + std::to_string(b),
             "R(a)R(b) = R(ab)");
      const TranslationMap rho_b = rho(s, b);
      const TranslationMap rho_ab = rho(s, ab);
      bool composes = true;
      for (int x = 0; x < n; ++x) {
        if (rho_ab.images[x] != rho_b.images[rho_a.images[x]]) {
          composes = false;
        }
      }
      expect(composes, report,
             render_table(s) + " a=" + std::to_string(a) + " b="
                 + std::to_string(b),
             "rho(ab) = rho(a) then rho(b)");
      expect((matrices[a] == matrices[b]) == kernel.same_block(a, b), report,
             render_table(s) + " a=" + std::to_string(a) + " b="
                 + std::to_string(b),
             "R(a) = R(b) iff (a,b) in theta");
    }
  }
}

void check_hom(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= 3; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      hom_checks(s, report);
    }
  }
  for (const FiniteSemigroup& s : construction_sample()) {
    hom_checks(s, report);
  }
  // Kernel oracle: the literal pair-scan definition agrees with column
  // grouping on every semigroup of order <= max_order.
  for (int n = 1; n <= b.max_order; ++n) {
    for (const FiniteSemigroup& s : enumerate_semigroups(n, b.jobs)) {
      ++report.cases;
      expect(brute_theta(s) == theta(s), report, render_table(s),
             "brute-force theta agrees with column grouping");
    }
  }
}

void check_tower(const VerifyBounds& b, EnumerationReport& report) {
  for (int n = 1; n <= b.max_order; ++n) {
    const auto semigroups = enumerate_semigroups(n, b.jobs);
    report.counts_by_order.emplace_back(n, semigroups.size());
    for (const FiniteSemigroup& s : semigroups) {
      const std::string table_context = render_table(s);
      // theta^(m) = iota^(m+1).
      const auto iota_chain = sigma_tower(s, Congruence::identity(s));
      const auto theta_chain =
          sigma_tower(s, Congruence::checked(s, theta(s)));
      expect(iota_chain.size() <= static_cast<size_t>(n), report,
             table_context, "tower length at most the order");
      for (int m = 0;
           m <= static_cast<int>(std::max(iota_chain.size(),
                                          theta_chain.size()));
           ++m) {
        ++report.cases;
        expect(tower_entry(theta_chain, m).partition()
                   == tower_entry(iota_chain, m + 1).partition(),
               report, table_context + " n=" + std::to_string(m),
               "theta^(n) = iota^(n+1)");
      }
      for (const Congruence& sigma : enumerate_congruences(s)) {
        const std::string context =
            table_context + " sigma=" + render_partition(sigma.partition());
        // Iterated steps match the power-set characterization of sigma^(n).
        Congruence iterated = sigma;
        for (int step = 1; step <= 3; ++step) {
          iterated = sigma_step(s, iterated);
          ++report.cases;
          expect(is_congruence(s, iterated.partition()), report, context,
                 "sigma step output is a congruence");
          expect(sigma.partition().refines(iterated.partition()), report,
                 context, "sigma step contains its input");
          const ElementSet powers = power_set(s, step);
          std::map<std::vector<int>, int> signature_to_block;
          std::vector<int> labels(n);
          for (int a = 0; a < n; ++a) {
            std::vector<int> signature;
            for (int x : powers.members()) {
              signature.push_back(sigma.partition().block_of(s.product(x, a)));
            }
            auto [it, inserted] = signature_to_block.try_emplace(
                std::move(signature),
                static_cast<int>(signature_to_block.size()));
            labels[a] = it->second;
          }
          expect(iterated.partition() == Partition::from_labels(labels),
                 report, context + " n=" + std::to_string(step),
                 "sigma^(n) matches the A^n characterization");
        }
      }
    }
  }
}

}  // namespace

TheoremId parse_theorem_id(const std::string& id) {
  static const std::map<std::string, TheoremId> names = {
      {"T1", TheoremId::T1},   {"T2", TheoremId::T2},
      {"T3", TheoremId::T3},   {"T4", TheoremId::T4},
      {"T5", TheoremId::T5},   {"T6", TheoremId::T6},
      {"T7", TheoremId::T7},   {"PHI", TheoremId::PHI},
      {"HOM", TheoremId::HOM}, {"TOWER", TheoremId::TOWER}};
  auto it = names.find(id);
  if (it == names.end()) {
    throw UnknownCheckError(id);
  }
  return it->second;
}

std::string theorem_id_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
    case TheoremId::T5: return "T5";
    case TheoremId::T6: return "T6";
    case TheoremId::T7: return "T7";
    case TheoremId::PHI: return "PHI";
    case TheoremId::HOM: return "HOM";
    case TheoremId::TOWER: return "TOWER";
  }
  throw UnknownCheckError("invalid enum");
}

std::vector<TheoremId> all_theorem_ids() {
  return {TheoremId::T1,  TheoremId::T2,  TheoremId::T3, TheoremId::T4,
          TheoremId::T5,  TheoremId::T6,  TheoremId::T7, TheoremId::PHI,
          TheoremId::HOM, TheoremId::TOWER};
}

VerifyBounds default_bounds(TheoremId id) {
  VerifyBounds b;
  switch (id) {
    case TheoremId::T1:
      b.max_size = 10;
      break;
    case TheoremId::T2:
      b.max_m = 6;
      b.max_k = 5;
      break;
    case TheoremId::T3:
      b.max_k = 100;
      break;
    case TheoremId::T4:
    case TheoremId::T5:
    case TheoremId::HOM:
      b.max_order = 4;
      break;
    case TheoremId::T6:
    case TheoremId::T7:
    case TheoremId::PHI:
    case TheoremId::TOWER:
      b.max_order = 3;
      break;
  }
  return b;
}

EnumerationReport verify_theorem(TheoremId id, VerifyBounds bounds) {
  const VerifyBounds defaults = default_bounds(id);
  if (bounds.max_order == 0) bounds.max_order = defaults.max_order;
  if (bounds.max_size == 0) bounds.max_size = defaults.max_size;
  if (bounds.max_m == 0) bounds.max_m = defaults.max_m;
  if (bounds.max_k == 0) bounds.max_k = defaults.max_k;
  if (bounds.jobs < 1) bounds.jobs = 1;

  const auto require = [](bool ok, const std::string& what) {
    if (!ok) {
      throw Error("bounds out of range: " + what);
    }
  };
  EnumerationReport report;
  report.id = theorem_id_name(id);
  switch (id) {
    case TheoremId::T1:
      require(bounds.max_size >= 1 && bounds.max_size <= 12,
              "max size must lie in [1,12]");
      check_t1(bounds, report);
      break;
    case TheoremId::T2:
      require(bounds.max_m >= 1 && bounds.max_m <= 20
                  && bounds.max_k >= 2 && bounds.max_k <= 20,
              "T2 supports m in [1,20], k in [2,20]");
      check_t2(bounds, report);
      break;
    case TheoremId::T3:
      require(bounds.max_k >= 1 && bounds.max_k <= 200,
              "T3 supports k in [1,200]");
      check_t3(bounds, report);
      break;
    case TheoremId::T4:
      require(bounds.max_order >= 1 && bounds.max_order <= 5,
              "exhaustive checks support order <= 5");
      check_t4(bounds, report);
      break;
    case TheoremId::T5:
      require(bounds.max_order >= 1 && bounds.max_order <= 5,
              "exhaustive checks support order <= 5");
      check_t5(bounds, report);
      break;
    case TheoremId::T6:
      require(bounds.max_order >= 1 && bounds.max_order <= 4,
              "congruence sweeps support order <= 4");
      check_t6(bounds, report);
      break;
    case TheoremId::T7:
      require(bounds.max_order >= 1 && bounds.max_order <= 4,
              "congruence sweeps support order <= 4");
      check_t7(bounds, report);
      break;
    case TheoremId::PHI:
      require(bounds.max_order >= 1 && bounds.max_order <= 4,
              "congruence sweeps support order <= 4");
      check_phi(bounds, report);
      break;
    case TheoremId::HOM:
      require(bounds.max_order >= 1 && bounds.max_order <= 4,
              "kernel oracle sweep supports order <= 4");
      check_hom(bounds, report);
      break;
    case TheoremId::TOWER:
      require(bounds.max_order >= 1 && bounds.max_order <= 4,
              "congruence sweeps support order <= 4");
      check_tower(bounds, report);
      break;
  }
  return report;
}

std::vector<FiniteSemigroup> construction_sample(int count) {
  std::vector<FiniteSemigroup> out;
  std::set<std::vector<int>> seen;
  const auto add = [&](const FiniteSemigroup& s) {
    if (static_cast<int>(out.size()) < count
        && seen.insert(s.flat_table()).second) {
      out.push_back(s);
    }
  };

  for (int m = 1; m <= 4; ++m) {
    for (int k = 2; m * k <= 8; ++k) {
      add(build_a_mk(m, k).semigroup);
    }
  }
  for (int m = 2; m <= 7; ++m) {
    for (int k = 1; m + k <= 8; ++k) {
      add(build_a_k(m, k).semigroup);
    }
  }
  // Mixed fiber sizes and star choices over right zero bases.
  for (int m = 2; m <= 3; ++m) {
    std::vector<int> sizes(m, 1);
    while (true) {
      int total = 0;
      for (int sz : sizes) {
        total += sz;
      }
      if (total <= 8) {
        add(build_construct2(Construct2Spec{m, sizes, {}}).semigroup);
        std::vector<int> stars(m);
        for (int x = 0; x < m; ++x) {
          stars[x] = sizes[x] - 1;
        }
        add(build_construct2(Construct2Spec{m, sizes, stars}).semigroup);
      }
      int pos = m - 1;
      while (pos >= 0 && sizes[pos] == 3) {
        sizes[pos] = 1;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++sizes[pos];
    }
  }
  // Left-zero-by-null tables with varying phi.
  for (int l = 1; l <= 4; ++l) {
    for (int extra = 0; l + extra <= 8; ++extra) {
      std::vector<int> phi(l + extra);
      for (int e = 0; e < l + extra; ++e) {
        phi[e] = e < l ? e : (e - l) % l;
      }
      add(build_construct3(Construct3Spec{l, extra, phi}));
      if (l > 1) {
        for (int e = l; e < l + extra; ++e) {
          phi[e] = 0;
        }
        add(build_construct3(Construct3Spec{l, extra, phi}));
      }
    }
  }
  if (static_cast<int>(out.size()) < count) {
    throw Error("construction sample smaller than requested: "
                + std::to_string(out.size()));
  }
  return out;
}

}  // namespace semiprob
