#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "semiprob/congruence.hpp"
#include "semiprob/construct.hpp"
#include "semiprob/enumerate.hpp"
#include "semiprob/errors.hpp"
#include "semiprob/io.hpp"
#include "semiprob/partition.hpp"
#include "semiprob/rightrep.hpp"
#include "semiprob/structure.hpp"
#include "semiprob/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace semiprob;

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

ordered_json rational_json(const Rational& r) {
  ordered_json j;
  j["num"] = r.num().str();
  j["den"] = r.den().str();
  j["decimal"] = r.to_decimal();
  return j;
}

ordered_json blocks_json(const Partition& p) {
  ordered_json blocks = ordered_json::array();
  for (const auto& block : p.blocks()) {
    blocks.push_back(block);
  }
  return blocks;
}

ordered_json report_json(const EnumerationReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["cases"] = r.cases;
  if (!r.counts_by_order.empty()) {
    ordered_json counts;
    for (const auto& [order, count] : r.counts_by_order) {
      counts[std::to_string(order)] = count;
    }
    j["counts_by_order"] = counts;
  }
  if (!r.family.empty()) {
    ordered_json rows = ordered_json::array();
    for (const FamilyRow& row : r.family) {
      ordered_json entry;
      entry["m"] = row.m;
      entry["k"] = row.k;
      entry["p"] = rational_json(row.value);
      rows.push_back(entry);
    }
    j["family"] = rows;
  }
  ordered_json cexs = ordered_json::array();
  for (const Counterexample& c : r.counterexamples) {
    ordered_json entry;
    entry["context"] = c.context;
    entry["check"] = c.check;
    cexs.push_back(entry);
  }
  j["counterexamples"] = cexs;
  j["ok"] = r.ok();
  return j;
}

void print_report(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::string family_csv(const EnumerationReport& r) {
  std::string out = "m,k,num,den,decimal\n";
  for (const FamilyRow& row : r.family) {
    out += std::to_string(row.m) + "," + std::to_string(row.k) + ","
           + row.value.num().str() + "," + row.value.den().str() + ","
           + row.value.to_decimal() + "\n";
  }
  return out;
}

int run_check(const std::string& path) {
  const FiniteSemigroup s = parse_table_file(path);
  ordered_json j;
  j["command"] = "check";
  j["input"] = path;
  j["valid"] = true;
  j["order"] = s.order();
  ordered_json predicates;
  predicates["left_reductive"] = is_left_reductive(s);
  predicates["left_zero"] = is_left_zero(s);
  predicates["right_zero"] = is_right_zero(s);
  predicates["left_cancellative"] = is_left_cancellative(s);
  predicates["null"] = is_null(s);
  predicates["nilpotent"] = is_nilpotent(s);
  predicates["idempotent_count"] = idempotents(s).count();
  j["predicates"] = predicates;
  print_report(j);
  return kExitVerified;
}

int run_prob(const std::string& path, const std::string& relation,
             const std::string& partition_path) {
  const FiniteSemigroup s = parse_table_file(path);
  ordered_json j;
  j["command"] = "prob";
  j["input"] = path;
  j["order"] = s.order();
  if (!partition_path.empty()) {
    const Partition p = parse_partition_file(partition_path, s.order());
    j["relation"] = "partition:" + partition_path;
    j["p"] = rational_json(probability_of_partition(p));
    j["blocks"] = blocks_json(p);
  } else if (relation == "theta") {
    const Partition p = theta(s);
    j["relation"] = "theta";
    j["p"] = rational_json(probability_of_partition(p));
    j["blocks"] = blocks_json(p);
  } else {
    j["relation"] = "commuting";
    j["p"] = rational_json(commuting_probability(s));
  }
  print_report(j);
  return kExitVerified;
}

int run_tower(const std::string& path, const std::string& sigma_path) {
  const FiniteSemigroup s = parse_table_file(path);
  Congruence sigma = Congruence::identity(s);
  std::string sigma_name = "identity";
  if (!sigma_path.empty()) {
    sigma = Congruence::checked(s, parse_partition_file(sigma_path, s.order()));
    sigma_name = "partition:" + sigma_path;
  }
  const std::vector<Congruence> tower = sigma_tower(s, sigma);
  ordered_json j;
  j["command"] = "tower";
  j["input"] = path;
  j["sigma"] = sigma_name;
  j["order"] = s.order();
  ordered_json entries = ordered_json::array();
  for (const Congruence& c : tower) {
    entries.push_back(blocks_json(c.partition()));
  }
  j["tower"] = entries;
  j["steps"] = tower.size();
  j["reached_universal"] = tower.back().partition().is_universal();
  print_report(j);
  return kExitVerified;
}

int run_verify(const std::vector<std::string>& ids, VerifyBounds bounds,
               const std::string& format, bool allow_large) {
  if ((bounds.max_order >= 5) && !allow_large) {
    throw Error("order-5 sweeps must be unlocked with --allow-large");
  }
  std::vector<EnumerationReport> reports;
  for (const std::string& id : ids) {
    reports.push_back(verify_theorem(parse_theorem_id(id), bounds));
  }
  bool ok = true;
  for (const EnumerationReport& r : reports) {
    ok = ok && r.ok();
  }
  if (format == "csv") {
    for (const EnumerationReport& r : reports) {
      if (r.family.empty()) {
        throw Error("csv output is only available for the T2/T3 family sweeps");
      }
      std::cout << family_csv(r);
    }
    return ok ? kExitVerified : kExitCounterexample;
  }
  ordered_json j;
  j["command"] = "verify";
  if (reports.size() == 1) {
    j["id"] = reports[0].id;
    ordered_json inner = report_json(reports[0]);
    inner.erase("id");
    j.update(inner);
  } else {
    j["id"] = "all";
    ordered_json list = ordered_json::array();
    for (const EnumerationReport& r : reports) {
      list.push_back(report_json(r));
    }
    j["reports"] = list;
    j["ok"] = ok;
  }
  print_report(j);
  return ok ? kExitVerified : kExitCounterexample;
}

int run_gen(const std::string& kind, int m, int k,
            const std::vector<int>& sizes, const std::vector<int>& stars,
            int left_zero, int extra, const std::vector<int>& phi) {
  FiniteSemigroup result = [&]() {
    if (kind == "a-mk") {
      return build_a_mk(m, k).semigroup;
    }
    if (kind == "a-k") {
      return build_a_k(m, k).semigroup;
    }
    if (kind == "construct2") {
      Construct2Spec spec;
      spec.m = static_cast<int>(sizes.size());
      spec.fiber_sizes = sizes;
      spec.stars = stars;
      return build_construct2(spec).semigroup;
    }
    if (kind == "construct3") {
      return build_construct3(Construct3Spec{left_zero, extra, phi});
    }
    throw Error("unknown generator kind: " + kind);
  }();
  std::cout << emit_table(result);
  return kExitVerified;
}

int run_enumerate(int order, bool count_only, bool allow_large, int jobs) {
  if (order == 5 && !allow_large) {
    throw Error(
        "order-5 enumeration must be unlocked with --allow-large (about "
        "1.8e5 tables)");
  }
  const auto tables = enumerate_tables(order, jobs);
  if (count_only) {
    ordered_json j;
    j["command"] = "enumerate";
    j["order"] = order;
    j["count"] = tables.size();
    print_report(j);
    return kExitVerified;
  }
  for (size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) {
      std::cout << "\n";
    }
    std::cout << emit_table(FiniteSemigroup::from_flat(order, tables[i]));
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact probability toolkit for finite semigroups"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for enumeration sweeps")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand(
      "check", "validate a table file and report structural predicates");
  std::string check_path;
  check->add_option("file", check_path, "table file")->required();

  auto* prob = app.add_subcommand(
      "prob", "exact probability that a random pair lies in a relation");
  std::string prob_path;
  std::string prob_relation = "theta";
  std::string prob_partition;
  prob->add_option("file", prob_path, "table file")->required();
  prob->add_option("--relation", prob_relation,
                   "relation to measure (theta or commuting)")
      ->check(CLI::IsMember({"theta", "commuting"}));
  prob->add_option("--partition", prob_partition,
                   "measure a partition loaded from this file instead");

  auto* tower = app.add_subcommand(
      "tower", "congruence tower sigma^(0) to its fixpoint");
  std::string tower_path;
  std::string tower_sigma;
  tower->add_option("file", tower_path, "table file")->required();
  tower->add_option("--sigma", tower_sigma,
                    "starting congruence as a partition file (default: "
                    "identity)");

  auto* gen = app.add_subcommand("gen", "emit a constructed semigroup table");
  std::string gen_kind;
  int gen_m = 0, gen_k = 0, gen_left_zero = 1, gen_extra = 0;
  std::vector<int> gen_sizes, gen_stars, gen_phi;
  gen->add_option("kind", gen_kind, "a-mk | a-k | construct2 | construct3")
      ->required()
      ->check(CLI::IsMember({"a-mk", "a-k", "construct2", "construct3"}));
  gen->add_option("--m", gen_m, "base size for a-mk / a-k");
  gen->add_option("--k", gen_k, "fiber parameter for a-mk / a-k");
  gen->add_option("--sizes", gen_sizes, "construct2 fiber sizes")
      ->delimiter(',');
  gen->add_option("--stars", gen_stars, "construct2 star indices (default 0s)")
      ->delimiter(',');
  gen->add_option("--left-zero", gen_left_zero,
                  "construct3 left zero part size");
  gen->add_option("--extra", gen_extra, "construct3 extra element count");
  gen->add_option("--phi", gen_phi, "construct3 phi values, one per element")
      ->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify", "machine-check the library's claims by exhaustive sweeps");
  std::vector<std::string> verify_ids;
  bool verify_all = false;
  std::string verify_format = "json";
  bool verify_allow_large = false;
  VerifyBounds bounds;
  verify->add_option("id", verify_ids,
                     "check ids: T1 T2 T3 T4 T5 T6 T7 PHI HOM TOWER");
  verify->add_flag("--all", verify_all, "run every check at default bounds");
  verify->add_option("--max-order", bounds.max_order,
                     "largest semigroup order for exhaustive sweeps");
  verify->add_option("--max-size", bounds.max_size,
                     "largest carrier size for the T1 partition sweep");
  verify->add_option("--m", bounds.max_m, "largest m for the T2 family");
  verify->add_option("--k", bounds.max_k, "largest k for the T2/T3 families");
  verify->add_option("--format", verify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--allow-large", verify_allow_large,
                   "unlock order-5 sweeps");

  auto* enumerate = app.add_subcommand(
      "enumerate", "stream every associative table of a given order");
  int enum_order = 0;
  bool enum_count_only = false;
  bool enum_allow_large = false;
  enumerate->add_option("--order", enum_order, "semigroup order (1..5)")
      ->required();
  enumerate->add_flag("--count-only", enum_count_only,
                      "print the count instead of the tables");
  enumerate->add_flag("--allow-large", enum_allow_large,
                      "unlock order-5 enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) {
      return run_check(check_path);
    }
    if (*prob) {
      return run_prob(prob_path, prob_relation, prob_partition);
    }
    if (*tower) {
      return run_tower(tower_path, tower_sigma);
    }
    if (*gen) {
      return run_gen(gen_kind, gen_m, gen_k, gen_sizes, gen_stars,
                     gen_left_zero, gen_extra, gen_phi);
    }
    if (*verify) {
      if (verify_all == verify_ids.empty()) {
        // exactly one of --all / explicit ids
        std::vector<std::string> ids;
        if (verify_all) {
          for (TheoremId id : all_theorem_ids()) {
            ids.push_back(theorem_id_name(id));
          }
        }
        if (ids.empty()) {
          throw Error("verify needs either check ids or --all");
        }
        bounds.jobs = jobs;
        return run_verify(ids, bounds, verify_format, verify_allow_large);
      }
      if (verify_all) {
        throw Error("--all cannot be combined with explicit check ids");
      }
      bounds.jobs = jobs;
      return run_verify(verify_ids, bounds, verify_format, verify_allow_large);
    }
    if (*enumerate) {
      return run_enumerate(enum_order, enum_count_only, enum_allow_large, jobs);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
