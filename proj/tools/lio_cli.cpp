// lio: counting, enumeration, mapping and verification for labeled
// interval orders and the ballot-matrix machinery behind them.

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "lio/ascents.hpp"
#include "lio/counting.hpp"
#include "lio/fixedpoints.hpp"
#include "lio/json_io.hpp"
#include "lio/matrices.hpp"
#include "lio/posets.hpp"
#include "lio/properties.hpp"

namespace {

using namespace lio;

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

IntSet parse_set(const std::string& text) {
  IntSet S;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("--set: not an integer: " + item);
    S.insert(v);
  }
  return S;
}

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

// ---------------------------------------------------------------- count

struct CountLioArgs {
  int n = 0;
  std::vector<std::string> methods;
  int jobs = 1;
  bool json = false;
};

BigCount count_by(const std::string& method, int n, int jobs) {
  if (method == "formula") return count_lio(n, jobs);
  if (method == "alpha-lambda") return count_lio_alpha_lambda(n);
  if (method == "pairs") return count_pairs_ab_in_d(n);
  if (method == "pairs-dual") return count_pairs_d_in_ab(n);
  if (method == "oracle") return static_cast<unsigned long>(enumerate_labeled_interval_orders(n).size());
  if (method == "fixed-points") return static_cast<unsigned long>(fixed_points_for(IntSet::range(n)).size());
  throw std::invalid_argument("unknown method " + method);
}

int run_count_lio(const CountLioArgs& a) {
  std::vector<std::string> methods;
  for (const std::string& m : a.methods) {
    if (m != "all") {
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
      continue;
    }
    for (const char* each : {"formula", "alpha-lambda", "pairs", "pairs-dual", "fixed-points", "oracle"}) {
      if (std::string(each) == "fixed-points" && a.n > 6) continue;
      if (std::string(each) == "oracle" && a.n > 5) continue;
      if (std::find(methods.begin(), methods.end(), each) == methods.end()) methods.emplace_back(each);
    }
  }
  if (methods.empty()) methods.emplace_back("formula");

  std::vector<BigCount> values;
  for (const std::string& m : methods) values.push_back(count_by(m, a.n, a.jobs));

  if (methods.size() == 1) {
    if (a.json)
      std::cout << Json{{"value", values[0].get_str()}}.dump() << '\n';
    else
      std::cout << values[0].get_str() << '\n';
    return 0;
  }
  const bool agree = std::all_of(values.begin(), values.end(), [&](const BigCount& v) { return v == values[0]; });
  if (a.json) {
    Json vals = Json::object();
    for (std::size_t i = 0; i < methods.size(); ++i) vals[methods[i]] = values[i].get_str();
    std::cout << Json{{"agree", agree}, {"values", vals}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < methods.size(); ++i) std::cout << methods[i] << ": " << values[i].get_str() << '\n';
    std::cout << "cross-check: " << (agree ? "agree" : "MISMATCH") << '\n';
  }
  return agree ? 0 : kExitFailure;
}

int run_count_stat(const std::string& stat, int n, const std::string& set_text, bool json) {
  const IntSet S = parse_set(set_text);
  BigCount v;
  if (stat == "alpha") v = alpha(n, S);
  else if (stat == "beta") v = beta(n, S);
  else if (stat == "kappa") v = kappa(n, S);
  else v = lambda(n, S);
  if (json)
    std::cout << Json{{"value", v.get_str()}}.dump() << '\n';
  else
    std::cout << v.get_str() << '\n';
  return 0;
}

// ------------------------------------------------------------ enumerate

int run_enumerate(const std::string& what, int n, bool json) {
  const IntSet U = IntSet::range(n);
  if (what == "fixed-points") {
    for (const FixedPointMatrix& F : fixed_points_for(U))
      std::cout << (json ? to_json(F.matrix()).dump() : to_string(F.matrix())) << '\n';
  } else if (what == "interval-orders") {
    for (const Poset& P : enumerate_labeled_interval_orders(n))
      std::cout << (json ? to_json(P).dump() : to_string(P)) << '\n';
  } else {
    check_guard("enumerate ballot-matrices n", n, 4);
    for_each_ballot_matrix(U, [&](const BallotMatrix& A) {
      std::cout << (json ? to_json(A).dump() : to_string(A)) << '\n';
    });
  }
  return 0;
}

// ------------------------------------------------------------------ map

struct MapArgs {
  std::string variant = "subset";
  bool closure = false;
  std::string scan = "row-major";
};

int run_map(const std::string& what, const MapArgs& a) {
  const Json in = parse_json(read_stdin());
  Json out;
  if (what == "cc-to-perm") {
    out = Json{{"perm", to_json(cc_to_perm(construction_choice_from_json(in)))}};
  } else if (what == "cc-to-invtab") {
    const ConstructionChoice c = construction_choice_from_json(in);
    out = Json{{"invtab", to_json(a.variant == "missing" ? cc_to_invtab_missing(c) : cc_to_invtab_subset(c))}};
  } else if (what == "cc-to-ballot") {
    out = Json{{"ballot", to_json(cc_to_ballot(construction_choice_from_json(in)))}};
  } else {
    const BallotMatrix A = ballot_matrix_from_json(in);
    if (what == "matrix-to-poset") {
      out = to_json(poset_of(A));
    } else if (what == "decompose") {
      if (!is_fixed_point(A)) throw JsonFormatError("decompose: matrix is not fixed by eta");
      out = to_json(decompose(FixedPointMatrix(A)));
    } else if (what == "rho") {
      out = to_json(a.closure ? rho_closure(A) : rho(A));
    } else if (what == "rho-inverse") {
      out = to_json(a.closure ? rho_inverse_closure(A) : rho_inverse(A));
    } else {
      out = to_json(eta(A, a.scan == "by-minimum" ? ScanOrder::kByMinimum : ScanOrder::kRowMajor));
    }
  }
  std::cout << out.dump() << '\n';
  return 0;
}

// --------------------------------------------------------------- verify

int run_verify(const std::string& suite, int n, int jobs) {
  std::vector<PropertyResult> results;
  if (suite == "involution") results = verify_involution(n, jobs);
  else if (suite == "preservation") results = verify_preservation(n, jobs);
  else if (suite == "bijections") results = verify_bijections(n, jobs);
  else results = verify_counts(n, jobs);
  bool ok = true;
  for (const PropertyResult& r : results) {
    const char* tag = r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL";
    ok = ok && r.passed;
    std::cout << tag << "  " << r.name << "  (" << r.detail << ")\n";
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labeled interval orders via ballot matrices"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Exact counts")->require_subcommand(1);
  CountLioArgs lio_args;
  auto* count_lio_cmd = count->add_subcommand("lio", "Number of labeled interval orders on [n]");
  count_lio_cmd->add_option("--n", lio_args.n)->required()->check(CLI::NonNegativeNumber);
  count_lio_cmd->add_option("--method", lio_args.methods, "formula, alpha-lambda, pairs, pairs-dual, oracle, fixed-points, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"formula", "alpha-lambda", "pairs", "pairs-dual", "oracle", "fixed-points", "all"}));
  count_lio_cmd->add_option("--jobs", lio_args.jobs)->check(CLI::PositiveNumber);
  count_lio_cmd->add_flag("--json", lio_args.json);

  int stat_n = 0;
  std::string stat_set;
  bool stat_json = false;
  std::vector<std::pair<std::string, CLI::App*>> stats;
  for (const char* name : {"alpha", "beta", "kappa", "lambda"}) {
    auto* sub = count->add_subcommand(name, std::string("Evaluate ") + name + "_n(S)");
    sub->add_option("--n", stat_n)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--set", stat_set, "comma-separated subset of [n-1]");
    sub->add_flag("--json", stat_json);
    stats.emplace_back(name, sub);
  }

  auto* enumerate = app.add_subcommand("enumerate", "List objects, one per line")->require_subcommand(1);
  int enum_n = 0;
  bool enum_json = false;
  std::vector<std::pair<std::string, CLI::App*>> enums;
  for (const char* name : {"fixed-points", "interval-orders", "ballot-matrices"}) {
    auto* sub = enumerate->add_subcommand(name);
    sub->add_option("--n", enum_n)->required()->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", enum_json, "newline-delimited JSON");
    enums.emplace_back(name, sub);
  }

  auto* map = app.add_subcommand("map", "Apply a map to one JSON object read from stdin")->require_subcommand(1);
  MapArgs map_args;
  std::vector<std::pair<std::string, CLI::App*>> maps;
  for (const char* name : {"matrix-to-poset", "cc-to-perm", "cc-to-invtab", "cc-to-ballot", "decompose", "rho",
                           "rho-inverse", "eta"})
    maps.emplace_back(name, map->add_subcommand(name));
  maps[2].second->add_option("--variant", map_args.variant)->check(CLI::IsMember({"subset", "missing"}));
  maps[5].second->add_flag("--closure", map_args.closure, "repeat until no candidate remains");
  maps[6].second->add_flag("--closure", map_args.closure, "repeat until no candidate remains");
  maps[7].second->add_option("--scan", map_args.scan)->check(CLI::IsMember({"row-major", "by-minimum"}));

  auto* verify = app.add_subcommand("verify", "Run exhaustive property suites")->require_subcommand(1);
  int verify_n = 0, verify_jobs = 1;
  std::vector<std::pair<std::string, CLI::App*>> suites;
  for (const char* name : {"involution", "preservation", "bijections", "counts"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("--n", verify_n)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", verify_jobs)->check(CLI::PositiveNumber);
    suites.emplace_back(name, sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count_lio_cmd) return run_count_lio(lio_args);
    for (auto& [name, sub] : stats)
      if (*sub) return run_count_stat(name, stat_n, stat_set, stat_json);
    for (auto& [name, sub] : enums)
      if (*sub) return run_enumerate(name, enum_n, enum_json);
    for (auto& [name, sub] : maps)
      if (*sub) return run_map(name, map_args);
    for (auto& [name, sub] : suites)
      if (*sub) return run_verify(name, verify_n, verify_jobs);
  } catch (const SizeGuardError& e) {
    std::cerr << "lio: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "lio: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitFailure;
}
