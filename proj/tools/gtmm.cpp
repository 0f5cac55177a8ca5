// gtmm: group-theoretic matrix multiplication toolkit.
//
// Subcommands: verify, realize, bound, reproduce, search. Exit codes:
// 0 = success / property holds, 1 = property violated or a reproduction
// row failed, 2 = input error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gtmm/algebra.hpp"
#include "gtmm/bilinear.hpp"
#include "gtmm/bounds.hpp"
#include "gtmm/constructions.hpp"
#include "gtmm/dsl.hpp"
#include "gtmm/io.hpp"

using namespace gtmm;
using gtmm::io::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in list \"" + text + "\"");
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::array<std::uint64_t, 3> parse_shape(const std::string& text) {
  const auto values = parse_number_list(text);
  if (values.size() != 3) throw ParseError("expected m,p,q in \"" + text + "\"");
  std::array<std::uint64_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (values[i] < 1 || values[i] != std::floor(values[i])) {
      throw ParseError("shape components must be positive integers");
    }
    out[i] = static_cast<std::uint64_t>(values[i]);
  }
  return out;
}

TensorSize parse_tensor_size(const std::string& text) {
  const auto values = parse_number_list(text);
  if (values.size() != 3) throw ParseError("expected m,p,q in \"" + text + "\"");
  return TensorSize{values[0], values[1], values[2]};
}

json witness_json(const Group& g, const TppWitness& w) {
  return json{{"s_prime", io::word_of(g, w.s_prime)},
              {"s", io::word_of(g, w.s)},
              {"t_prime", io::word_of(g, w.t_prime)},
              {"t", io::word_of(g, w.t)},
              {"u_prime", io::word_of(g, w.u_prime)},
              {"u", io::word_of(g, w.u)}};
}

json witness_json(const Group& g, const StppWitness& w) {
  return json{{"i", w.i},
              {"j", w.j},
              {"k", w.k},
              {"s_i", io::word_of(g, w.s_i)},
              {"s_j", io::word_of(g, w.s_j)},
              {"t_j", io::word_of(g, w.t_j)},
              {"t_k", io::word_of(g, w.t_k)},
              {"u_k", io::word_of(g, w.u_k)},
              {"u_i", io::word_of(g, w.u_i)}};
}

struct CommonInput {
  std::string group_dsl;
  std::string subsets_path;
  std::uint64_t axis_n = 0;
};

// Builds (group, family) from --subsets or the --axis shorthand.
std::pair<Group, SimultaneousFamily> load_family(const CommonInput& in) {
  if (in.axis_n > 0) {
    SimultaneousFamily fam = punctured_axis_family(in.axis_n);
    return {fam.group(), std::move(fam)};
  }
  if (in.group_dsl.empty() || in.subsets_path.empty()) {
    throw ParseError("need --group and --subsets (or --axis N)");
  }
  const Group g = parse_group(in.group_dsl);
  SimultaneousFamily fam =
      io::family_from_json(g, io::load_json_file(in.subsets_path));
  return {g, std::move(fam)};
}

int cmd_verify(const CommonInput& in, const std::string& mode,
               bool as_json) {
  auto [group, family] = load_family(in);
  json report{{"group", group.name()}, {"mode", mode}};
  json triple_sizes = json::array();
  for (const auto& t : family.triples()) {
    triple_sizes.push_back(json::array(
        {t.sizes()[0], t.sizes()[1], t.sizes()[2]}));
  }
  report["sizes"] = triple_sizes;

  bool holds = false;
  if (mode == "tpp") {
    if (family.size() != 1) {
      throw ParseError("mode tpp expects exactly one triple");
    }
    SubsetTriple t = family.triples()[0];
    holds = tpp_check(t);
    if (!holds) {
      const auto w = find_tpp_violation(t);
      if (w) report["witness"] = witness_json(group, *w);
    }
  } else if (mode == "stpp") {
    holds = stpp_check(family);
    if (!holds) {
      const auto w = find_stpp_violation(family);
      if (w) report["witness"] = witness_json(group, *w);
    }
  } else {
    throw ParseError("mode must be tpp or stpp");
  }
  report["holds"] = holds;
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << (mode == "tpp" ? "triple product property"
                                : "simultaneous triple product property")
              << " on " << group.name() << ": "
              << (holds ? "holds" : "violated") << "\n";
    if (!holds && report.contains("witness")) {
      std::cout << "witness: " << report["witness"].dump() << "\n";
    }
  }
  return holds ? 0 : 1;
}

int cmd_realize(const CommonInput& in, const std::string& matrices_path,
                bool use_random, std::uint64_t seed, bool verify_first,
                bool as_json) {
  auto [group, family] = load_family(in);
  if (verify_first || in.axis_n > 0) {
    if (!stpp_check(family)) {
      throw DomainError("subsets fail verification; nothing to realize");
    }
  } else if (family.status() != FamilyStatus::stpp) {
    throw ParseError(
        "subsets are unverified; pass --verify to check them first");
  }

  std::vector<MatrixPair> pairs;
  if (use_random) {
    std::mt19937_64 rng(seed);
    for (const SubsetTriple& t : family.triples()) {
      const auto [m, p, q] = t.sizes();
      pairs.push_back({random_integer_matrix(m, p, -9, 9, rng),
                       random_integer_matrix(p, q, -9, 9, rng)});
    }
  } else {
    if (matrices_path.empty()) {
      throw ParseError("need --matrices FILE or --random");
    }
    const json j = io::load_json_file(matrices_path);
    if (j.contains("pairs")) {
      for (const json& p : j["pairs"]) {
        pairs.push_back({io::matrix_from_json(p.at("A")),
                         io::matrix_from_json(p.at("B"))});
      }
    } else {
      pairs.push_back({io::matrix_from_json(j.at("A")),
                       io::matrix_from_json(j.at("B"))});
    }
    if (pairs.size() != family.size()) {
      throw ParseError("expected one matrix pair per triple");
    }
  }

  OpCount ops;
  std::vector<RationalMatrix> recovered;
  if (family.size() == 1) {
    recovered.push_back(
        realize_product(family.triples()[0], pairs[0].a, pairs[0].b, &ops));
  } else {
    recovered = realize_simultaneous(family, pairs, &ops);
  }

  bool all_equal = true;
  std::uint64_t naive_mults = 0;
  json results = json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const RationalMatrix naive = naive_product(pairs[i].a, pairs[i].b);
    const bool equal = recovered[i] == naive;
    all_equal = all_equal && equal;
    naive_mults += family.triples()[i].size();
    results.push_back(json{{"A", io::matrix_to_json(pairs[i].a)},
                           {"B", io::matrix_to_json(pairs[i].b)},
                           {"recovered", io::matrix_to_json(recovered[i])},
                           {"naive", io::matrix_to_json(naive)},
                           {"equal", equal}});
  }
  json report{{"group", group.name()},
              {"mode", family.size() == 1 ? "single" : "simultaneous"},
              {"pairs", results},
              {"all_equal", all_equal},
              {"algebra_scalar_mults", ops.scalar_mults},
              {"naive_scalar_mults", naive_mults}};
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "realized " << pairs.size() << " product(s) in "
              << group.name() << " with one algebra multiplication\n";
    for (std::size_t i = 0; i < recovered.size(); ++i) {
      std::cout << "  pair " << i << ": recovered "
                << io::matrix_to_json(recovered[i]).dump() << ", naive "
                << results[i]["naive"].dump() << "\n";
    }
    std::cout << "equal: " << (all_equal ? "true" : "false") << "\n";
    std::cout << "algebra scalar multiplications: " << ops.scalar_mults
              << " (naive total m*p*q: " << naive_mults << ")\n";
  }
  return all_equal ? 0 : 1;
}

void print_bound(const BoundReport& report, bool as_json) {
  if (as_json) {
    std::cout << io::bound_report_to_json(report).dump(2) << "\n";
    return;
  }
  std::printf("omega <= %.10g  [%s]", report.omega_bound,
              report.formula.c_str());
  if (report.vacuous) std::printf("  (vacuous: omega <= 3 always)");
  if (report.hypothetical_k) std::printf("  (hypothetical k)");
  std::printf("\n");
  for (const auto& [k, v] : report.parameters) {
    std::printf("  %s = %s\n", k.c_str(), v.c_str());
  }
  if (report.residual) std::printf("  residual = %.3e\n", *report.residual);
}

struct ReproRow {
  std::string label;
  std::string params;
  double computed;
  double paper;
  double tolerance;
  bool value_row;  // argmin rows never affect the verdict
};

int cmd_reproduce(bool as_json) {
  const ScanResult pair = scan_minimum(ScanFormula::pair, 2, 100);
  const ScanResult wpair = scan_minimum(ScanFormula::wreath_pair, 2, 200);
  const double tower25 = scan_formula_value(ScanFormula::tower, 25);
  const ScanResult tower = scan_minimum(ScanFormula::tower, 2, 100);
  const double rank7 = exponent_from_rank({2, 2, 2}, 7);

  const std::vector<ReproRow> rows = {
      {"pair scan minimum [2,100]", "n=" + std::to_string(pair.argmin),
       pair.value, 2.81553, 1e-5, true},
      {"pair scan argmin", "", static_cast<double>(pair.argmin), 16.0, 0.5,
       false},
      {"wreath-pair scan minimum [2,200]",
       "n=" + std::to_string(wpair.argmin), wpair.value, 2.92613048, 1e-6,
       true},
      {"wreath-pair scan argmin", "", static_cast<double>(wpair.argmin), 41.0,
       0.5, false},
      {"tower bound at n=25", "n=25", tower25, 2.8330169, 1e-6, true},
      {"tower scan argmin [2,100] (known discrepancy, reported only)", "",
       static_cast<double>(tower.argmin), 25.0, 0.5, false},
      {"exponent from the rank-7 scheme", "shape 2,2,2 r=7", rank7, 2.8073549,
       1e-6, true},
  };

  bool all_values_pass = true;
  json jrows = json::array();
  for (const ReproRow& r : rows) {
    const double diff = std::fabs(r.computed - r.paper);
    const bool pass = diff <= r.tolerance;
    if (r.value_row) all_values_pass = all_values_pass && pass;
    jrows.push_back(json{{"label", r.label},
                         {"params", r.params},
                         {"computed", r.computed},
                         {"paper", r.paper},
                         {"abs_diff", diff},
                         {"pass", pass},
                         {"value_row", r.value_row}});
  }
  if (as_json) {
    std::cout << json{{"rows", jrows}, {"pass", all_values_pass}}.dump(2)
              << "\n";
  } else {
    std::printf("%-58s %-10s %14s %14s %10s  %s\n", "label", "params",
                "computed", "tabulated", "abs diff", "verdict");
    for (const json& r : jrows) {
      std::printf("%-58s %-10s %14.8f %14.8f %10.2e  %s\n",
                  r["label"].get<std::string>().c_str(),
                  r["params"].get<std::string>().c_str(),
                  r["computed"].get<double>(), r["paper"].get<double>(),
                  r["abs_diff"].get<double>(),
                  r["pass"].get<bool>()
                      ? "pass"
                      : (r["value_row"].get<bool>() ? "FAIL" : "differs"));
    }
    std::printf("reproduction: %s\n", all_values_pass ? "pass" : "FAIL");
  }
  return all_values_pass ? 0 : 1;
}

int cmd_search_tpp(const std::string& group_dsl, const std::string& target,
                   bool first_only, bool modulo_translation,
                   std::uint64_t budget, std::uint64_t max_results,
                   const std::string& out_path, bool as_json) {
  const Group g = parse_group(group_dsl);
  TppSearchOptions options;
  options.first_only = first_only;
  options.modulo_right_translation = modulo_translation;
  options.node_budget = budget;
  options.max_results = max_results;
  const auto report = find_tpp_triples(g, parse_shape(target), options);

  json triples = json::array();
  for (const SubsetTriple& t : report.triples) {
    triples.push_back(io::triple_to_json(t));
  }
  json body{{"kind", "tpp"},
            {"group", g.name()},
            {"target", parse_shape(target)},
            {"first_only", first_only},
            {"modulo_right_translation", modulo_translation},
            {"budget", budget},
            {"nodes", report.nodes},
            {"complete", report.complete},
            {"count", report.triples.size()},
            {"triples", triples}};
  const json sealed = io::seal(std::move(body));
  if (!out_path.empty()) io::save_json_file(out_path, sealed);
  if (as_json) {
    std::cout << sealed.dump(2) << "\n";
  } else {
    std::cout << "found " << report.triples.size() << " triple(s) in "
              << g.name() << " (" << report.nodes << " nodes, "
              << (report.complete ? "complete" : "budget-cut") << ")";
    if (!out_path.empty()) std::cout << " -> " << out_path;
    std::cout << "\n";
  }
  return 0;
}

int cmd_search_permfamily(const CommonInput& in, std::uint64_t budget,
                          const std::string& out_path, bool as_json) {
  auto [group, family] = load_family(in);
  if (!stpp_check(family)) {
    throw DomainError("the base family fails verification");
  }
  const auto result = search_permutation_family(family, budget);
  json body{{"kind", "permfamily"},
            {"base_group", group.name()},
            {"wreath_group", result.verified_family.group().name()},
            {"degree", result.family.degree},
            {"k", result.family.k()},
            {"perm_family", io::perm_family_to_json(result.family)},
            {"budget", budget},
            {"checks", result.checks},
            {"exhaustive", result.exhaustive},
            {"stpp_verified",
             result.verified_family.status() == FamilyStatus::stpp}};
  const json sealed = io::seal(std::move(body));
  if (!out_path.empty()) io::save_json_file(out_path, sealed);
  if (as_json) {
    std::cout << sealed.dump(2) << "\n";
  } else {
    std::cout << "largest verified permutation family: k = "
              << result.family.k() << " over " << group.name() << " (degree "
              << result.family.degree << ", "
              << (result.exhaustive ? "exhaustive" : "budget-cut") << ", "
              << result.checks << " checks)";
    if (!out_path.empty()) std::cout << " -> " << out_path;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-theoretic matrix multiplication toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check the (simultaneous) triple product property");
  CommonInput vin;
  std::string vmode = "tpp";
  verify->add_option("--group", vin.group_dsl, "group DSL, e.g. cyc(4)^3");
  verify->add_option("--subsets", vin.subsets_path, "subsets JSON file");
  verify->add_option("--axis", vin.axis_n,
                     "use the built-in punctured axis family over cyc(N)^3");
  verify->add_option("--mode", vmode, "tpp or stpp")->required();

  // realize
  auto* realize = app.add_subcommand(
      "realize", "multiply matrices through the group algebra");
  CommonInput rin;
  std::string matrices_path;
  bool use_random = false;
  bool verify_first = false;
  std::uint64_t seed = kDefaultSeed;
  realize->add_option("--group", rin.group_dsl, "group DSL");
  realize->add_option("--subsets", rin.subsets_path, "subsets JSON file");
  realize->add_option("--axis", rin.axis_n,
                      "use the built-in punctured axis family over cyc(N)^3");
  realize->add_option("--matrices", matrices_path, "matrices JSON file");
  realize->add_flag("--random", use_random, "draw random integer matrices");
  realize->add_option("--seed", seed, "seed for --random");
  realize->add_flag("--verify", verify_first,
                    "verify the subsets before realizing");

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate an exponent bound");
  bound->require_subcommand(1);

  auto* b_rank = bound->add_subcommand("rank", "from a tensor rank bound");
  std::string shape_text;
  std::uint64_t rank_r = 0;
  b_rank->add_option("--shape", shape_text, "m,p,q")->required();
  b_rank->add_option("--r", rank_r, "rank bound")->required();

  auto* b_rank_power = bound->add_subcommand(
      "rank-power", "recursive power of a rank bound, exactly");
  std::uint64_t rp_r = 0, rp_n = 0;
  std::uint32_t rp_k = 0;
  b_rank_power->add_option("--r", rp_r)->required();
  b_rank_power->add_option("--n", rp_n)->required();
  b_rank_power->add_option("--k", rp_k)->required();

  auto* b_capacity =
      bound->add_subcommand("capacity", "Abelian group capacity |G|");
  std::string cap_group;
  b_capacity->add_option("--group", cap_group)->required();

  auto* b_square = bound->add_subcommand(
      "square-family", "k identical square tensors in an Abelian group");
  double sf_order = 0, sf_count = 0, sf_side = 0;
  std::string sf_group;
  b_square->add_option("--order", sf_order, "group order");
  b_square->add_option("--group", sf_group,
                       "derive the order from an Abelian group DSL");
  b_square->add_option("--count", sf_count)->required();
  b_square->add_option("--side", sf_side)->required();

  auto* b_wreath = bound->add_subcommand(
      "wreath", "family lifted to H wr Sym_n, k = 1");
  double w_h_order = 0, w_k = 1;
  std::uint64_t w_degree = 0, w_copies = 1;
  std::string w_size_text;
  b_wreath->add_option("--h-order", w_h_order)->required();
  b_wreath->add_option("--degree", w_degree)->required();
  b_wreath->add_option("--size", w_size_text, "m,p,q")->required();
  b_wreath->add_option("--copies", w_copies, "identical tensor count");

  auto* b_wreath_family = bound->add_subcommand(
      "wreath-family", "k permuted product triples in H wr Sym_n");
  b_wreath_family->add_option("--h-order", w_h_order)->required();
  b_wreath_family->add_option("--degree", w_degree)->required();
  b_wreath_family->add_option("--k", w_k)->required();
  b_wreath_family->add_option("--size", w_size_text, "m,p,q")->required();
  b_wreath_family->add_option("--copies", w_copies);

  auto* b_pseudo = bound->add_subcommand(
      "pseudo", "root of sum sizes^(w/3) = capacity");
  std::string pseudo_sizes;
  double pseudo_capacity = 0;
  b_pseudo->add_option("--sizes", pseudo_sizes, "comma list of m*p*q values")
      ->required();
  b_pseudo->add_option("--capacity", pseudo_capacity)->required();

  auto* b_scan = bound->add_subcommand("scan", "minimize a closed form");
  std::string scan_formula;
  std::uint64_t scan_lo = 2, scan_hi = 100;
  b_scan->add_option("--formula", scan_formula, "pair, wreath-pair or tower")
      ->required();
  b_scan->add_option("--lo", scan_lo);
  b_scan->add_option("--hi", scan_hi);

  // reproduce
  app.add_subcommand("reproduce",
                     "recompute the tabulated bound values and compare");

  // search
  auto* search = app.add_subcommand("search", "search for subset structures");
  search->require_subcommand(1);
  auto* s_tpp = search->add_subcommand("tpp", "subset triples of target sizes");
  std::string st_group, st_target, st_out;
  bool st_first = false, st_modulo = false;
  std::uint64_t st_budget = 50'000'000, st_max_results = 100'000;
  s_tpp->add_option("--group", st_group)->required();
  s_tpp->add_option("--target", st_target, "m,p,q")->required();
  s_tpp->add_flag("--first", st_first, "stop at the first triple");
  s_tpp->add_flag("--modulo-translation", st_modulo,
                  "only subsets containing the identity (one per translate "
                  "class)");
  s_tpp->add_option("--budget", st_budget, "node budget");
  s_tpp->add_option("--max-results", st_max_results);
  s_tpp->add_option("--out", st_out, "persist sealed results here");

  auto* s_perm = search->add_subcommand(
      "permfamily", "largest simultaneous permutation family");
  CommonInput pin;
  std::uint64_t sp_budget = 1'000'000;
  std::string sp_out;
  s_perm->add_option("--group", pin.group_dsl, "base group DSL");
  s_perm->add_option("--subsets", pin.subsets_path, "base family JSON");
  s_perm->add_option("--axis", pin.axis_n,
                     "use the built-in punctured axis family over cyc(N)^3");
  s_perm->add_option("--budget", sp_budget, "feasibility-check budget");
  s_perm->add_option("--out", sp_out, "persist sealed results here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(vin, vmode, as_json);
    if (realize->parsed()) {
      return cmd_realize(rin, matrices_path, use_random, seed, verify_first,
                         as_json);
    }
    if (bound->parsed()) {
      BoundReport report;
      if (b_rank->parsed()) {
        const auto s = parse_shape(shape_text);
        report = report_exponent_from_rank({s[0], s[1], s[2]}, rank_r);
      } else if (b_rank_power->parsed()) {
        const BigInt value = rank_power_bound(rp_r, rp_n, rp_k);
        report.formula = "rank-power";
        report.parameters = {{"r", std::to_string(rp_r)},
                             {"n", std::to_string(rp_n)},
                             {"k", std::to_string(rp_k)},
                             {"bound", value.get_str()}};
        // The implied exponent is unchanged by powering.
        report.omega_bound =
            std::log(static_cast<double>(rp_r)) /
            std::log(static_cast<double>(rp_n));
        report.notes = "bound parameter is R(<n^k,n^k,n^k>) <= r^k, exact";
        if (report.omega_bound > 3.0) report.vacuous = true;
      } else if (b_capacity->parsed()) {
        const Group g = parse_group(cap_group);
        const std::uint64_t capacity = abelian_capacity(g);
        report.formula = "capacity";
        report.parameters = {{"group", g.name()},
                             {"capacity", std::to_string(capacity)}};
        report.omega_bound = 3.0;
        report.notes = "capacity only; combine with tensor sizes for a bound";
      } else if (b_square->parsed()) {
        double order = sf_order;
        if (!sf_group.empty()) {
          // Refuses non-Abelian groups, the usage guard for this formula.
          order = static_cast<double>(abelian_capacity(parse_group(sf_group)));
        } else if (order <= 0) {
          throw ParseError("need --order or --group");
        }
        report = report_square_family(order, sf_count, sf_side);
      } else if (b_wreath->parsed()) {
        report = report_wreath_uniform(w_h_order, w_degree,
                                       parse_tensor_size(w_size_text),
                                       w_copies);
      } else if (b_wreath_family->parsed()) {
        report = report_wreath_family_uniform(w_h_order, w_degree, w_k,
                                              parse_tensor_size(w_size_text),
                                              w_copies);
      } else if (b_pseudo->parsed()) {
        report = report_pseudo_exponent(parse_number_list(pseudo_sizes),
                                        pseudo_capacity);
      } else if (b_scan->parsed()) {
        ScanFormula formula;
        if (scan_formula == "pair") {
          formula = ScanFormula::pair;
        } else if (scan_formula == "wreath-pair") {
          formula = ScanFormula::wreath_pair;
        } else if (scan_formula == "tower") {
          formula = ScanFormula::tower;
        } else {
          throw ParseError("unknown scan formula \"" + scan_formula + "\"");
        }
        const ScanResult r = scan_minimum(formula, scan_lo, scan_hi);
        report.formula = "scan";
        report.parameters = {{"formula", scan_formula},
                             {"lo", std::to_string(scan_lo)},
                             {"hi", std::to_string(scan_hi)},
                             {"argmin", std::to_string(r.argmin)}};
        report.omega_bound = r.value;
        if (report.omega_bound > 3.0) report.vacuous = true;
      }
      print_bound(report, as_json);
      return 0;
    }
    if (app.get_subcommand("reproduce")->parsed()) {
      return cmd_reproduce(as_json);
    }
    if (search->parsed()) {
      if (s_tpp->parsed()) {
        return cmd_search_tpp(st_group, st_target, st_first, st_modulo,
                              st_budget, st_max_results, st_out, as_json);
      }
      return cmd_search_permfamily(pin, sp_budget, sp_out, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
