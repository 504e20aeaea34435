#include "peo_tools/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <stdexcept>

#include "peo/certificate.hpp"
#include "peo/classes.hpp"
#include "peo/graph.hpp"
#include "peo/matrix.hpp"
#include "peo/oracle.hpp"
#include "peo/order.hpp"
#include "peo/report.hpp"

namespace peo::tools {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SymmetricMatrix load_matrix(const CliConfig& cfg) {
  if (cfg.format.value_or(InputFormat::matrix) == InputFormat::graph) {
    return read_graph_file(cfg.input).adjacency_matrix();
  }
  return read_matrix_file(cfg.input);
}

Graph load_graph(const CliConfig& cfg) {
  if (cfg.format.value_or(InputFormat::graph) != InputFormat::graph) {
    throw UsageError("power expects --format graph");
  }
  return read_graph_file(cfg.input);
}

std::string one_based(const TripleViolation& t) {
  return std::to_string(t.x + 1) + " " + std::to_string(t.y + 1) + " " + std::to_string(t.z + 1);
}

SymmetricMatrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(2, 6);
  std::uniform_int_distribution<int> entry(0, 2);
  SymmetricMatrix a(size(rng), 0);
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = x + 1; y < a.size(); ++y) {
      a.set(x, y, entry(rng));
    }
  }
  return a;
}

}  // namespace

int cmd_order(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  SymmetricMatrix a = load_matrix(cfg);
  Certificate cert = extract_certificate(a);
  if (!is_valid_certificate(a, cert)) {
    err << "error: certificate failed re-validation\n";
    return kInternal;
  }
  const bool positive = std::holds_alternative<LinearOrder>(cert);
  if (cfg.machine) {
    out << write_flat_map(to_flat_map(cert));
  } else {
    if (!positive) {
      out << "NO-PEO\n";
    }
    out << format_certificate(cert) << '\n';
  }
  return positive ? kPositive : kNegative;
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  SymmetricMatrix a = load_matrix(cfg);
  auto cls = parse_order_class(cfg.order_class);
  if (!cls) {
    throw UsageError("unknown class '" + cfg.order_class + "'");
  }
  LinearOrder pi = parse_order(cfg.order, a.size());
  auto bad = order_violation(a, pi, *cls);
  if (cfg.machine) {
    FlatMap map{{"class", std::string(to_string(*cls))}, {"result", bad ? "violation" : "ok"}};
    if (bad) {
      map.emplace_back("triple", one_based(*bad));
    }
    out << write_flat_map(map);
  } else if (bad) {
    out << "VIOLATION: " << one_based(*bad) << '\n';
  } else {
    out << "OK\n";
  }
  return bad ? kNegative : kPositive;
}

int cmd_classify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  SymmetricMatrix a = load_matrix(cfg);
  OrderingClassReport report = classify(a);
  if (report.peo_witness && !is_peo(a, *report.peo_witness)) {
    return kInternal;
  }
  if (report.weighted_chordless_cycle &&
      !is_weighted_chordless_cycle(a, *report.weighted_chordless_cycle)) {
    return kInternal;
  }
  if (!report.implications_hold()) {
    return kInternal;
  }
  std::optional<Walk> single;
  const bool searched = a.size() >= 2 && a.size() <= kWalkOracleCap;
  if (searched) {
    single = find_self_contained_walk_bruteforce(a, cfg.max_len.value_or(default_walk_cap(a.size())));
  }
  std::string single_text = !searched ? "unknown" : single ? format_walk(*single) : "none";
  if (cfg.machine) {
    FlatMap map = to_flat_map(report);
    map.emplace_back("self_contained_walk", single_text);
    out << write_flat_map(map);
  } else {
    out << format_report(report);
    out << "single self-contained walk: " << single_text << '\n';
  }
  return kPositive;
}

int cmd_power(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Graph g = load_graph(cfg);
  PowerEquivalenceReport equivalence = check_power_equivalence(g);
  PowerChordalityReport powers = power_chordality_check(g, cfg.k_max);
  if (cfg.machine) {
    out << write_flat_map(to_flat_map(equivalence, powers));
  } else {
    out << format_report(equivalence, powers);
  }
  if (!equivalence.consistent() || !powers.consistent()) {
    err << "error: proven-equivalent flags disagree\n";
    return kInternal;
  }
  return kPositive;
}

int cmd_selftest(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(cfg.seed);
  std::size_t positives = 0;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    SymmetricMatrix a = random_matrix(rng);
    Certificate cert = extract_certificate(a);
    const bool greedy = greedy_peo(a).has_value();
    if (!is_valid_certificate(a, cert) || greedy != std::holds_alternative<LinearOrder>(cert)) {
      err << "error: disagreement on instance " << i << ":\n" << serialize_matrix(a);
      return kInternal;
    }
    positives += greedy;
  }
  if (cfg.machine) {
    out << write_flat_map({{"seed", std::to_string(cfg.seed)},
                           {"instances", std::to_string(cfg.count)},
                           {"with_peo", std::to_string(positives)},
                           {"result", "ok"}});
  } else {
    out << "selftest: " << cfg.count << " instances, " << positives
        << " with a PEO, all certificates valid\n";
  }
  return kPositive;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "order") {
      return cmd_order(cfg, out, err);
    }
    if (cfg.subcommand == "check") {
      return cmd_check(cfg, out, err);
    }
    if (cfg.subcommand == "classify") {
      return cmd_classify(cfg, out, err);
    }
    if (cfg.subcommand == "power") {
      return cmd_power(cfg, out, err);
    }
    if (cfg.subcommand == "selftest") {
      return cmd_selftest(cfg, out, err);
    }
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // covers InternalConsistencyError, but invalid_argument and length_error
    // come from bad input
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::length_error*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect elimination orderings of symmetric matrices"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format;
  std::size_t max_len = 0;

  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"matrix", "graph"}));
  app.add_flag("--machine", cfg.machine, "Emit key=value output");
  app.add_option("--max-len", max_len, "Walk length cap for the brute-force oracle")
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));
  app.add_option("--seed", cfg.seed, "Seed for randomized runs");
  app.add_option("--kmax", cfg.k_max, "Largest graph power examined")
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));

  auto* order = app.add_subcommand("order", "Print a PEO or a forbidden certificate");
  order->add_option("input", cfg.input, "Matrix file")->required();
  auto* check = app.add_subcommand("check", "Check an order against a class condition");
  check->add_option("input", cfg.input, "Matrix file")->required();
  check->add_option("order", cfg.order, "1-based order, e.g. \"4 2 1 3\"")->required();
  check->add_option("--class", cfg.order_class, "peo, robinson, interval or cocomparability")
      ->check(CLI::IsMember({"peo", "robinson", "interval", "cocomparability"}));
  auto* classify = app.add_subcommand("classify", "Report ordering classes of a matrix");
  classify->add_option("input", cfg.input, "Matrix file")->required();
  auto* power = app.add_subcommand("power", "Chordality of graph powers and -D_G");
  power->add_option("input", cfg.input, "Graph file")->required();
  auto* selftest = app.add_subcommand("selftest", "Random cross-check of the extractor");
  selftest->add_option("--count", cfg.count, "Number of random instances");

  // global options are accepted after the subcommand as well
  for (auto* sub : {order, check, classify, power, selftest}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!format.empty()) {
    cfg.format = format == "graph" ? InputFormat::graph : InputFormat::matrix;
  }
  if (max_len) {
    cfg.max_len = max_len;
  }
  return dispatch(cfg, out, err);
}

}  // namespace peo::tools
