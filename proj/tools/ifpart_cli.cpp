// ifpart command-line front end. Talks to the core exclusively through the
// C interface in ifpart.h.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifpart.h"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // UNSAT / property refuted
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "ifpart: " << message << "\n";
  std::exit(code);
}

void check_status(int status) {
  if (status == IFPART_OK) return;
  die(status == IFPART_ERR_PARSE || status == IFPART_ERR_ARG ? kExitUsage
                                                             : kExitUsage,
      ifpart_last_error());
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitUsage, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string take_string(char* raw) {
  std::string out = raw ? raw : "";
  ifpart_string_free(raw);
  return out;
}

std::vector<int> take_ints(int* raw, long long len) {
  std::vector<int> out(raw, raw + len);
  ifpart_ints_free(raw);
  return out;
}

long long node_cap_from_env() {
  const char* value = std::getenv("IFPART_NODE_CAP");
  if (!value || !*value) return 0;  // 0 = library default
  return std::atoll(value);
}

struct GraphInput {
  std::string graph_path = "-";
  std::string format = "graph6";
  std::string assign_path;

  void add_to(CLI::App* app, bool with_assign = true) {
    app->add_option("--graph", graph_path, "graph file, or - for stdin");
    app->add_option("--format", format, "graph6 or edges")
        ->check(CLI::IsMember({"graph6", "edges"}));
    if (with_assign) {
      app->add_option("--assign", assign_path,
                      "label file of \"vertex I|F|U\" lines (default all U)");
    }
  }

  ifpart_graph* load_graph() const {
    ifpart_graph* g = nullptr;
    check_status(ifpart_graph_parse(read_input(graph_path).c_str(),
                                    format == "graph6"
                                        ? IFPART_FORMAT_GRAPH6
                                        : IFPART_FORMAT_EDGE_LIST,
                                    &g));
    return g;
  }

  ifpart_assigned* load_assigned(ifpart_graph* g) const {
    ifpart_assigned* ag = nullptr;
    if (assign_path.empty()) {
      check_status(ifpart_assigned_all_u(g, &ag));
    } else {
      check_status(
          ifpart_assigned_parse(g, read_input(assign_path).c_str(), &ag));
    }
    return ag;
  }
};

std::string rational_string(long long num, long long den) {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int run_mad(const GraphInput& input) {
  ifpart_graph* g = input.load_graph();
  long long num = 0, den = 1, len = 0;
  int* witness = nullptr;
  check_status(ifpart_mad(g, &num, &den, &witness, &len));
  ordered_json doc;
  doc["mad"] = rational_string(num, den);
  doc["witness"] = take_ints(witness, len);
  std::cout << doc.dump() << "\n";
  ifpart_graph_free(g);
  return kExitOk;
}

int run_potential(const GraphInput& input) {
  ifpart_graph* g = input.load_graph();
  ifpart_assigned* ag = input.load_assigned(g);
  long long value = 0, len = 0;
  int* witness = nullptr;
  check_status(ifpart_min_potential(ag, &value, &witness, &len));
  ordered_json doc;
  doc["min"] = value;
  doc["witness"] = take_ints(witness, len);
  std::cout << doc.dump() << "\n";
  ifpart_assigned_free(ag);
  ifpart_graph_free(g);
  return kExitOk;
}

int run_partition(const GraphInput& input) {
  ifpart_graph* g = input.load_graph();
  ifpart_assigned* ag = input.load_assigned(g);
  int outcome = 0;
  int *independent = nullptr, *forest = nullptr;
  long long independent_len = 0, forest_len = 0;
  check_status(ifpart_solve_partition(ag, node_cap_from_env(), &outcome,
                                      &independent, &independent_len, &forest,
                                      &forest_len));
  ordered_json doc;
  doc["sat"] = outcome == IFPART_SAT;
  if (outcome == IFPART_SAT) {
    doc["I"] = take_ints(independent, independent_len);
    doc["F"] = take_ints(forest, forest_len);
  } else if (outcome == IFPART_INCONCLUSIVE) {
    doc["sat"] = nullptr;
    doc["inconclusive"] = true;
  }
  std::cout << doc.dump() << "\n";
  ifpart_assigned_free(ag);
  ifpart_graph_free(g);
  if (outcome == IFPART_INCONCLUSIVE) return kExitInconclusive;
  return outcome == IFPART_SAT ? kExitOk : kExitNegative;
}

int run_starcolor(const GraphInput& input, bool exact, int cap) {
  ifpart_graph* g = input.load_graph();
  int k = 0;
  int* colors = nullptr;
  long long len = 0;
  if (exact) {
    check_status(ifpart_star_chromatic(g, cap, &k, &colors, &len));
  } else {
    int outcome = 0;
    check_status(ifpart_star_four_coloring(g, node_cap_from_env(), &outcome,
                                           &k, &colors, &len));
    if (outcome == IFPART_INCONCLUSIVE) {
      die(kExitInconclusive, "partition search hit the node cap");
    }
    if (outcome == IFPART_UNSAT) {
      die(kExitNegative,
          "no partition into a 2-independent set and a forest exists, so no "
          "coloring can be derived this way");
    }
  }
  ordered_json doc;
  doc["k"] = k;
  doc["colors"] = take_ints(colors, len);
  std::cout << doc.dump() << "\n";
  ifpart_graph_free(g);
  return kExitOk;
}

int run_gadgetize(const GraphInput& input) {
  ifpart_graph* g = input.load_graph();
  ifpart_assigned* ag = input.load_assigned(g);
  ifpart_graph* expanded = nullptr;
  check_status(ifpart_expand_gadgets(ag, &expanded));
  char* text = nullptr;
  check_status(ifpart_graph_to_graph6(expanded, &text));
  std::cout << take_string(text) << "\n";
  ifpart_graph_free(expanded);
  ifpart_assigned_free(ag);
  ifpart_graph_free(g);
  return kExitOk;
}

int run_sharpness(int k) {
  ifpart_graph* g = nullptr;
  check_status(ifpart_sharpness_graph(k, &g));
  char* text = nullptr;
  check_status(ifpart_graph_to_graph6(g, &text));
  std::cout << take_string(text) << "\n";
  ifpart_graph_free(g);
  return kExitOk;
}

int run_discharge(const GraphInput& input) {
  ifpart_graph* g = input.load_graph();
  ifpart_assigned* ag = input.load_assigned(g);
  char* json = nullptr;
  check_status(ifpart_discharge_json(ag, &json));
  std::cout << take_string(json) << "\n";
  ifpart_assigned_free(ag);
  ifpart_graph_free(g);
  return kExitOk;
}

int run_check(const std::string& theorem, int max_n, long long samples,
              std::uint64_t seed, const std::string& dump_prefix) {
  int passed = 0;
  char* json = nullptr;
  check_status(
      ifpart_check_theorem(theorem.c_str(), max_n, samples, seed, &passed, &json));
  std::string report = take_string(json);
  std::cout << report << "\n";
  if (!passed) {
    ordered_json doc = ordered_json::parse(report);
    if (!doc["counterexample"].is_null()) {
      std::ofstream(dump_prefix + ".g6")
          << doc["counterexample"]["graph6"].get<std::string>() << "\n";
      std::ofstream(dump_prefix + ".assign")
          << doc["counterexample"]["assignment"].get<std::string>();
      std::cerr << "ifpart: counterexample written to " << dump_prefix
                << ".g6 / .assign\n";
    }
    return kExitNegative;
  }
  return kExitOk;
}

int run_generate(const std::string& model, int n, long long m,
                 const std::string& target, std::uint64_t seed) {
  ifpart_graph* g = nullptr;
  if (model == "gnm") {
    check_status(ifpart_generate_gnm(n, m, seed, &g));
  } else {
    long long num = 5, den = 2;
    if (!target.empty()) {
      size_t slash = target.find('/');
      num = std::atoll(target.substr(0, slash).c_str());
      den = slash == std::string::npos ? 1
                                       : std::atoll(target.substr(slash + 1).c_str());
    }
    check_status(ifpart_generate_sparse(n, num, den, seed, &g));
  }
  char* text = nullptr;
  check_status(ifpart_graph_to_graph6(g, &text));
  std::cout << take_string(text) << "\n";
  ifpart_graph_free(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact I,F-partition / star-coloring toolkit"};
  app.require_subcommand(1);

  // analyze
  CLI::App* analyze = app.add_subcommand("analyze", "run one analysis");
  analyze->require_subcommand(1);
  GraphInput input;

  CLI::App* cmd_mad =
      analyze->add_subcommand("mad", "exact maximum average degree");
  input.add_to(cmd_mad, false);
  CLI::App* cmd_potential =
      analyze->add_subcommand("potential", "minimum subgraph potential");
  input.add_to(cmd_potential);
  CLI::App* cmd_partition =
      analyze->add_subcommand("partition", "decide I,F-partition existence");
  input.add_to(cmd_partition);
  CLI::App* cmd_starcolor =
      analyze->add_subcommand("starcolor", "star coloring");
  input.add_to(cmd_starcolor, false);
  bool exact = false;
  int star_cap = 0;
  cmd_starcolor->add_flag("--exact", exact,
                          "exhaustive star chromatic number (small graphs)");
  cmd_starcolor->add_option("--cap", star_cap, "vertex cap for --exact");
  CLI::App* cmd_gadgetize = analyze->add_subcommand(
      "gadgetize", "replace I/F labels by forcing gadgets; prints graph6");
  input.add_to(cmd_gadgetize);
  CLI::App* cmd_sharpness = analyze->add_subcommand(
      "sharpness", "threshold-sharpness family member; prints graph6");
  int sharpness_k = 3;
  cmd_sharpness->add_option("--k", sharpness_k, "cycle length (>= 3)");
  CLI::App* cmd_discharge = analyze->add_subcommand(
      "discharge", "threads, configurations, and the discharging trace");
  input.add_to(cmd_discharge);

  // check
  CLI::App* check = app.add_subcommand("check", "property harness");
  std::string theorem;
  int max_n = 10;
  long long samples = 100;
  std::uint64_t seed = 1;
  std::string dump_prefix = "counterexample";
  check->add_option("--theorem", theorem, "property name")->required();
  check->add_option("--n", max_n, "maximum vertex count");
  check->add_option("--samples", samples, "number of generated instances");
  check->add_option("--seed", seed, "master seed");
  check->add_option("--dump", dump_prefix, "counterexample file prefix");

  // generate
  CLI::App* generate = app.add_subcommand("generate", "deterministic graphs");
  std::string model = "gnm";
  int gen_n = 10;
  long long gen_m = 10;
  std::string target;
  std::uint64_t gen_seed = 1;
  generate->add_option("--model", model, "gnm or sparse")
      ->check(CLI::IsMember({"gnm", "sparse"}));
  generate->add_option("--n", gen_n, "vertex count");
  generate->add_option("--m", gen_m, "edge count (gnm)");
  generate->add_option("--target", target, "density target p/q (sparse)");
  generate->add_option("--seed", gen_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_mad->parsed()) return run_mad(input);
  if (cmd_potential->parsed()) return run_potential(input);
  if (cmd_partition->parsed()) return run_partition(input);
  if (cmd_starcolor->parsed()) return run_starcolor(input, exact, star_cap);
  if (cmd_gadgetize->parsed()) return run_gadgetize(input);
  if (cmd_sharpness->parsed()) return run_sharpness(sharpness_k);
  if (cmd_discharge->parsed()) return run_discharge(input);
  if (check->parsed())
    return run_check(theorem, max_n, samples, seed, dump_prefix);
  if (generate->parsed())
    return run_generate(model, gen_n, gen_m, target, gen_seed);
  return kExitUsage;
}
