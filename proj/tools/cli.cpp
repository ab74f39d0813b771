#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rvc/construction.hpp"
#include "rvc/decomposition.hpp"
#include "rvc/error.hpp"
#include "rvc/generators.hpp"
#include "rvc/graph_io.hpp"
#include "rvc/oracle.hpp"
#include "rvc/records.hpp"
#include "rvc/structure.hpp"
#include "rvc/verification.hpp"

namespace rvc::cli {
namespace {

struct Globals {
  std::string format = "human";
  unsigned jobs = 0;
  bool timings = false;
  OutputFormat output() const { return format == "structured" ? OutputFormat::structured : OutputFormat::human; }
};

// A failure that maps straight to an exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kParseError, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Input {
  Graph graph;
  std::string digest;
};

Input load_graph(const std::string& path, std::ostream& err) {
  std::string bytes = read_file(path);
  try {
    ParsedGraph parsed = parse_graph(bytes);
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return {std::move(parsed.graph), input_digest(bytes)};
  } catch (const ParseError& e) {
    throw Exit{kParseError, path + ": " + e.what()};
  }
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "rvc";
  for (const auto& a : args) s += ' ' + a;
  return s;
}

std::uint64_t budget_or_env(std::uint64_t flag_value, std::uint64_t fallback) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("RVC_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
      : out_(out), err_(err), command_(join(args)) {}

  int decompose(const std::string& path, bool blocks) {
    Input in = load_graph(path, err_);
    RunReport report = make_report(in.digest);
    if (blocks) {
      require(is_connected(in.graph), "input graph is not connected");
      require(in.graph.vertex_count() >= 2, "input graph has fewer than 2 vertices");
      out_ << format_blocks(block_decomposition(in.graph), report, globals.output());
    } else {
      require(is_2_connected(in.graph), "input graph is not 2-connected");
      out_ << format_ear_decomposition(ear_decomposition(in.graph), report, globals.output());
    }
    return kOk;
  }

  int color(const std::string& path, const std::string& method) {
    Input in = load_graph(path, err_);
    const Graph& g = in.graph;
    require(g.vertex_count() >= 1, "input graph is empty");
    require(is_connected(g), "input graph is not connected");
    TwoConnectedOptions options;
    options.jobs = globals.jobs;
    options.node_budget = budget_or_env(0, options.node_budget);

    Coloring c;
    try {
      if (method == "cycle") {
        require(is_cycle_graph(g), "--method cycle needs a cycle graph");
        Coloring base = cycle_coloring(g.vertex_count());
        std::vector<Vertex> order = cycle_order(g);
        c = base;
        for (std::size_t i = 0; i < order.size(); ++i) c.colors[static_cast<std::size_t>(order[i])] = base.colors[i];
      } else if (method == "two-connected") {
        require(is_2_connected(g), "--method two-connected needs a 2-connected graph");
        c = two_connected_coloring(g, options);
      } else if (method == "blocks") {
        require(g.vertex_count() >= 2, "--method blocks needs at least 2 vertices");
        c = block_coloring(g, options);
      } else {
        c = auto_coloring(g, options);
      }
    } catch (const ConstructionError& e) {
      throw Exit{kConstructionFailed, std::string("construction failed: ") + e.what()};
    }

    VerifyOptions vo;
    vo.jobs = globals.jobs;
    vo.node_budget = options.node_budget;
    try {
      Certificate cert = verify_rainbow_vc(g, c, RainbowMode::rainbow(), vo);
      if (!cert.verified()) {
        throw Exit{kConstructionFailed, "constructed coloring failed verification at pair (" +
                                            std::to_string(cert.failing_pair->first) + ", " +
                                            std::to_string(cert.failing_pair->second) + ")"};
      }
    } catch (const BudgetExceeded& e) {
      throw Exit{kConstructionFailed, std::string("could not verify constructed coloring: ") + e.what()};
    }
    RunReport report = make_report(in.digest);
    report.parameters.emplace_back("method", method);
    out_ << format_coloring(c, report, globals.output());
    return kOk;
  }

  int verify(const std::string& graph_path, const std::string& coloring_path, bool revised, bool witnesses,
             std::uint64_t node_budget) {
    Input in = load_graph(graph_path, err_);
    std::string bytes = read_file(coloring_path);
    std::vector<Color> colors;
    try {
      colors = parse_coloring(bytes);
    } catch (const ParseError& e) {
      throw Exit{kParseError, coloring_path + ": " + e.what()};
    }
    if (static_cast<int>(colors.size()) != in.graph.vertex_count()) {
      throw Exit{kParseError, "coloring has " + std::to_string(colors.size()) + " entries but the graph has " +
                                  std::to_string(in.graph.vertex_count()) + " vertices"};
    }
    VerifyOptions vo;
    vo.store_witnesses = witnesses;
    vo.jobs = globals.jobs;
    vo.node_budget = budget_or_env(node_budget, kDefaultNodeBudget);
    Certificate cert;
    try {
      cert = verify_rainbow_vc(in.graph, colors, revised ? RainbowMode::revised() : RainbowMode::rainbow(), vo);
    } catch (const BudgetExceeded& e) {
      throw Exit{kInconclusive, std::string("inconclusive: ") + e.what() + "; raise --node-budget"};
    }
    RunReport report = make_report(in.digest);
    report.parameters.emplace_back("coloring_input", input_digest(bytes));
    out_ << format_certificate(cert, report, globals.output());
    if (!cert.verified()) {
      err_ << "no " << (revised ? "revised rainbow" : "rainbow") << " path between " << cert.failing_pair->first
           << " and " << cert.failing_pair->second << '\n';
      return kCounterexample;
    }
    return kOk;
  }

  int exact(const std::string& path, bool revised, int max_n, std::uint64_t node_budget) {
    Input in = load_graph(path, err_);
    require(in.graph.vertex_count() >= 1, "input graph is empty");
    require(is_connected(in.graph), "input graph is not connected");
    SearchBudget budget;
    budget.max_vertices = max_n;
    budget.node_budget = budget_or_env(node_budget, budget.node_budget);
    RainbowMode mode = revised ? RainbowMode::revised() : RainbowMode::rainbow();
    OracleResult result;
    try {
      result = exact_rvc(in.graph, mode, budget);
    } catch (const BudgetExceeded& e) {
      throw Exit{kPrecondition, std::string("over budget: ") + e.what() +
                                    "; raise --max-n or --node-budget (or RVC_NODE_BUDGET) to search further"};
    }
    RunReport report = make_report(in.digest);
    report.parameters.emplace_back("max_n", std::to_string(budget.max_vertices));
    report.parameters.emplace_back("node_budget", std::to_string(budget.node_budget));
    out_ << format_oracle(result, mode, globals.timings, report, globals.output());
    return kOk;
  }

  int table(int max_exact_n, int max_n, std::uint64_t node_budget) {
    require(max_n >= 3, "--max-n must be at least 3");
    SearchBudget budget;
    budget.max_vertices = std::max(budget.max_vertices, max_exact_n);
    budget.node_budget = budget_or_env(node_budget, budget.node_budget);
    std::vector<CycleTableRow> rows;
    try {
      rows = reproduce_cycle_table(max_exact_n, max_n, budget, globals.jobs);
    } catch (const BudgetExceeded& e) {
      throw Exit{kPrecondition, std::string("over budget: ") + e.what() + "; lower --max-exact-n"};
    }
    RunReport report = make_report("");
    report.parameters.emplace_back("max_exact_n", std::to_string(max_exact_n));
    report.parameters.emplace_back("max_n", std::to_string(max_n));
    out_ << format_cycle_table(rows, report, globals.output());
    for (const auto& r : rows) {
      if (!r.agrees()) {
        err_ << "row n=" << r.n << " disagrees with the closed form " << r.closed_form << '\n';
        return kCounterexample;
      }
    }
    return kOk;
  }

  int generate(const std::string& kind, int n, int extra, int blocks, std::uint64_t seed) {
    Graph g;
    if (kind == "two-connected") g = random_2connected(n, extra, seed);
    else if (kind == "ear-built") g = random_2connected(n, extra, seed, GeneratorKind::ear_built);
    else if (kind == "connected") g = random_connected(n, extra, seed);
    else g = random_block_graph(blocks, n, seed);
    out_ << "# command: " << command_ << "\n# seed: " << seed << '\n' << serialize_graph(g);
    return kOk;
  }

  Globals globals;

 private:
  RunReport make_report(std::string digest) const { return {command_, std::move(digest), {}}; }

  static void require(bool ok, const std::string& what) {
    if (!ok) throw Exit{kPrecondition, what};
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string command_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(args, out, err);
  CLI::App app{"Rainbow vertex-connection colorings: construction, verification and exact search", "rvc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", runner.globals.format, "Output format")
      ->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--jobs", runner.globals.jobs, "Worker threads for verification (default: all processors)");
  app.add_flag("--timings", runner.globals.timings, "Include wall-clock timings (reports stop being byte-stable)");

  std::string input, coloring_path, method = "auto", kind = "two-connected";
  bool ears = false, blocks = false, revised = false, witnesses = false;
  int max_n = 11, max_exact_n = 11, table_max_n = 30, gen_n = 20, extra = 5, block_count = 3;
  std::uint64_t node_budget = 0, seed = 0;

  auto* decompose = app.add_subcommand("decompose", "Ear or block decomposition");
  decompose->add_option("input", input, "Edge-list file")->required();
  auto* ears_flag = decompose->add_flag("--ears", ears, "Nonincreasing ear decomposition (2-connected input)");
  decompose->add_flag("--blocks", blocks, "Blocks and cut vertices")->excludes(ears_flag);

  auto* color = app.add_subcommand("color", "Construct and verify a rainbow vertex-coloring");
  color->add_option("input", input, "Edge-list file")->required();
  color->add_option("--method", method, "auto | cycle | two-connected | blocks")
      ->check(CLI::IsMember({"auto", "cycle", "two-connected", "blocks"}));

  auto* verify = app.add_subcommand("verify", "Check a coloring and print a certificate");
  verify->add_option("graph", input, "Edge-list file")->required();
  verify->add_option("coloring", coloring_path, "Coloring record or list of color ids")->required();
  verify->add_flag("--revised", revised, "Check revised rainbow paths");
  verify->add_flag("--witnesses", witnesses, "Print a witness path per pair");
  verify->add_option("--node-budget", node_budget, "Search node budget per pair");

  auto* exact = app.add_subcommand("exact", "Exact rvc by exhaustive search");
  exact->add_option("input", input, "Edge-list file")->required();
  exact->add_flag("--revised", revised, "Compute the revised value");
  exact->add_option("--max-n", max_n, "Refuse graphs with more vertices");
  exact->add_option("--node-budget,--seed-budget", node_budget, "Search node budget");

  auto* table = app.add_subcommand("table", "Cycle table: construction vs exact vs closed form");
  table->add_option("--max-exact-n", max_exact_n, "Largest n checked by exact search");
  table->add_option("--max-n", table_max_n, "Largest n constructed");
  table->add_option("--node-budget", node_budget, "Search node budget per row");

  auto* generate = app.add_subcommand("generate", "Write a seeded random graph");
  generate->add_option("--kind", kind, "two-connected | ear-built | connected | blocks")
      ->check(CLI::IsMember({"two-connected", "ear-built", "connected", "blocks"}));
  generate->add_option("-n,--n", gen_n, "Vertices (blocks: largest block order)");
  generate->add_option("--extra", extra, "Extra edges");
  generate->add_option("--blocks", block_count, "Number of blocks (--kind blocks)");
  generate->add_option("--seed", seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  if (runner.globals.jobs == 0) runner.globals.jobs = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (*decompose) {
      if (!ears && !blocks) throw Exit{kParseError, "decompose needs --ears or --blocks"};
      return runner.decompose(input, blocks);
    }
    if (*color) return runner.color(input, method);
    if (*verify) return runner.verify(input, coloring_path, revised, witnesses, node_budget);
    if (*exact) return runner.exact(input, revised, max_n, node_budget);
    if (*table) return runner.table(max_exact_n, table_max_n, node_budget);
    if (*generate) return runner.generate(kind, gen_n, extra, block_count, seed);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kConstructionFailed;
  }
  return kParseError;
}

}  // namespace rvc::cli
