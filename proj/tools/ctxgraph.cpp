// Command-line front end: analysis, census, orthonormal representations,
// inequality instances and E-principle chains.

#include "ctxgraph/census.hpp"
#include "ctxgraph/eprinciple.hpp"
#include "ctxgraph/error.hpp"
#include "ctxgraph/events.hpp"
#include "ctxgraph/graph_spec.hpp"
#include "ctxgraph/orthorep.hpp"
#include "ctxgraph/report.hpp"
#include "ctxgraph/serialize.hpp"
#include "ctxgraph/theta.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ctxgraph;

namespace {

enum class Format { text, json };

struct Common {
  Format format = Format::text;
  std::size_t max_vertices = clique_vertex_cap;
  double clique_budget_seconds = 0.0;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
};

Graph load_graph(const std::string &arg, std::size_t max_vertices) {
  Graph g = std::filesystem::is_regular_file(arg) ? load_edge_list(arg)
                                                  : parse_graph_spec(arg, std::max<std::size_t>(max_vertices, 1));
  if (g.order() > max_vertices)
    throw ResourceCap(g.label() + " has " + std::to_string(g.order()) +
                      " vertices, over --max-vertices " + std::to_string(max_vertices));
  return g;
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

std::string list(const std::vector<int> &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

void print(const Json &j) { std::cout << j.dump(2) << '\n'; }

template <typename T> std::string or_dash(const std::optional<T> &v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>)
    return *v ? "yes" : "no";
  else
    return std::to_string(*v);
}

void print_text(const AnalysisReport &r) {
  std::cout << "graph              " << r.graph << " (" << r.vertices << " vertices, " << r.edges
            << " edges)\n"
            << "alpha              " << or_dash(r.alpha) << '\n'
            << "omega              " << or_dash(r.omega) << '\n'
            << "chi                " << or_dash(r.chi) << '\n';
  if (r.theta)
    std::cout << "theta              " << fixed(r.theta->value) << " (" << to_string(r.theta->method)
              << ", gap " << r.theta->gap << ")\n";
  std::cout << "perfect            " << or_dash(r.perfect) << '\n'
            << "minimal imperfect  " << or_dash(r.minimal_imperfect) << '\n';
  if (r.hole) std::cout << "odd hole           " << list(r.hole->vertices) << '\n';
  if (r.antihole) std::cout << "odd antihole       " << list(r.antihole->vertices) << '\n';
  if (r.verdict)
    std::cout << "classification     " << to_string(*r.verdict) << " (theta - alpha = "
              << fixed(*r.margin) << ")\n";
  if (r.dimension)
    std::cout << "dimension >=       " << r.dimension->bound << " (" << r.dimension->source << ")\n";
  for (const auto &[name, ms] : r.timings_ms)
    std::cout << "time " << std::left << std::setw(14) << name << fixed(ms, 1) << " ms\n";
  if (!r.incomplete.empty()) std::cout << "incomplete         " << r.incomplete << '\n';
}

void print_text(const CensusReport &r) {
  std::cout << (r.name.empty() ? r.graph : r.name + " (" + r.graph + ")") << '\n';
  for (const auto &c : r.counts) std::cout << "  " << std::left << std::setw(8) << c.target << c.count << '\n';
}

void print_text(const InequalityInstance &inst) {
  std::cout << inst.name() << ": " << inst.events.size() << " events\n";
  for (std::size_t i = 0; i < inst.events.size(); ++i)
    std::cout << "  e" << i + 1 << "  " << to_string(inst.events[i]) << '\n';
  std::cout << "nchv bound     " << inst.nchv_bound << '\n'
            << "quantum bound  " << fixed(inst.quantum_bound.value) << " ("
            << to_string(inst.quantum_bound.method) << ")\n";
}

void print_text(const EChain &chain) {
  std::cout << chain.graph << "\n  NCHV  " << chain.nchv << "\n  Q     " << fixed(chain.quantum, 4) << '\n';
  for (auto it = chain.e.rbegin(); it != chain.e.rend(); ++it)
    std::cout << "  E" << it->m << "    " << fixed(it->value, 4) << "  (p = " << it->p << ")\n";
  for (const auto &s : chain.skipped) std::cout << "  E" << s.m << "    skipped: " << s.reason << '\n';
}

int exit_code(ErrorKind kind) { return kind == ErrorKind::resource_cap ? 2 : 1; }

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Graph-theoretic tools for quantum contextuality"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("CTXGRAPH_FORMAT");
  app.add_option("--max-vertices", common.max_vertices, "Largest graph accepted")
      ->envname("CTXGRAPH_MAX_VERTICES");
  app.add_option("--clique-budget-seconds", common.clique_budget_seconds,
                 "Wall-clock budget for clique searches, 0 for none")
      ->envname("CTXGRAPH_CLIQUE_BUDGET_SECONDS");
  app.add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->envname("CTXGRAPH_THREADS");

  std::string graph_arg;
  bool partial = false;
  auto *analyze = app.add_subcommand("analyze", "Invariants, perfection and contextuality of a graph");
  analyze->add_option("graph", graph_arg, "Graph spec or edge-list file")->required();
  analyze->add_flag("--partial", partial, "Print what was computed when a cap is hit");

  std::string targets;
  auto *census = app.add_subcommand("census", "Count induced odd cycles and antiholes");
  census->add_option("graph", graph_arg, "Graph spec or edge-list file")->required();
  census->add_option("--targets", targets, "Comma list such as C5,Cbar7")->envname("CTXGRAPH_TARGETS");

  auto *table1 = app.add_subcommand("table1", "Census of the four standard scenarios");

  std::string family;
  int n = 0;
  auto *orthorep = app.add_subcommand("orthorep", "Lovasz-optimal orthonormal representation");
  orthorep->add_option("family", family, "cycle or anticycle")
      ->required()
      ->check(CLI::IsMember({"cycle", "anticycle"}));
  orthorep->add_option("n", n, "Number of vertices")->required();

  auto *inequality = app.add_subcommand("inequality", "Events and bounds of an inequality family");
  inequality->add_option("family", family, "chsh, s_cycle or s_anticycle")
      ->required()
      ->check(CLI::IsMember({"chsh", "s_cycle", "s_anticycle"}));
  inequality->add_option("n", n, "Number of events (not for chsh)");

  int max_m = 2;
  bool extended = false;
  auto *eprinciple = app.add_subcommand("eprinciple", "E-principle bounds from disjunctive powers");
  eprinciple->add_option("graph", graph_arg, "Graph spec or edge-list file")->required();
  eprinciple->add_option("--max-m", max_m, "Largest number of copies")
      ->check(CLI::PositiveNumber)
      ->envname("CTXGRAPH_MAX_M");
  eprinciple->add_flag("--extended", extended, "Use the long clique budget")->envname("CTXGRAPH_EXTENDED");

  auto *catalog = app.add_subcommand("catalog", "List the graph spec grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  common.format = format == "json" ? Format::json : Format::text;
  const bool json = common.format == Format::json;

  try {
    if (*analyze) {
      AnalysisOptions options;
      options.max_vertices = common.max_vertices;
      options.clique_budget_seconds = common.clique_budget_seconds;
      options.threads = common.threads;
      options.partial = partial;
      Graph g = std::filesystem::is_regular_file(graph_arg) ? load_edge_list(graph_arg)
                                                            : parse_graph_spec(graph_arg);
      const AnalysisReport r = ctxgraph::analyze(g, options);
      if (!r.consistent()) throw std::logic_error("QCG verdict without a hole or antihole witness");
      json ? print(to_json(r)) : print_text(r);
      return r.incomplete.empty() ? 0 : 2;
    }
    if (*census) {
      const Graph g = load_graph(graph_arg, common.max_vertices);
      const auto list = targets.empty() ? default_census_targets() : parse_census_targets(targets);
      const CensusReport r = run_census(g, list, common.threads);
      json ? print(to_json(r)) : print_text(r);
      return 0;
    }
    if (*table1) {
      const auto reports = table1_census(common.threads);
      if (json) {
        Json out = Json::array();
        for (const auto &r : reports) out.push_back(to_json(r));
        print(out);
      } else {
        for (const auto &r : reports) print_text(r);
      }
      return 0;
    }
    if (*orthorep) {
      const OrthonormalRepresentation rep = family == "cycle" ? build_or_cycle(n) : build_or_anticycle(n);
      const FaithfulnessReport check = verify_faithful(rep);
      const double value = handle_value(rep);
      if (json) {
        Json out = to_json(rep);
        out["verification"] = to_json(check);
        out["handle_value"] = value;
        print(out);
      } else {
        std::cout << rep.target.label() << ": " << rep.size() << " vectors in dimension "
                  << rep.dimension() << '\n';
        for (std::size_t i = 0; i < rep.size(); ++i) {
          std::cout << "  v" << i + 1;
          for (double x : rep.vectors[i]) std::cout << ' ' << std::setw(10) << fixed(x);
          std::cout << '\n';
        }
        std::cout << "handle value  " << fixed(value) << "\nfaithful      "
                  << (check.pass ? "pass" : "fail: " + check.failure) << '\n';
      }
      return check.pass ? 0 : 1;
    }
    if (*inequality) {
      InequalityInstance inst;
      if (family == "chsh")
        inst = build_chsh_events();
      else if (inequality->count("n") == 0)
        throw InvalidParameter(family + " needs the number of events");
      else
        inst = family == "s_cycle" ? build_s_cycle(n) : build_s_anticycle(n);
      json ? print(to_json(inst)) : print_text(inst);
      return 0;
    }
    if (*eprinciple) {
      const Graph g = load_graph(graph_arg, common.max_vertices);
      EOptions options = extended ? EOptions::extended() : EOptions{};
      if (common.clique_budget_seconds > 0) options.budget_seconds = common.clique_budget_seconds;
      options.threads = common.threads;
      const EChain chain = chain_report(g, max_m, options);
      json ? print(to_json(chain)) : print_text(chain);
      return 0;
    }
    if (*catalog) {
      std::cout << "cycle:N            odd or even cycle C_N (N >= 3)\n"
                   "anticycle:N        complement of C_N\n"
                   "complete:N         K_N\n"
                   "circulant:N:a,b    circulant graph Ci_N(a,b,...)\n"
                   "johnson:N:K        Johnson graph J(N,K)\n"
                   "shrikhande         Shrikhande graph\n"
                   "complement(S)      complement of S\n"
                   "product(S,T)       disjunctive product S*T\n"
                   "power(S,M)         M-fold disjunctive power\n"
                   "file:PATH          edge list (vertex count, then 'u v' per line)\n";
      return 0;
    }
  } catch (const Error &e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
