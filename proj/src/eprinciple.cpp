#include "ctxgraph/eprinciple.hpp"

#include "ctxgraph/error.hpp"
#include "ctxgraph/invariants.hpp"
#include "ctxgraph/product_clique.hpp"
#include "ctxgraph/theta.hpp"

#include <chrono>
#include <cmath>

namespace ctxgraph {

namespace {

int largest_feasible_m(std::size_t n, std::size_t cap) {
  if (n <= 1) return 1 << 20;
  int m = 0;
  std::size_t size = 1;
  while (size <= cap / n) {
    size *= n;
    ++m;
  }
  return m;
}

Transitivity transitivity_of(const Graph &g) {
  return g.vertex_transitive() == Transitivity::unknown ? detect_vertex_transitivity(g)
                                                        : g.vertex_transitive();
}

} // namespace

EValue e_bound(const Graph &g, int m, const EOptions &options) {
  if (m < 1) throw InvalidParameter("e_bound needs m >= 1");
  const std::size_t n = g.order();
  if (n == 0) throw InvalidParameter("e_bound needs a non-empty graph");
  const auto start = std::chrono::steady_clock::now();
  EValue out;
  out.m = m;

  if (transitivity_of(g) != Transitivity::yes) {
    if (m > 1) throw InvalidParameter("e_bound for m > 1 needs a vertex-transitive graph");
    out.p = fractional_packing_lp(g);
    out.value = out.p.to_double();
  } else {
    double size = 1.0;
    for (int i = 0; i < m; ++i) size *= static_cast<double>(n);
    if (size > static_cast<double>(options.vertex_cap))
      throw ResourceCap("G^{*" + std::to_string(m) + "} has " +
                        std::to_string(static_cast<long long>(size)) + " vertices, over the cap of " +
                        std::to_string(options.vertex_cap) + "; largest feasible m is " +
                        std::to_string(largest_feasible_m(n, options.vertex_cap)));
    const Graph vt = g.with_transitivity(Transitivity::yes);
    const PowerCliqueResult r = power_clique(vt, m, {options.budget_seconds});
    if (!r.optimal)
      throw ResourceCap("clique search on G^{*" + std::to_string(m) + "} ran out of its " +
                        std::to_string(static_cast<int>(options.budget_seconds)) +
                        " s budget (best " + std::to_string(r.omega) + ", bound " +
                        std::to_string(r.upper_bound) + ")");
    // The witness must be a clique of the power as built by products.
    const Graph power = disjunctive_power(vt, m, options.vertex_cap);
    if (!power.is_clique(r.clique))
      throw std::logic_error("power clique witness is not a clique");
    out.omega = r.omega;
    Rational::Integer nm = 1;
    for (int i = 0; i < m; ++i) nm *= static_cast<long long>(n);
    out.p = Rational(nm, Rational::Integer(r.omega));
    out.value = static_cast<double>(n) / std::pow(static_cast<double>(r.omega), 1.0 / m);
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

EChain chain_report(const Graph &g, int max_m, const EOptions &options) {
  EChain chain;
  chain.graph = g.label();
  CliqueSearchOptions clique_options;
  clique_options.threads = options.threads;
  chain.nchv = independence_number(g, clique_options);
  chain.quantum = theta(g).value;
  for (int m = 1; m <= max_m; ++m) {
    try {
      chain.e.push_back(e_bound(g, m, options));
    } catch (const Error &e) {
      chain.skipped.push_back({m, e.what()});
    }
  }
  return chain;
}

} // namespace ctxgraph
