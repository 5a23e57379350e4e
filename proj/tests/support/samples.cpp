#include "samples.hpp"

namespace oracle {

std::vector<Graph> weak_perfect_sample() {
  std::mt19937_64 rng(2024);
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_graph(rng, 1 + i % 10, 0.1 + 0.8 * ((i * 37) % 100) / 100.0));
  return out;
}

std::vector<Graph> berge_sample() {
  std::mt19937_64 rng(2025);
  std::vector<Graph> out;
  for (int i = 0; i < 100; ++i) out.push_back(random_graph(rng, 1 + i % 8, 0.3 + 0.4 * ((i * 13) % 10) / 10.0));
  return out;
}

std::vector<Graph> minimal_imperfect_sample() {
  std::mt19937_64 rng(2026);
  std::vector<Graph> out;
  for (int i = 0; i < 500; ++i) {
    if (i % 4 != 3) {
      out.push_back(random_graph(rng, 1 + i % 9, 0.5));
      continue;
    }
    const int n = 5 + 2 * static_cast<int>(rng() % 3);
    Graph base = (i / 4) % 2 ? ctxgraph::anticycle(n) : ctxgraph::cycle(n);
    if ((i / 8) % 2) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = (u + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))) % n;
      base = Graph::from_predicate(static_cast<std::size_t>(n), [&](int a, int b) {
        const bool flip = (a == u && b == v) || (a == v && b == u);
        return base.adjacent(a, b) != flip;
      });
    }
    out.push_back(shuffled(rng, base));
  }
  return out;
}

} // namespace oracle
