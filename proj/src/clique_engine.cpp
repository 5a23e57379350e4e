#include "clique_engine.hpp"

namespace ctxgraph::detail {

Deadline::Deadline(double seconds) {
  if (seconds > 0.0)
    until_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
}

bool Deadline::expired() const {
  if (cancelled()) return true;
  return until_ && std::chrono::steady_clock::now() >= *until_;
}

bool Incumbent::offer(const std::vector<int> &clique) {
  std::lock_guard lock(mutex_);
  if (clique.size() <= size_.load(std::memory_order_relaxed)) return false;
  clique_ = clique;
  size_.store(clique.size(), std::memory_order_relaxed);
  return true;
}

std::vector<int> Incumbent::clique() const {
  std::lock_guard lock(mutex_);
  return clique_;
}

void CliqueEngine::colour(const VertexSet &p, std::vector<int> &order,
                          std::vector<int> &colours) const {
  order.clear();
  colours.clear();
  VertexSet uncoloured = p;
  int k = 0;
  while (uncoloured.any()) {
    ++k;
    VertexSet q = uncoloured;
    for (std::size_t v = q.first(); v < q.universe(); v = q.next(v)) {
      uncoloured.reset(v);
      q -= rows_[v];
      q.reset(v);
      order.push_back(static_cast<int>(v));
      colours.push_back(k);
    }
  }
}

bool CliqueEngine::tick() {
  ++nodes_;
  if ((nodes_ & 1023U) == 0 && deadline_.expired()) {
    deadline_.cancel();
    return false;
  }
  return !deadline_.cancelled();
}

bool CliqueEngine::expand(std::vector<int> &current, VertexSet candidates) {
  if (!tick()) return false;
  std::vector<int> order;
  std::vector<int> colours;
  colour(candidates, order, colours);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (current.size() + static_cast<std::size_t>(colours[i]) <= incumbent_.size()) return true;
    const int v = order[i];
    current.push_back(v);
    VertexSet next = candidates & rows_[static_cast<std::size_t>(v)];
    if (next.none()) {
      if (current.size() > incumbent_.size()) incumbent_.offer(current);
    } else if (!expand(current, std::move(next))) {
      current.pop_back();
      return false;
    }
    current.pop_back();
    candidates.reset(static_cast<std::size_t>(v));
  }
  return true;
}

std::size_t clique_size_within(const std::vector<VertexSet> &rows, const VertexSet &candidates,
                               std::vector<int> *witness) {
  if (candidates.none()) {
    if (witness) witness->clear();
    return 0;
  }
  Incumbent incumbent;
  Deadline deadline;
  CliqueEngine engine(rows, incumbent, deadline);
  std::vector<int> current;
  engine.expand(current, candidates);
  if (witness) *witness = incumbent.clique();
  return incumbent.size();
}

} // namespace ctxgraph::detail
