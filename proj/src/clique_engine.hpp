#pragma once

#include "ctxgraph/vertex_set.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

namespace ctxgraph::detail {

/// Wall-clock budget shared by cooperating searches.
class Deadline {
public:
  Deadline() = default;
  explicit Deadline(double seconds);

  bool expired() const;
  void cancel() { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return cancelled_.load(std::memory_order_relaxed); }

private:
  std::optional<std::chrono::steady_clock::time_point> until_;
  std::atomic<bool> cancelled_{false};
};

/// Best clique found so far; the size only grows.
class Incumbent {
public:
  explicit Incumbent(std::size_t floor = 0) : size_(floor) {}

  std::size_t size() const { return size_.load(std::memory_order_relaxed); }
  /// Records `clique` if it beats the current size.
  bool offer(const std::vector<int> &clique);
  std::vector<int> clique() const;

private:
  std::atomic<std::size_t> size_;
  mutable std::mutex mutex_;
  std::vector<int> clique_;
};

/// Colour-bounded branch and bound over bitset rows (MCQ style): candidates
/// are greedily coloured in index order and branched on highest colour
/// first, so vertex order equals tie-breaking order.
class CliqueEngine {
public:
  CliqueEngine(const std::vector<VertexSet> &rows, Incumbent &incumbent, Deadline &deadline)
      : rows_(rows), incumbent_(incumbent), deadline_(deadline) {}

  /// Extends `current` by vertices of `candidates`. Returns false when the
  /// deadline stopped the search.
  bool expand(std::vector<int> &current, VertexSet candidates);

  /// Greedy colour classes of `p`: vertex order and running colour number.
  void colour(const VertexSet &p, std::vector<int> &order, std::vector<int> &colours) const;

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  bool tick();

  const std::vector<VertexSet> &rows_;
  Incumbent &incumbent_;
  Deadline &deadline_;
  std::uint64_t nodes_ = 0;
};

/// Size of a largest clique inside `candidates`, no deadline.
std::size_t clique_size_within(const std::vector<VertexSet> &rows, const VertexSet &candidates,
                               std::vector<int> *witness = nullptr);

} // namespace ctxgraph::detail
