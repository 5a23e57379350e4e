#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctxgraph {

/// Fixed-universe bitset over vertices 0..size()-1. All set algebra is
/// word-parallel; bits past size() are always zero.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word *data() const noexcept { return words_.data(); }
  Word *data() noexcept { return words_.data(); }

  bool test(std::size_t v) const noexcept {
    return (words_[v / word_bits] >> (v % word_bits)) & 1U;
  }
  void set(std::size_t v) noexcept { words_[v / word_bits] |= Word{1} << (v % word_bits); }
  void reset(std::size_t v) noexcept { words_[v / word_bits] &= ~(Word{1} << (v % word_bits)); }

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// First member at or after `from`, or universe() when there is none.
  std::size_t next(std::size_t from) const noexcept;
  std::size_t first() const noexcept { return next(0); }

  std::vector<int> members() const;

  VertexSet &operator&=(const VertexSet &other) noexcept;
  VertexSet &operator|=(const VertexSet &other) noexcept;
  /// Set difference.
  VertexSet &operator-=(const VertexSet &other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet &b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) noexcept { return a -= b; }

  /// |this ∩ other| without materialising the intersection.
  std::size_t intersection_count(const VertexSet &other) const noexcept;

  bool operator==(const VertexSet &other) const = default;

  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<int>(w * word_bits + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

} // namespace ctxgraph
