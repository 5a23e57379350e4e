#include "ctxgraph/vertex_set.hpp"

#include "ctxgraph/error.hpp"

namespace ctxgraph {

const char *to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::invalid_parameter:
    return "invalid-parameter";
  case ErrorKind::invalid_input:
    return "invalid-input";
  case ErrorKind::resource_cap:
    return "resource-cap";
  case ErrorKind::unbounded:
    return "unbounded";
  }
  return "error";
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto &w : s.words_) w = ~Word{0};
  if (const std::size_t tail = universe % word_bits; tail != 0)
    s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::any() const noexcept {
  for (Word w : words_)
    if (w != 0) return true;
  return false;
}

std::size_t VertexSet::next(std::size_t from) const noexcept {
  if (from >= universe_) return universe_;
  std::size_t w = from / word_bits;
  Word bits = words_[w] & (~Word{0} << (from % word_bits));
  while (true) {
    if (bits != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

VertexSet &VertexSet::operator&=(const VertexSet &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t VertexSet::intersection_count(const VertexSet &other) const noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

} // namespace ctxgraph
