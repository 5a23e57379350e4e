#include "ctxgraph/graph_spec.hpp"

#include "ctxgraph/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ctxgraph {
namespace {

class SpecParser {
public:
  SpecParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  Graph parse() {
    Graph g = spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw InvalidInput("bad graph spec '" + std::string(text_) + "' at offset " +
                       std::to_string(pos_) + ": " + why);
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  int integer() {
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool next_is_digit() const {
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '-');
  }

  Graph spec() {
    if (accept("cycle:")) return cycle(integer());
    if (accept("anticycle:")) return anticycle(integer());
    if (accept("circulant:")) {
      const int n = integer();
      expect(":");
      std::set<int> conns{integer()};
      while (pos_ + 1 < text_.size() && text_[pos_] == ',' &&
             std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0) {
        ++pos_;
        conns.insert(integer());
      }
      return circulant(n, conns);
    }
    if (accept("johnson:")) {
      const int n = integer();
      expect(":");
      return johnson(n, integer());
    }
    if (accept("shrikhande")) return shrikhande();
    if (accept("complete:")) return complete(integer());
    if (accept("complement(")) {
      Graph g = spec();
      expect(")");
      return complement(g);
    }
    if (accept("product(")) {
      Graph a = spec();
      expect(",");
      Graph b = spec();
      expect(")");
      return disjunctive_product(a, b, cap_);
    }
    if (accept("power(")) {
      Graph a = spec();
      expect(",");
      const int m = integer();
      expect(")");
      return disjunctive_power(a, m, cap_);
    }
    if (accept("file:")) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      if (pos_ == start) fail("empty path");
      return load_edge_list(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unknown graph name");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

} // namespace

Graph parse_graph_spec(std::string_view spec, std::size_t product_cap) {
  return SpecParser(spec, product_cap).parse();
}

Graph read_edge_list(std::istream &in, std::string label) {
  std::string line;
  long long n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n) || n < 0)
        throw InvalidInput("line " + std::to_string(lineno) + ": expected vertex count");
    } else {
      long long u = 0, v = 0;
      if (!(row >> u >> v))
        throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v'");
      if (!(0 <= u && u < v && v < n))
        throw InvalidInput("line " + std::to_string(lineno) + ": need 0 <= u < v < n");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (row >> rest) throw InvalidInput("line " + std::to_string(lineno) + ": trailing tokens");
  }
  if (n < 0) throw InvalidInput("edge list has no vertex count");
  return Graph::from_edges(static_cast<std::size_t>(n), edges, std::move(label),
                           Transitivity::unknown, /*reject_duplicates=*/true);
}

Graph load_edge_list(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open edge list '" + path + "'");
  return read_edge_list(in, "file:" + path);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  if (!g.label().empty()) out << "# " << g.label() << '\n';
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace ctxgraph
