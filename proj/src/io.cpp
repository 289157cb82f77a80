#include "mutvis/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mutvis/errors.hpp"

namespace mutvis {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

bool parse_count(std::string_view word, long long& value) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  return ec == std::errc() && ptr == word.data() + word.size() && value >= 0 &&
         value <= 100'000'000;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long declared = -1;
  bool seen_content = false;
  long long max_id = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    if (!seen_content && words[0] == "n") {
      seen_content = true;
      if (words.size() != 2 || !parse_count(words[1], declared)) {
        fail("header must read 'n <count>'");
      }
      continue;
    }
    seen_content = true;
    long long u, v;
    if (words.size() != 2 || !parse_count(words[0], u) || !parse_count(words[1], v)) {
      fail("expected two non-negative integers");
    }
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    if (declared >= 0 && (u >= declared || v >= declared)) {
      fail("vertex id outside [0, " + std::to_string(declared) + ")");
    }
    max_id = std::max({max_id, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  const long long n = declared >= 0 ? declared : max_id + 1;
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_decomposition_dot(const DirectedDecomposition& dd, std::ostream& out) {
  const MarkedGraph& d = dd.base();
  auto name = [&](int v) {
    return (d.is_marked(v) ? "m" : "v") + std::to_string(v);
  };
  out << "digraph decomposition {\n";
  out << "  compound=true;\n  edge [dir=none];\n";
  for (const Bag& b : d.bags()) {
    out << "  subgraph cluster_bag" << b.id << " {\n";
    out << "    label=\"bag " << b.id << " (" << to_string(b.type) << ")\";\n";
    out << "    color=red;\n";
    for (int v : b.members) {
      out << "    " << name(v);
      if (d.is_marked(v)) {
        out << " [label=\"\", shape=circle, style=filled, fillcolor=grey, width=0.2]";
      } else if (dd.is_sigma(v)) {
        out << " [label=\"" << v << " (sigma)\", peripheries=2]";
      } else {
        out << " [label=\"" << v << "\"]";
      }
      out << ";\n";
    }
    for (int u : b.members) {
      for (int v : b.members) {
        if (u < v && d.unmarked_adjacent(u, v)) out << "    " << name(u) << " -> " << name(v) << ";\n";
      }
    }
    out << "  }\n";
  }
  for (const Arrow& a : dd.arrows()) {
    out << "  " << name(a.tail) << " -> " << name(a.head) << " [style=bold, dir=forward];\n";
  }
  for (int e : dd.plain_marked_edges()) {
    auto [u, v] = d.marked_edges()[e];
    out << "  " << name(u) << " -> " << name(v) << " [style=bold];\n";
  }
  out << "}\n";
}

void write_tree_dot(const DirectedDecomposition& dd, std::ostream& out) {
  const MarkedGraph& d = dd.base();
  out << "digraph tree {\n  edge [dir=none];\n";
  for (const Bag& b : d.bags()) {
    bool sigma = b.type == BagType::Star && !d.is_marked(b.center);
    out << "  b" << b.id << " [label=\"" << (sigma ? "sigma" : to_string(b.type))
        << b.members.size() << "\"];\n";
  }
  std::vector<int> arrows_on(d.marked_edges().size(), 0);
  for (const Arrow& a : dd.arrows()) {
    ++arrows_on[a.marked_edge];
    out << "  b" << d.bag_of(a.tail) << " -> b" << d.bag_of(a.head) << " [dir=forward];\n";
  }
  for (std::size_t e = 0; e < d.marked_edges().size(); ++e) {
    if (arrows_on[e]) continue;
    auto [u, v] = d.marked_edges()[e];
    out << "  b" << d.bag_of(u) << " -> b" << d.bag_of(v) << " [label=\"" << to_string(d.end_type(u))
        << to_string(d.end_type(v)) << "\"];\n";
  }
  out << "}\n";
}

}  // namespace mutvis
