#pragma once

// Brute-force component count of a pretzel link, read off an explicit
// crossing-level diagram. Shares no code with the library.
//
// Column i is a vertical stack of |q_i| crossings; the twist term is a
// horizontal row of |e| crossings. Blocks sit around a circle, joined
// top-right to top-left and bottom-right to bottom-left. Every crossing has
// ports NW, NE, SE, SW and strands run straight through (NW-SE, NE-SW).
// Components are the connected classes of ports under arcs plus
// through-passages.

#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

class PortGraph {
 public:
  enum Port { kNW = 0, kNE = 1, kSE = 2, kSW = 3 };

  int add_crossing() {
    const int c = static_cast<int>(parent_.size()) / 4;
    for (int i = 0; i < 4; ++i) parent_.push_back(static_cast<int>(parent_.size()));
    join(port(c, kNW), port(c, kSE));
    join(port(c, kNE), port(c, kSW));
    return c;
  }

  static int port(int crossing, Port p) { return 4 * crossing + p; }

  void join(int a, int b) { parent_[find(a)] = find(b); }

  int classes() {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) count += find(i) == i;
    return count;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  std::vector<int> parent_;
};

struct Block {
  int top_left, top_right, bottom_left, bottom_right;
};

inline Block vertical_column(PortGraph& g, long long q) {
  const long long m = std::llabs(q);
  int first = g.add_crossing();
  int prev = first;
  for (long long j = 1; j < m; ++j) {
    int c = g.add_crossing();
    g.join(PortGraph::port(prev, PortGraph::kSW), PortGraph::port(c, PortGraph::kNW));
    g.join(PortGraph::port(prev, PortGraph::kSE), PortGraph::port(c, PortGraph::kNE));
    prev = c;
  }
  return {PortGraph::port(first, PortGraph::kNW), PortGraph::port(first, PortGraph::kNE),
          PortGraph::port(prev, PortGraph::kSW), PortGraph::port(prev, PortGraph::kSE)};
}

inline Block horizontal_row(PortGraph& g, long long e) {
  const long long m = std::llabs(e);
  int first = g.add_crossing();
  int prev = first;
  for (long long j = 1; j < m; ++j) {
    int c = g.add_crossing();
    g.join(PortGraph::port(prev, PortGraph::kNE), PortGraph::port(c, PortGraph::kNW));
    g.join(PortGraph::port(prev, PortGraph::kSE), PortGraph::port(c, PortGraph::kSW));
    prev = c;
  }
  return {PortGraph::port(first, PortGraph::kNW), PortGraph::port(prev, PortGraph::kNE),
          PortGraph::port(first, PortGraph::kSW), PortGraph::port(prev, PortGraph::kSE)};
}

// qs must be nonempty with every |q| >= 1.
inline int pretzel_components(const std::vector<long long>& qs, long long e) {
  PortGraph g;
  std::vector<Block> blocks;
  for (long long q : qs) blocks.push_back(vertical_column(g, q));
  if (e != 0) blocks.push_back(horizontal_row(g, e));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& a = blocks[i];
    const Block& b = blocks[(i + 1) % blocks.size()];
    g.join(a.top_right, b.top_left);
    g.join(a.bottom_right, b.bottom_left);
  }
  return g.classes();
}

}  // namespace oracle
