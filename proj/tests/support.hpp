#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pig/graph.hpp"

namespace pigtest {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline pig::EmbeddedGraph fixture(const std::string& name) {
  return pig::parse_rotation_graph(slurp(std::string(PIG_FIXTURES) + "/" + name + ".rot"));
}

// Connectivity of g minus `removed`, by plain DFS over adjacency.
inline int component_count_without(const pig::EmbeddedGraph& g, const std::vector<pig::Vertex>& removed) {
  std::vector<char> gone(g.capacity(), 0), seen(g.capacity(), 0);
  for (auto v : removed) gone[v] = 1;
  int comps = 0;
  for (pig::Vertex s = 0; s < g.capacity(); ++s) {
    if (!g.alive(s) || gone[s] || seen[s]) continue;
    ++comps;
    std::vector<pig::Vertex> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      for (auto u : g.rotation(v))
        if (!gone[u] && !seen[u]) {
          seen[u] = 1;
          st.push_back(u);
        }
    }
  }
  return comps;
}

// Exhaustive independence number, for n <= ~22.
inline int brute_alpha(const pig::EmbeddedGraph& g) {
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::vector<unsigned> nb(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(vs[i], vs[j])) nb[i] |= 1u << j;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if ((mask >> i & 1u) && (nb[i] & mask)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline bool independent_in(const pig::EmbeddedGraph& g, const std::vector<pig::Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.alive(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  }
  return true;
}

}  // namespace pigtest

namespace pigtest {

// Hub 0 with rim 1..d in clockwise order; rim vertex j is padded with leaves
// in the outer face until it reaches degree degs[j-1]. Only the degrees seen
// from the hub are realistic, which is all the local rules look at.
inline pig::EmbeddedGraph wheel(const std::vector<int>& degs) {
  const int d = static_cast<int>(degs.size());
  std::vector<std::vector<pig::Vertex>> rot(1 + d);
  for (int j = 1; j <= d; ++j) rot[0].push_back(j);
  for (int j = 1; j <= d; ++j) {
    int prev = j == 1 ? d : j - 1, next = j == d ? 1 : j + 1;
    rot[j] = {0, prev};
    for (int k = 3; k < degs[j - 1]; ++k) {
      pig::Vertex leaf = static_cast<pig::Vertex>(rot.size());
      rot.push_back({j});
      rot[j].push_back(leaf);
    }
    rot[j].push_back(next);
  }
  return pig::EmbeddedGraph::from_rotations(std::move(rot));
}

}  // namespace pigtest

namespace pigtest {

// Disjoint union of embedded graphs, ids shifted in order.
inline pig::EmbeddedGraph disjoint_union(const std::vector<pig::EmbeddedGraph>& parts) {
  std::vector<std::vector<pig::Vertex>> rot;
  for (const auto& g : parts) {
    auto vs = g.vertices();
    std::vector<pig::Vertex> id(g.capacity(), -1);
    const auto base = rot.size();
    for (std::size_t i = 0; i < vs.size(); ++i) id[vs[i]] = static_cast<pig::Vertex>(base + i);
    rot.resize(base + vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (auto u : g.rotation(vs[i])) rot[base + i].push_back(id[u]);
  }
  return pig::EmbeddedGraph::from_rotations(std::move(rot));
}

}  // namespace pigtest
