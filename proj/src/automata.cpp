#include "sofic/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "sofic/errors.hpp"

namespace sofic {

LabeledGraph trim_essential(const LabeledGraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> in_degree(n, 0), out_degree(n, 0);
  for (const auto &e : g.edges()) {
    ++out_degree[e.source];
    ++in_degree[e.range];
  }
  std::queue<Vertex> doomed;
  for (Vertex v = 0; v < n; ++v)
    if (in_degree[v] == 0 || out_degree[v] == 0) {
      alive[v] = false;
      doomed.push(v);
    }
  while (!doomed.empty()) {
    Vertex v = doomed.front();
    doomed.pop();
    auto drop = [&](Vertex u, std::vector<std::size_t> &degree) {
      if (alive[u] && --degree[u] == 0) {
        alive[u] = false;
        doomed.push(u);
      }
    };
    for (auto k : g.out_edges(v))
      drop(g.edges()[k].range, in_degree);
    for (auto k : g.in_edges(v))
      drop(g.edges()[k].source, out_degree);
  }

  std::vector<Vertex> renumber(n, 0);
  std::vector<std::string> names;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) {
      renumber[v] = static_cast<Vertex>(names.size());
      names.push_back(g.vertex_name(v));
    }
  if (names.empty())
    throw EmptyShiftError();
  std::vector<Edge> edges;
  for (const auto &e : g.edges())
    if (alive[e.source] && alive[e.range])
      edges.push_back({renumber[e.source], renumber[e.range], e.label});
  return LabeledGraph(g.alphabet(), std::move(names), std::move(edges));
}

LabeledGraph make_right_resolving(const LabeledGraph &g) {
  // Explore reachable subsets, then number them in canonical order.
  std::map<VertexSet, std::size_t> seen;
  std::vector<VertexSet> states;
  std::queue<std::size_t> todo;
  auto visit = [&](VertexSet s) {
    auto [it, fresh] = seen.emplace(s, states.size());
    if (fresh) {
      states.push_back(std::move(s));
      todo.push(it->second);
    }
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    visit(VertexSet{v});
  std::vector<std::tuple<std::size_t, std::size_t, Letter>> raw_edges;
  while (!todo.empty()) {
    std::size_t k = todo.front();
    todo.pop();
    for (Letter a = 0; a < g.alphabet().size(); ++a) {
      VertexSet next = g.successors(states[k], a);
      if (next.empty())
        continue;
      visit(next);
      raw_edges.emplace_back(k, seen.at(next), a);
    }
  }

  // std::map iterates in lexicographic order of the sorted index lists.
  std::vector<Vertex> canonical(states.size());
  std::vector<std::string> names;
  for (const auto &[subset, k] : seen) {
    canonical[k] = static_cast<Vertex>(names.size());
    if (subset.size() == 1) {
      names.push_back(g.vertex_name(subset.front()));
      continue;
    }
    std::string name = "{";
    for (std::size_t t = 0; t < subset.size(); ++t) {
      if (t > 0)
        name += ',';
      name += g.vertex_name(subset[t]);
    }
    names.push_back(name + "}");
  }
  std::vector<Edge> edges;
  for (auto [s, r, a] : raw_edges)
    edges.push_back({canonical[s], canonical[r], a});
  return trim_essential(LabeledGraph(g.alphabet(), names, edges));
}

bool language_equal_upto(const LabeledGraph &g1, const LabeledGraph &g2,
                         std::size_t k) {
  for (std::size_t j = 0; j <= k; ++j)
    if (words_of_length(g1, j) != words_of_length(g2, j))
      return false;
  return true;
}

} // namespace sofic
