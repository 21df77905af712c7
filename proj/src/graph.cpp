#include "prereq/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prereq/error.hpp"

namespace prereq {

std::string to_string(const PrerequisiteLink& link) { return link.source + "->" + link.target; }

std::string format_cycle(const std::vector<std::string>& cycle) {
  std::string out;
  for (const auto& node : cycle) {
    if (!out.empty()) out += " -> ";
    out += node;
  }
  return out;
}

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency build_adjacency(const ConceptGraph& g) {
  Adjacency adj;
  for (const auto& n : g.nodes) adj[n];
  for (const auto& e : g.edges) {
    adj[e.source].push_back(e.target);
    adj[e.target];
  }
  for (auto& [_, succ] : adj) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return adj;
}

enum class Mark { White, Grey, Black };

struct CycleSearch {
  const Adjacency& adj;
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;

  std::optional<std::vector<std::string>> visit(const std::string& node) {
    mark[node] = Mark::Grey;
    stack.push_back(node);
    for (const auto& next : adj.at(node)) {
      if (mark[next] == Mark::Grey) {
        auto start = std::find(stack.begin(), stack.end(), next);
        std::vector<std::string> cycle(start, stack.end());
        cycle.push_back(next);
        return cycle;
      }
      if (mark[next] == Mark::White) {
        if (auto found = visit(next)) return found;
      }
    }
    stack.pop_back();
    mark[node] = Mark::Black;
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<std::string>> find_cycle(const ConceptGraph& g) {
  const Adjacency adj = build_adjacency(g);
  CycleSearch search{adj, {}, {}};
  for (const auto& [node, _] : adj) search.mark[node] = Mark::White;
  for (const auto& [node, _] : adj) {
    if (search.mark[node] != Mark::White) continue;
    if (auto found = search.visit(node)) return found;
  }
  return std::nullopt;
}

std::vector<std::vector<std::string>> topological_levels(const ConceptGraph& g) {
  const Adjacency adj = build_adjacency(g);
  std::map<std::string, int> indegree;
  for (const auto& [node, _] : adj) indegree[node];
  for (const auto& [_, succ] : adj) {
    for (const auto& next : succ) ++indegree[next];
  }

  // Kahn's algorithm, relaxing the longest-path level of each successor.
  std::map<std::string, std::size_t> level;
  std::vector<std::string> ready;
  for (const auto& [node, deg] : indegree) {
    if (deg == 0) ready.push_back(node);
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    const std::string node = ready.back();
    ready.pop_back();
    ++processed;
    for (const auto& next : adj.at(node)) {
      level[next] = std::max(level[next], level[node] + 1);
      if (--indegree[next] == 0) ready.push_back(next);
    }
  }
  if (processed != adj.size()) {
    std::string message = "graph contains a cycle";
    if (auto cycle = find_cycle(g)) message += ": " + format_cycle(*cycle);
    throw Error(ErrorCode::GraphCyclic, message);
  }

  std::vector<std::vector<std::string>> levels;
  for (const auto& [node, _] : adj) {
    const std::size_t l = level[node];
    if (levels.size() <= l) levels.resize(l + 1);
    levels[l].push_back(node);
  }
  return levels;  // map iteration already yields each level sorted
}

}  // namespace prereq
