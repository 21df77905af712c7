#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace prereq {

/// Directed edge source -> target: source must be learned before target.
struct PrerequisiteLink {
  std::string source;
  std::string target;

  PrerequisiteLink flipped() const { return {target, source}; }

  friend bool operator==(const PrerequisiteLink&, const PrerequisiteLink&) = default;
  friend auto operator<=>(const PrerequisiteLink&, const PrerequisiteLink&) = default;
};

std::string to_string(const PrerequisiteLink& link);

struct ConceptGraph {
  std::vector<std::string> nodes;
  std::vector<PrerequisiteLink> edges;
};

/// Witness cycle as an ordered node list whose first and last entries are
/// equal, or nullopt when the graph is acyclic. Nodes and successors are
/// explored in lexicographic order, so the witness is stable.
std::optional<std::vector<std::string>> find_cycle(const ConceptGraph& g);

/// Longest-path layering: a node's level is the length of the longest path
/// ending at it. Each level is sorted; concatenated levels form a
/// topological order. Throws GraphCyclic on a cyclic graph.
std::vector<std::vector<std::string>> topological_levels(const ConceptGraph& g);

std::string format_cycle(const std::vector<std::string>& cycle);

}  // namespace prereq
