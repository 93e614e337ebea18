#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pmlg/graph.hpp"

namespace pmlg {

/// A witness walk: consecutive nodes are adjacent (respecting direction),
/// nodes may repeat, and L(nodes[0])[offset..] . L(nodes[1]) . ... .
/// L(nodes.back())[..end_offset] spells the pattern exactly.
/// Offsets are 1-based positions inside the first/last node's label.
struct Occurrence {
  std::vector<int> nodes;
  int offset = 1;
  int end_offset = 1;
};

struct MatchReport {
  bool matched = false;
  /// One witness per (end node, end offset) state that completes the pattern.
  std::vector<Occurrence> witnesses;
  /// Count of distinct (start node, offset, end node, end offset) quadruples
  /// admitting a matching walk.
  std::uint64_t occurrence_count = 0;
};

/// Decision-mode exact matching: true iff the pattern occurs along some walk
/// of the graph. Runs the layered product dynamic program over
/// (node, label offset) states in O(m * (|E| + N)) time with two rolling
/// layers. Pattern symbols absent from the graph alphabet yield no-match.
/// Empty patterns are rejected.
bool match_exact(const LabeledGraph& g, std::string_view pattern);

/// Report mode: additionally reconstructs one witness per completed end
/// state from DP back-links and counts occurrence quadruples.
MatchReport match_exact_report(const LabeledGraph& g, std::string_view pattern);

/// Independent oracle: depth-first enumeration of all walks spelling exactly
/// the pattern, from every start node and label offset. No dynamic
/// programming, no memoization. Guarded to pattern length <= 16 and
/// |V| <= 64.
bool match_bruteforce(const LabeledGraph& g, std::string_view pattern);

namespace detail {

/// Unit-state view of a string-labeled graph: one state per (node, label
/// offset); successors advance inside the label or cross an edge from the
/// label's last position.
struct StateSpace {
  std::vector<int> chain_start;  // size V+1
  std::vector<int> state_node;   // size S
  std::string symbols;           // size S
  std::vector<int> succ_offset;  // CSR, size S+1
  std::vector<int> succ;

  int state_count() const { return static_cast<int>(symbols.size()); }
};

StateSpace build_state_space(const LabeledGraph& g);

/// Layer 0 of the DP: states whose symbol equals the first pattern symbol.
std::vector<std::uint8_t> initial_layer(const StateSpace& space, char symbol);

/// One DP step: states reachable from `prev` whose symbol equals `symbol`.
std::vector<std::uint8_t> step_layer(const StateSpace& space,
                                     const std::vector<std::uint8_t>& prev, char symbol);

}  // namespace detail

}  // namespace pmlg
