#include "pmlg/matcher.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pmlg {

namespace detail {

StateSpace build_state_space(const LabeledGraph& g) {
  StateSpace space;
  const int n = g.node_count();
  space.chain_start.resize(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    space.chain_start[v + 1] = space.chain_start[v] + static_cast<int>(g.label(v).size());
  }
  const int total = space.chain_start[n];
  space.state_node.resize(total);
  space.symbols.resize(total);
  for (int v = 0; v < n; ++v) {
    const std::string& l = g.label(v);
    for (size_t t = 0; t < l.size(); ++t) {
      space.state_node[space.chain_start[v] + t] = v;
      space.symbols[space.chain_start[v] + t] = l[t];
    }
  }

  auto adj = g.out_neighbors();
  space.succ_offset.assign(total + 1, 0);
  for (int v = 0; v < n; ++v) {
    const int len = space.chain_start[v + 1] - space.chain_start[v];
    for (int t = 0; t < len; ++t) {
      const int s = space.chain_start[v] + t;
      space.succ_offset[s + 1] = t + 1 < len ? 1 : static_cast<int>(adj[v].size());
    }
  }
  for (int s = 0; s < total; ++s) space.succ_offset[s + 1] += space.succ_offset[s];
  space.succ.resize(space.succ_offset[total]);
  for (int v = 0; v < n; ++v) {
    const int len = space.chain_start[v + 1] - space.chain_start[v];
    for (int t = 0; t < len; ++t) {
      const int s = space.chain_start[v] + t;
      int at = space.succ_offset[s];
      if (t + 1 < len) {
        space.succ[at] = s + 1;
      } else {
        for (int w : adj[v]) space.succ[at++] = space.chain_start[w];
      }
    }
  }
  return space;
}

std::vector<std::uint8_t> initial_layer(const StateSpace& space, char symbol) {
  std::vector<std::uint8_t> layer(space.state_count(), 0);
  for (int s = 0; s < space.state_count(); ++s) layer[s] = space.symbols[s] == symbol;
  return layer;
}

std::vector<std::uint8_t> step_layer(const StateSpace& space,
                                     const std::vector<std::uint8_t>& prev, char symbol) {
  std::vector<std::uint8_t> next(space.state_count(), 0);
  for (int s = 0; s < space.state_count(); ++s) {
    if (!prev[s]) continue;
    for (int i = space.succ_offset[s]; i < space.succ_offset[s + 1]; ++i) {
      const int t = space.succ[i];
      if (space.symbols[t] == symbol) next[t] = 1;
    }
  }
  return next;
}

}  // namespace detail

namespace {

void check_pattern(const LabeledGraph& g, std::string_view pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  (void)g;
}

bool any_set(const std::vector<std::uint8_t>& layer) {
  return std::find(layer.begin(), layer.end(), std::uint8_t{1}) != layer.end();
}

}  // namespace

bool match_exact(const LabeledGraph& g, std::string_view pattern) {
  check_pattern(g, pattern);
  if (g.node_count() == 0) return false;
  auto space = detail::build_state_space(g);
  auto layer = detail::initial_layer(space, pattern[0]);
  if (!any_set(layer)) return false;
  for (size_t i = 1; i < pattern.size(); ++i) {
    layer = detail::step_layer(space, layer, pattern[i]);
    if (!any_set(layer)) return false;
  }
  return true;
}

MatchReport match_exact_report(const LabeledGraph& g, std::string_view pattern) {
  check_pattern(g, pattern);
  MatchReport report;
  if (g.node_count() == 0) return report;
  auto space = detail::build_state_space(g);
  const int S = space.state_count();
  const size_t m = pattern.size();

  std::vector<std::vector<std::uint8_t>> layers;
  layers.reserve(m);
  layers.push_back(detail::initial_layer(space, pattern[0]));
  for (size_t i = 1; i < m; ++i) {
    layers.push_back(detail::step_layer(space, layers.back(), pattern[i]));
  }
  if (!any_set(layers.back())) return report;
  report.matched = true;

  // Predecessor CSR for witness reconstruction.
  std::vector<int> pred_offset(S + 1, 0), pred(space.succ.size());
  for (int t : space.succ) ++pred_offset[t + 1];
  for (int s = 0; s < S; ++s) pred_offset[s + 1] += pred_offset[s];
  {
    std::vector<int> fill(pred_offset.begin(), pred_offset.end() - 1);
    for (int s = 0; s < S; ++s) {
      for (int i = space.succ_offset[s]; i < space.succ_offset[s + 1]; ++i) {
        pred[fill[space.succ[i]]++] = s;
      }
    }
  }

  for (int end = 0; end < S; ++end) {
    if (!layers[m - 1][end]) continue;
    std::vector<int> states(m);
    states[m - 1] = end;
    for (size_t i = m - 1; i > 0; --i) {
      int chosen = -1;
      for (int p = pred_offset[states[i]]; p < pred_offset[states[i] + 1]; ++p) {
        if (layers[i - 1][pred[p]]) {
          chosen = pred[p];
          break;
        }
      }
      states[i - 1] = chosen;
    }
    Occurrence occ;
    for (size_t i = 0; i < m; ++i) {
      const int node = space.state_node[states[i]];
      if (i == 0 || node != space.state_node[states[i - 1]] ||
          states[i] != states[i - 1] + 1) {
        occ.nodes.push_back(node);
      }
    }
    occ.offset = states[0] - space.chain_start[space.state_node[states[0]]] + 1;
    occ.end_offset = end - space.chain_start[space.state_node[end]] + 1;
    report.witnesses.push_back(std::move(occ));
  }

  // Occurrence quadruples: per completed end state, the number of distinct
  // start states reaching it, tracked with one bitset of starts per state.
  std::vector<int> start_index(S, -1);
  int start_count = 0;
  for (int s = 0; s < S; ++s) {
    if (layers[0][s]) start_index[s] = start_count++;
  }
  const int words = (start_count + 63) / 64;
  std::vector<std::uint64_t> cur(static_cast<size_t>(S) * words, 0),
      nxt(static_cast<size_t>(S) * words, 0);
  for (int s = 0; s < S; ++s) {
    if (start_index[s] >= 0) {
      cur[static_cast<size_t>(s) * words + start_index[s] / 64] |=
          std::uint64_t{1} << (start_index[s] % 64);
    }
  }
  for (size_t i = 1; i < m; ++i) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int s = 0; s < S; ++s) {
      if (!layers[i - 1][s]) continue;
      const auto* src = &cur[static_cast<size_t>(s) * words];
      for (int e = space.succ_offset[s]; e < space.succ_offset[s + 1]; ++e) {
        const int t = space.succ[e];
        if (space.symbols[t] != pattern[i]) continue;
        auto* dst = &nxt[static_cast<size_t>(t) * words];
        for (int w = 0; w < words; ++w) dst[w] |= src[w];
      }
    }
    cur.swap(nxt);
  }
  for (int s = 0; s < S; ++s) {
    if (!layers[m - 1][s]) continue;
    for (int w = 0; w < words; ++w) {
      report.occurrence_count += std::popcount(cur[static_cast<size_t>(s) * words + w]);
    }
  }
  return report;
}

namespace {

struct BruteForce {
  const LabeledGraph& g;
  std::string_view pattern;
  std::vector<std::vector<int>> adj;

  bool walk(int node, int label_pos, size_t pattern_pos) const {
    const std::string& label = g.label(node);
    if (label[label_pos] != pattern[pattern_pos]) return false;
    if (pattern_pos + 1 == pattern.size()) return true;
    if (label_pos + 1 < static_cast<int>(label.size())) {
      return walk(node, label_pos + 1, pattern_pos + 1);
    }
    for (int w : adj[node]) {
      if (walk(w, 0, pattern_pos + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool match_bruteforce(const LabeledGraph& g, std::string_view pattern) {
  check_pattern(g, pattern);
  if (pattern.size() > 16) {
    throw std::invalid_argument("match_bruteforce is guarded to patterns of length <= 16");
  }
  if (g.node_count() > 64) {
    throw std::invalid_argument("match_bruteforce is guarded to graphs with <= 64 nodes");
  }
  BruteForce bf{g, pattern, g.out_neighbors()};
  for (int v = 0; v < g.node_count(); ++v) {
    for (size_t t = 0; t < g.label(v).size(); ++t) {
      if (bf.walk(v, static_cast<int>(t), 0)) return true;
    }
  }
  return false;
}

}  // namespace pmlg
