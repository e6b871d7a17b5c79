#pragma once

#include <string>
#include <vector>

namespace idnc {

/// Vertex-weighted undirected graph. Vertices are dense 0-based indices;
/// adjacency is irreflexive and symmetric. Weights may be negative.
class WeightedGraph {
 public:
  int add_vertex(double weight, std::string label = {});
  void add_edge(int u, int v);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const;

  /// Adjacency row of v as packed 64-bit words (size() bits).
  const std::vector<std::uint64_t>& adjacency_row(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  /// Plain-text edge-list dump for fixture capture: one header line with the
  /// vertex count, one line per vertex (id, weight, label), one line per edge.
  std::string edge_list_dump() const;

 private:
  std::vector<double> weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

/// A clique with its total weight; members are sorted ascending.
struct Clique {
  std::vector<int> members;
  double weight = 0.0;
};

/// Exact maximum-weight clique. The empty clique (weight 0) is a legal answer
/// and wins when no non-empty clique has positive weight. Ties are broken
/// toward the lexicographically smallest member sequence, a proper prefix
/// ordering before its extensions.
Clique max_weight_clique(const WeightedGraph& graph);

/// Exhaustive oracle with the same tie-break. Rejects graphs above 25
/// vertices.
Clique brute_force_clique(const WeightedGraph& graph);

}  // namespace idnc
