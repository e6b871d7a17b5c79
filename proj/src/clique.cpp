#include "idnc/clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace idnc {

int WeightedGraph::add_vertex(double weight, std::string label) {
  int id = size();
  weights_.push_back(weight);
  labels_.push_back(std::move(label));
  std::size_t words = (weights_.size() + 63) / 64;
  for (auto& row : adj_) row.resize(words, 0);
  adj_.emplace_back(words, 0);
  return id;
}

void WeightedGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("graph: self edges are not allowed");
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw std::invalid_argument("graph: edge endpoint out of range");
  }
  adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] |=
      std::uint64_t{1} << (v % 64);
  adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u) / 64] |=
      std::uint64_t{1} << (u % 64);
}

bool WeightedGraph::adjacent(int u, int v) const {
  return (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] >>
          (v % 64)) &
         1;
}

std::string WeightedGraph::edge_list_dump() const {
  std::ostringstream out;
  int edges = 0;
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) ++edges;
    }
  }
  out << "graph " << size() << " " << edges << "\n";
  for (int v = 0; v < size(); ++v) {
    out << "vertex " << v << " " << weight(v);
    if (!label(v).empty()) out << " " << label(v);
    out << "\n";
  }
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out << "edge " << u << " " << v << "\n";
    }
  }
  return out.str();
}

namespace {

using BitRow = std::vector<std::uint64_t>;

int next_member(const BitRow& row, int from) {
  std::size_t w = static_cast<std::size_t>(from) / 64;
  if (w >= row.size()) return -1;
  std::uint64_t cur = row[w] & ~((std::uint64_t{1} << (from % 64)) - 1);
  while (true) {
    if (cur != 0) return static_cast<int>(w) * 64 + std::countr_zero(cur);
    if (++w >= row.size()) return -1;
    cur = row[w];
  }
}

void reset_bit(BitRow& row, int v) {
  row[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

BitRow intersect(const BitRow& a, const BitRow& b) {
  BitRow r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

// Branch-and-bound over non-negative-weight vertices. Negative vertices never
// appear in an optimum: dropping one from any clique raises the weight and
// shortens the member sequence.
class CliqueSearch {
 public:
  explicit CliqueSearch(const WeightedGraph& g) : g_(g) {}

  // Maximum clique weight reachable inside `candidates` (the empty clique
  // counts as 0).
  double max_from(const BitRow& candidates) {
    best_ = 0.0;
    descend(candidates, 0.0);
    return best_;
  }

 private:
  void descend(BitRow pool, double current) {
    if (current > best_) best_ = current;
    double remaining = 0.0;
    for (int v = next_member(pool, 0); v >= 0; v = next_member(pool, v + 1)) {
      remaining += g_.weight(v);
    }
    for (int v = next_member(pool, 0); v >= 0; v = next_member(pool, v + 1)) {
      if (current + remaining <= best_) return;
      reset_bit(pool, v);
      remaining -= g_.weight(v);
      descend(intersect(pool, g_.adjacency_row(v)), current + g_.weight(v));
    }
  }

  const WeightedGraph& g_;
  double best_ = 0.0;
};

constexpr double kTieEps = 1e-9;

}  // namespace

Clique max_weight_clique(const WeightedGraph& graph) {
  std::size_t words = (static_cast<std::size_t>(graph.size()) + 63) / 64;
  BitRow pool(words, 0);
  for (int v = 0; v < graph.size(); ++v) {
    if (graph.weight(v) >= 0.0) {
      pool[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  CliqueSearch search(graph);
  const double target = search.max_from(pool);

  // Greedy lexicographic reconstruction: extend with the smallest vertex that
  // still reaches the target weight; stop as soon as the weight is reached,
  // so a prefix beats all of its extensions.
  Clique result;
  double current = 0.0;
  while (current + kTieEps < target) {
    int chosen = -1;
    for (int v = next_member(pool, 0); v >= 0; v = next_member(pool, v + 1)) {
      BitRow continuation = intersect(pool, graph.adjacency_row(v));
      // Members are emitted in ascending order; drop earlier vertices.
      for (int u = next_member(continuation, 0); u >= 0 && u <= v;
           u = next_member(continuation, u + 1)) {
        reset_bit(continuation, u);
      }
      double reachable = current + graph.weight(v) + search.max_from(continuation);
      if (reachable + kTieEps >= target) {
        result.members.push_back(v);
        current += graph.weight(v);
        pool = continuation;
        chosen = v;
        break;
      }
      reset_bit(pool, v);
    }
    if (chosen < 0) break;  // numerically unreachable target; keep the prefix
  }

  double weight = 0.0;
  for (int v : result.members) weight += graph.weight(v);
  result.weight = weight;
  return result;
}

Clique brute_force_clique(const WeightedGraph& graph) {
  const int n = graph.size();
  if (n > 25) {
    throw std::invalid_argument("brute_force_clique: more than 25 vertices");
  }

  Clique best;  // the empty clique
  std::vector<int> members;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    members.clear();
    for (int v = 0; v < n; ++v) {
      if (mask & (std::uint32_t{1} << v)) members.push_back(v);
    }
    bool is_clique = true;
    for (std::size_t a = 0; a < members.size() && is_clique; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!graph.adjacent(members[a], members[b])) {
          is_clique = false;
          break;
        }
      }
    }
    if (!is_clique) continue;
    double weight = 0.0;
    for (int v : members) weight += graph.weight(v);
    if (weight > best.weight ||
        (weight == best.weight &&
         std::lexicographical_compare(members.begin(), members.end(),
                                      best.members.begin(), best.members.end()))) {
      best.members = members;
      best.weight = weight;
    }
  }
  return best;
}

}  // namespace idnc
