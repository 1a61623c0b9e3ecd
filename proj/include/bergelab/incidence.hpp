#ifndef BERGELAB_INCIDENCE_HPP
#define BERGELAB_INCIDENCE_HPP

#include "bergelab/hypergraph.hpp"

namespace bergelab {

// Mutable vertex->edge incidence structure with push/pop, built for the
// census search: edges are added one at a time and every candidate is tested
// against the current partial hypergraph before being pushed. Distances are
// measured in the bipartite incidence graph (one step = vertex-to-edge or
// edge-to-vertex), so a Berge cycle of length l corresponds to an incidence
// cycle of length 2l.
class IncidenceIndex {
 public:
  IncidenceIndex(int n, int r);
  explicit IncidenceIndex(const Hypergraph& h);

  void push(const Edge& e);
  void pop();

  int size() const { return static_cast<int>(edges_.size()); }
  int n() const { return n_; }
  const EdgeList& edges() const { return edges_; }

  /// Hypergraph with the currently pushed edges (canonicalized).
  Hypergraph to_hypergraph() const;

  /// Shortest incidence distance between vertices u and v is <= max_steps?
  /// (u != v, both 1-based; distance between vertices is always even).
  bool within_distance(int u, int v, int max_steps) const;

  /// Given that the current hypergraph has girth > l, would pushing e create
  /// a Berge cycle of length <= l? True iff some pair u != v in e is at
  /// incidence distance <= 2(l-1). Requires l >= 2; e is not yet pushed.
  bool creates_girth_at_most(const Edge& e, int l) const;

  /// Would pushing e create a Berge cycle of length exactly l? True iff some
  /// pair u != v in e is joined by a simple alternating path using exactly
  /// l-1 current edges. Requires l >= 2; e is not yet pushed.
  bool creates_cycle_of_length(const Edge& e, int l) const;

  /// Simple alternating path from u to v using exactly edge_steps distinct
  /// edges and distinct intermediate vertices; edge index `banned` (or -1)
  /// may not be used.
  bool exact_alternating_path(int u, int v, int edge_steps, int banned) const;

 private:
  int n_ = 0;
  int r_ = 2;
  EdgeList edges_;
  std::vector<std::vector<int>> vert_edges_;  // 1-based vertex -> edge ids

  bool exact_path_rec(int cur, int target, int remaining, int banned,
                      std::vector<char>& used_v,
                      std::vector<char>& used_e) const;
};

}  // namespace bergelab

#endif
