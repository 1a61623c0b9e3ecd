#include "bergelab/incidence.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace bergelab {

IncidenceIndex::IncidenceIndex(int n, int r)
    : n_(n), r_(r), vert_edges_(n + 1) {}

IncidenceIndex::IncidenceIndex(const Hypergraph& h)
    : IncidenceIndex(h.n, h.r) {
  for (const auto& e : h.edges) push(e);
}

void IncidenceIndex::push(const Edge& e) {
  int id = static_cast<int>(edges_.size());
  edges_.push_back(e);
  for (int v : e) vert_edges_[v].push_back(id);
}

void IncidenceIndex::pop() {
  const Edge& e = edges_.back();
  for (int v : e) vert_edges_[v].pop_back();
  edges_.pop_back();
}

Hypergraph IncidenceIndex::to_hypergraph() const {
  return validate(edges_, n_, r_);
}

bool IncidenceIndex::within_distance(int u, int v, int max_steps) const {
  if (u == v) return true;
  if (max_steps < 2) return false;
  // BFS over the incidence graph; node ids: 1..n vertices, n+1+j edge j
  const int m = static_cast<int>(edges_.size());
  std::vector<int> dist(n_ + 1 + m, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (dist[x] >= max_steps) continue;
    if (x <= n_) {
      for (int j : vert_edges_[x]) {
        int node = n_ + 1 + j;
        if (dist[node] != -1) continue;
        dist[node] = dist[x] + 1;
        q.push(node);
      }
    } else {
      for (int w : edges_[x - n_ - 1]) {
        if (dist[w] != -1) continue;
        if (w == v) return dist[x] + 1 <= max_steps;
        dist[w] = dist[x] + 1;
        q.push(w);
      }
    }
  }
  return false;
}

bool IncidenceIndex::creates_girth_at_most(const Edge& e, int l) const {
  // the new edge closes a cycle of length <= l iff two of its vertices are
  // already joined by a path of at most l-1 edges, i.e. incidence distance
  // <= 2(l-1)
  const int cap = 2 * (l - 1);
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (within_distance(e[a], e[b], cap)) return true;
  return false;
}

bool IncidenceIndex::creates_cycle_of_length(const Edge& e, int l) const {
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (exact_alternating_path(e[a], e[b], l - 1, -1)) return true;
  return false;
}

bool IncidenceIndex::exact_alternating_path(int u, int v, int edge_steps,
                                            int banned) const {
  if (edge_steps < 1 || u == v) return false;
  std::vector<char> used_v(n_ + 1, 0);
  std::vector<char> used_e(edges_.size(), 0);
  used_v[u] = 1;
  return exact_path_rec(u, v, edge_steps, banned, used_v, used_e);
}

bool IncidenceIndex::exact_path_rec(int cur, int target, int remaining,
                                    int banned, std::vector<char>& used_v,
                                    std::vector<char>& used_e) const {
  for (int j : vert_edges_[cur]) {
    if (j == banned || used_e[j]) continue;
    used_e[j] = 1;
    for (int w : edges_[j]) {
      if (w == cur || used_v[w]) continue;
      if (w == target) {
        if (remaining == 1) {
          used_e[j] = 0;
          return true;
        }
        continue;  // the endpoint may only be reached by the last edge
      }
      if (remaining == 1) continue;
      used_v[w] = 1;
      if (exact_path_rec(w, target, remaining - 1, banned, used_v, used_e)) {
        used_v[w] = 0;
        used_e[j] = 0;
        return true;
      }
      used_v[w] = 0;
    }
    used_e[j] = 0;
  }
  return false;
}

}  // namespace bergelab
