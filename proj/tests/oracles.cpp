#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace oracles {

namespace {

bool edge_has(const Edge& e, int v) {
  return std::binary_search(e.begin(), e.end(), v);
}

// vertex v at position pos must lie in the previous edge (cyclically) and in
// the current one; all chosen vertices distinct
bool pick_vertices(const Hypergraph& h, const std::vector<int>& es,
                   std::size_t pos, std::vector<int>& vs) {
  const std::size_t len = es.size();
  if (pos == len) return true;
  const Edge& prev = h.edges[es[(pos + len - 1) % len]];
  for (int v : h.edges[es[pos]]) {
    if (!edge_has(prev, v)) continue;
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
    vs.push_back(v);
    if (pick_vertices(h, es, pos + 1, vs)) return true;
    vs.pop_back();
  }
  return false;
}

bool pick_edges(const Hypergraph& h, int len, std::vector<int>& es) {
  if (static_cast<int>(es.size()) == len) {
    std::vector<int> vs;
    return pick_vertices(h, es, 0, vs);
  }
  for (int i = 0; i < h.edge_count(); ++i) {
    if (std::find(es.begin(), es.end(), i) != es.end()) continue;
    es.push_back(i);
    if (pick_edges(h, len, es)) return true;
    es.pop_back();
  }
  return false;
}

}  // namespace

bool has_cycle(const Hypergraph& h, int len) {
  if (len < 2 || len > h.edge_count()) return false;
  std::vector<int> es;
  return pick_edges(h, len, es);
}

std::optional<int> girth(const Hypergraph& h) {
  for (int len = 2; len <= h.edge_count(); ++len)
    if (has_cycle(h, len)) return len;
  return std::nullopt;
}

bool passes(const Hypergraph& h, int l, bergelab::CensusMode mode) {
  if (mode == bergelab::CensusMode::Girth) {
    for (int len = 2; len <= l; ++len)
      if (has_cycle(h, len)) return false;
    return true;
  }
  return !has_cycle(h, l);
}

BigInt count(int n, int m, int r, int l, bergelab::CensusMode mode) {
  const EdgeList universe = bergelab::all_r_sets(n, r);
  const int u = static_cast<int>(universe.size());
  if (m < 0 || m > u) return 0;
  BigInt total = 0;
  Hypergraph h;
  h.n = n;
  h.r = r;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(h.edges.size()) == m) {
      if (passes(h, l, mode)) ++total;
      return;
    }
    const int need = m - static_cast<int>(h.edges.size());
    for (int i = start; i + need <= u; ++i) {
      h.edges.push_back(universe[i]);
      rec(i + 1);
      h.edges.pop_back();
    }
  };
  rec(0);
  return total;
}

BigInt count_at_most(int n, int m, int r, int l, bergelab::CensusMode mode) {
  BigInt total = 0;
  for (int j = 0; j <= m; ++j) total += count(n, j, r, l, mode);
  return total;
}

int max_size(const EdgeList& universe, int n, int r, int l) {
  int best = 0;
  Hypergraph h;
  h.n = n;
  h.r = r;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    best = std::max(best, h.edge_count());
    for (std::size_t i = start; i < universe.size(); ++i) {
      h.edges.push_back(universe[i]);
      bool ok = true;
      for (int len = 2; len <= l && ok; ++len)
        if (has_cycle(h, len)) ok = false;
      if (ok) rec(i + 1);
      h.edges.pop_back();
    }
  };
  rec(0);
  return best;
}

int ex_value(int n, int r, int l) {
  return max_size(bergelab::all_r_sets(n, r), n, r, l);
}

std::vector<Edge> core_sets(const Hypergraph& h) {
  std::vector<Edge> out;
  const int r = h.r, m = h.edge_count();
  if (m < r) return out;
  for (const Edge& s : bergelab::all_r_sets(h.n, r)) {
    std::vector<int> asg;
    std::function<bool()> rec = [&]() -> bool {
      const int i = static_cast<int>(asg.size());
      if (i == r) return true;
      for (int e = 0; e < m; ++e) {
        if (std::find(asg.begin(), asg.end(), e) != asg.end()) continue;
        bool covers = true;
        for (int j = 0; j < r && covers; ++j)
          if (j != i && !edge_has(h.edges[e], s[j])) covers = false;
        if (!covers) continue;
        asg.push_back(e);
        if (rec()) return true;
        asg.pop_back();
      }
      return false;
    };
    if (rec()) out.push_back(s);
  }
  return out;
}

std::map<int, BigInt> cycles_by_span(const Hypergraph& h, int l) {
  std::map<int, BigInt> out;
  if (l < 2 || l > h.edge_count()) return out;
  std::set<std::vector<std::array<int, 3>>> seen;
  std::vector<int> es, vs;
  std::function<void()> vrec = [&]() {
    const std::size_t pos = vs.size();
    const std::size_t len = es.size();
    if (pos == len) {
      std::vector<std::array<int, 3>> flags(len);
      for (std::size_t i = 0; i < len; ++i) {
        const int a = vs[i], b = vs[(i + 1) % len];
        flags[i] = {es[i], std::min(a, b), std::max(a, b)};
      }
      std::sort(flags.begin(), flags.end());
      if (seen.insert(std::move(flags)).second) {
        std::set<int> uni;
        for (int e : es) uni.insert(h.edges[e].begin(), h.edges[e].end());
        out[static_cast<int>(uni.size())] += 1;
      }
      return;
    }
    const Edge& prev = h.edges[es[(pos + len - 1) % len]];
    for (int v : h.edges[es[pos]]) {
      if (!edge_has(prev, v)) continue;
      if (std::find(vs.begin(), vs.end(), v) != vs.end()) continue;
      vs.push_back(v);
      vrec();
      vs.pop_back();
    }
  };
  std::function<void()> erec = [&]() {
    if (static_cast<int>(es.size()) == l) {
      vrec();
      return;
    }
    for (int i = 0; i < h.edge_count(); ++i) {
      if (std::find(es.begin(), es.end(), i) != es.end()) continue;
      es.push_back(i);
      erec();
      es.pop_back();
    }
  };
  erec();
  return out;
}

}  // namespace oracles
