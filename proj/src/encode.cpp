#include "bergelab/encode.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bergelab {

int lambda_param(int r, int l) {
  if (r < 3 || l < 3)
    throw std::invalid_argument("book parameters require r >= 3 and l >= 3");
  return (r - 2 + l - 3) / (l - 2);  // ceil((r-2)/(l-2))
}

BookGraph build_book(int r, int l) {
  const int lam = lambda_param(r, l);
  BookGraph b;
  b.r = r;
  b.page_limit = l;
  b.spine = {1, 2};
  int next = 3;
  for (int pg = 0; pg < lam; ++pg) {
    // all pages have l vertices except possibly the last, which takes
    // whatever interior vertices remain
    int len = (pg == lam - 1) ? r - (lam - 1) * (l - 2) : l;
    std::vector<int> cyc;
    cyc.push_back(1);
    for (int i = 0; i < len - 2; ++i) cyc.push_back(next++);
    cyc.push_back(2);
    b.pages.push_back(std::move(cyc));
  }
  if (next != r + 1)
    throw std::logic_error("book construction did not cover {3..r}");
  b.edge_order.emplace_back(1, 2);
  for (const auto& page : b.pages)
    for (std::size_t i = 0; i + 1 < page.size(); ++i)
      b.edge_order.emplace_back(std::min(page[i], page[i + 1]),
                                std::max(page[i], page[i + 1]));
  return b;
}

Hypergraph phi_book(const Hypergraph& h, const BookGraph& book, int i) {
  if (i < 1 || i > book.edge_count())
    throw std::invalid_argument("book edge index out of range");
  if (h.r != book.r)
    throw std::invalid_argument("hypergraph uniformity does not match book");
  auto [j, jp] = book.edge_order[i - 1];  // 1-based vertex positions, j < jp
  std::set<Edge> pairs;
  for (const auto& e : h.edges) {
    int a = e[j - 1], b = e[jp - 1];
    pairs.insert({std::min(a, b), std::max(a, b)});
  }
  return validate(EdgeList(pairs.begin(), pairs.end()), h.n, 2);
}

EncodedTuple encode_book(const Hypergraph& h, int l) {
  const int lam = lambda_param(h.r, l);
  if (auto g = girth(h); g && *g <= l)
    throw PreconditionError("hypergraph girth must exceed " +
                            std::to_string(l));
  BookGraph book = build_book(h.r, l);
  EncodedTuple t;
  t.r = h.r;
  t.l = l;
  t.n = h.n;
  for (int i = 1; i <= h.r - 1 + lam; ++i) {
    Hypergraph g2 = phi_book(h, book, i);
    if (g2.edge_count() != h.edge_count())
      throw std::logic_error("projection collapsed edges of a high-girth input");
    if (auto gg = girth(g2); gg && *gg <= l)
      throw std::logic_error("projection of a high-girth input has a short cycle");
    t.graphs.push_back(std::move(g2));
  }
  return t;
}

namespace {

using PairEdge = std::pair<int, int>;

// all simple paths from x to y in g2 with 2..l-1 edges (= the pages of a
// potential book with spine {x,y}); each path is reported as its sorted
// vertex set plus its sorted edge-pair set
struct Page {
  Edge verts;
  std::vector<PairEdge> edges;
};

void collect_pages(const std::vector<std::vector<int>>& adj, int x, int y,
                   int max_edges, std::vector<int>& path,
                   std::vector<char>& on_path, std::vector<Page>& out) {
  int cur = path.back();
  int used = static_cast<int>(path.size()) - 1;
  for (int w : adj[cur]) {
    if (w == y) {
      if (used + 1 >= 2 && used + 1 <= max_edges) {
        Page p;
        p.verts = path;
        p.verts.push_back(y);
        std::sort(p.verts.begin(), p.verts.end());
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          p.edges.emplace_back(std::min(path[i], path[i + 1]),
                               std::max(path[i], path[i + 1]));
        p.edges.emplace_back(std::min(cur, y), std::max(cur, y));
        std::sort(p.edges.begin(), p.edges.end());
        out.push_back(std::move(p));
      }
      continue;
    }
    if (on_path[w] || used + 2 > max_edges) continue;
    on_path[w] = 1;
    path.push_back(w);
    collect_pages(adj, x, y, max_edges, path, on_path, out);
    path.pop_back();
    on_path[w] = 0;
  }
}

bool edges_disjoint(const std::vector<PairEdge>& a,
                    const std::vector<PairEdge>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else return false;
  }
  return true;
}

void assemble_books(const std::vector<Page>& pages, std::size_t start,
                    std::set<int>& verts, std::vector<std::size_t>& chosen,
                    int r, std::set<Edge>& out) {
  if (static_cast<int>(verts.size()) == r && !chosen.empty()) {
    out.insert(Edge(verts.begin(), verts.end()));
    return;  // more pages cannot change the vertex set below r+1
  }
  for (std::size_t i = start; i < pages.size(); ++i) {
    const Page& p = pages[i];
    bool ok = true;
    for (std::size_t c : chosen)
      if (!edges_disjoint(pages[c].edges, p.edges)) { ok = false; break; }
    if (!ok) continue;
    std::set<int> merged = verts;
    merged.insert(p.verts.begin(), p.verts.end());
    if (static_cast<int>(merged.size()) > r) continue;
    chosen.push_back(i);
    assemble_books(pages, i + 1, merged, chosen, r, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Edge> find_books(const Hypergraph& g, int r, int l) {
  if (g.r != 2) throw std::invalid_argument("find_books expects a 2-graph");
  lambda_param(r, l);  // parameter check
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::set<Edge> found;
  for (const auto& e : g.edges) {
    int x = e[0], y = e[1];  // spine candidates, x < y
    std::vector<Page> pages;
    std::vector<int> path{x};
    std::vector<char> on_path(g.n + 1, 0);
    on_path[x] = 1;
    collect_pages(adj, x, y, l - 1, path, on_path, pages);
    std::set<int> verts{x, y};
    std::vector<std::size_t> chosen;
    assemble_books(pages, 0, verts, chosen, r, found);
  }
  return {found.begin(), found.end()};
}

Hypergraph decode_book(const EncodedTuple& t) {
  const int lam = lambda_param(t.r, t.l);
  if (static_cast<int>(t.graphs.size()) != t.r - 1 + lam)
    throw NotInImageError("tuple has " + std::to_string(t.graphs.size()) +
                          " graphs, expected " +
                          std::to_string(t.r - 1 + lam));
  for (const auto& g : t.graphs) {
    if (g.n != t.n || g.r != 2)
      throw NotInImageError("component graph has wrong vertex count or arity");
    if (g.edge_count() != t.graphs.front().edge_count())
      throw NotInImageError("component graphs have different edge counts");
  }
  const int m = t.graphs.front().edge_count();
  if (m == 0) return validate({}, t.n, t.r);

  // union of the component graphs hosts every book image
  std::set<Edge> union_edges;
  for (const auto& g : t.graphs)
    union_edges.insert(g.edges.begin(), g.edges.end());
  Hypergraph host = validate(EdgeList(union_edges.begin(), union_edges.end()),
                             t.n, 2);

  EdgeList candidates = find_books(host, t.r, t.l);
  Hypergraph h = validate(std::move(candidates), t.n, t.r);
  if (auto g = girth(h); g && *g <= t.l)
    throw NotInImageError("reconstructed hypergraph has girth <= l");
  EncodedTuple back;
  try {
    back = encode_book(h, t.l);
  } catch (const std::exception&) {
    throw NotInImageError("reconstruction does not re-encode");
  }
  if (!(back == t))
    throw NotInImageError("tuple is not the encoding of any hypergraph");
  return h;
}

namespace {

// system of distinct representatives: edge assigned to position i must
// contain s minus its i-th vertex; plain backtracking (r is tiny)
bool distinct_cover(const std::vector<std::vector<int>>& opts,
                    std::vector<char>& used, std::size_t pos) {
  if (pos == opts.size()) return true;
  for (int e : opts[pos]) {
    if (used[e]) continue;
    used[e] = 1;
    if (distinct_cover(opts, used, pos + 1)) return true;
    used[e] = 0;
  }
  return false;
}

}  // namespace

std::vector<Edge> core_sets(const Hypergraph& h) {
  const int r = h.r;
  std::vector<Edge> out;
  if (h.edge_count() == 0) return out;
  auto candidates = clique_candidates(shadow(h, r - 1));
  for (const auto& s : candidates) {
    std::vector<std::vector<int>> opts(r);
    for (int i = 0; i < r; ++i) {
      Edge sub;
      sub.reserve(r - 1);
      for (int jj = 0; jj < r; ++jj)
        if (jj != i) sub.push_back(s[jj]);
      for (int e = 0; e < h.edge_count(); ++e) {
        const Edge& edge = h.edges[e];
        if (std::includes(edge.begin(), edge.end(), sub.begin(), sub.end()))
          opts[i].push_back(e);
      }
    }
    std::vector<char> used(h.edge_count(), 0);
    if (distinct_cover(opts, used, 0)) out.push_back(s);
  }
  return out;
}

ShadowRecord encode_shadow(const Hypergraph& h) {
  ShadowRecord rec;
  rec.r = h.r;
  rec.n = h.n;
  rec.edge_set = h.edges;
  std::set<Edge> all;
  for (int i = 0; i < h.r; ++i) {
    std::set<Edge> layer;
    for (const auto& e : h.edges) {
      Edge sub;
      sub.reserve(h.r - 1);
      for (int jj = 0; jj < h.r; ++jj)
        if (jj != i) sub.push_back(e[jj]);
      layer.insert(sub);
    }
    all.insert(layer.begin(), layer.end());
    rec.layers.push_back(
        validate_kgraph(EdgeList(layer.begin(), layer.end()), h.n, h.r - 1));
  }
  Shadow sh = shadow(h, h.r - 1);
  if (EdgeList(all.begin(), all.end()) != sh.sets)
    throw std::logic_error("layer union differs from the shadow");
  return rec;
}

Hypergraph decode_shadow(const ShadowRecord& rec) {
  Hypergraph h = validate(rec.edge_set, rec.n, rec.r);
  ShadowRecord back = encode_shadow(h);
  if (!(back == rec))
    throw NotInImageError("layers are not the shadow encoding of the edge set");
  return h;
}

std::vector<Edge> clique_candidates(const KGraph& s) {
  std::set<Edge> cands;
  for (const auto& base : s.sets) {
    for (int w = 1; w <= s.n; ++w) {
      if (std::binary_search(base.begin(), base.end(), w)) continue;
      Edge cand = base;
      cand.push_back(w);
      std::sort(cand.begin(), cand.end());
      cands.insert(std::move(cand));
    }
  }
  std::vector<Edge> out;
  for (const auto& cand : cands) {
    bool ok = true;
    for (std::size_t drop = 0; drop < cand.size() && ok; ++drop) {
      Edge sub;
      sub.reserve(cand.size() - 1);
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (j != drop) sub.push_back(cand[j]);
      ok = std::binary_search(s.sets.begin(), s.sets.end(), sub);
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

}  // namespace bergelab
