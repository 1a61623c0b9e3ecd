#ifndef BERGELAB_ENCODE_HPP
#define BERGELAB_ENCODE_HPP

#include "bergelab/hypergraph.hpp"

namespace bergelab {

/// A tuple claiming to be the image of the book encoder but failing the
/// decoder's consistency checks. CLI exit code 1.
struct NotInImageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The fixed "book" template used by the encoder: r vertices, spine {1,2},
// and lambda cycles (pages) through the spine whose vertex sets partition
// {3..r} across their interiors. Page i is stored as its vertex sequence
// from spine vertex 1 to spine vertex 2; page edges are the consecutive
// pairs along that sequence. All full pages have l vertices; when l-2 does
// not divide r-2, the last page is shorter.
struct BookGraph {
  int r = 0;          // number of vertices
  int page_limit = 0; // l used to build the book
  std::pair<int, int> spine{1, 2};
  std::vector<std::vector<int>> pages;        // vertex sequences 1 -> ... -> 2
  std::vector<std::pair<int, int>> edge_order;  // f_1 = spine, then page edges

  int edge_count() const { return static_cast<int>(edge_order.size()); }
};

// Encoder output: one 2-uniform graph per book edge, all on {1..n}, each
// with the same number of edges as the source hypergraph.
struct EncodedTuple {
  int r = 0;
  int l = 0;
  int n = 0;
  std::vector<Hypergraph> graphs;

  bool operator==(const EncodedTuple&) const = default;
};

// Shadow encoder output: the (r-1)-shadow split into r layers (layer i drops
// the i-th smallest vertex of each edge) plus the original edge set.
struct ShadowRecord {
  int r = 0;
  int n = 0;
  std::vector<KGraph> layers;  // exactly r layers, each (r-1)-uniform
  EdgeList edge_set;

  bool operator==(const ShadowRecord&) const = default;
};

/// Number of pages: ceil((r-2) / (l-2)). Requires r >= 3 and l >= 3.
int lambda_param(int r, int l);

/// Deterministic book on vertices {1..r} with pages of length <= l.
BookGraph build_book(int r, int l);

/// Project every hyperedge of h onto book edge i (1-based index into
/// edge_order): edge e, sorted ascending, maps to the pair of its vertices
/// in the two positions named by f_i. Duplicate pairs collapse.
Hypergraph phi_book(const Hypergraph& h, const BookGraph& book, int i);

/// Encode h (girth > l required, r >= 3, l >= 3) as its r-1+lambda
/// projections. Each component graph has exactly edge_count(h) edges and
/// girth > l; both are checked.
EncodedTuple encode_book(const Hypergraph& h, int l);

/// All r-sets of vertices of the 2-graph g that carry a book: a spine edge
/// plus edge-disjoint cycles of length <= l through it covering exactly r
/// vertices. Sorted lexicographically.
std::vector<Edge> find_books(const Hypergraph& g, int r, int l);

/// Invert encode_book: reconstruct the unique preimage or throw
/// NotInImageError when the tuple is not an encoder output.
Hypergraph decode_book(const EncodedTuple& t);

/// All core sets of h: r-sets S = {v_1 < ... < v_r} for which there exist r
/// pairwise distinct edges e_1..e_r with S \ {v_i} contained in e_i. Sorted
/// lexicographically.
std::vector<Edge> core_sets(const Hypergraph& h);

/// Split the (r-1)-shadow into r layers plus the edge set. The union of the
/// layers always equals shadow(h, r-1); this is checked.
ShadowRecord encode_shadow(const Hypergraph& h);

/// Invert encode_shadow; throws NotInImageError when the layers are not the
/// shadow encoding of the record's edge set.
Hypergraph decode_shadow(const ShadowRecord& rec);

/// All (k+1)-sets of {1..s.n} whose (k+1) subsets of size k all belong to s.
/// Sorted lexicographically.
std::vector<Edge> clique_candidates(const KGraph& s);

}  // namespace bergelab

#endif
