#ifndef BERGELAB_HYPERGRAPH_HPP
#define BERGELAB_HYPERGRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergelab/bigint.hpp"

namespace bergelab {

using Edge = std::vector<int>;       // vertices, sorted ascending
using EdgeList = std::vector<Edge>;  // sorted lexicographically, no duplicates

/// Structurally invalid input (bad vertex labels, wrong edge size, duplicate
/// edges, malformed JSON payloads). Maps to CLI exit code 2.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates an operation's precondition
/// (e.g. encoding a hypergraph whose girth is too small). CLI exit code 1.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labeled r-uniform hypergraph on vertex set {1..n}, held in canonical form:
// each edge sorted ascending, the edge list sorted lexicographically, no
// duplicate edges. Construct via validate() so the invariant always holds.
struct Hypergraph {
  int n = 0;
  int r = 2;
  EdgeList edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const Hypergraph&) const = default;
};

// k-uniform set system on {1..n}; used for shadows and encoder layers.
struct KGraph {
  int n = 0;
  int k = 0;
  EdgeList sets;  // canonical form, like Hypergraph::edges

  bool operator==(const KGraph&) const = default;
};

using Shadow = KGraph;

// A Berge cycle of the stated length: vertices[i] and vertices[(i+1) % len]
// both lie in edges[i] (indices into Hypergraph::edges), all vertices
// distinct, all edge indices distinct.
struct BergeCycleWitness {
  int length = 0;
  std::vector<int> vertices;
  std::vector<int> edge_indices;
};

/// Canonicalize and check an edge list: vertices in 1..n, edges of size
/// exactly r, no duplicate vertices within an edge, no duplicate edges.
/// Throws ValidationError. Accepts edges in any order.
Hypergraph validate(EdgeList raw_edges, int n, int r);

/// Same for a k-uniform set system.
KGraph validate_kgraph(EdgeList raw_sets, int n, int k);

/// All r-subsets of {1..n} in lexicographic order.
EdgeList all_r_sets(int n, int r);

/// Complete r-uniform hypergraph K_n^r.
Hypergraph complete_hypergraph(int n, int r);

/// k-shadow: all k-subsets contained in at least one edge (1 <= k <= r).
Shadow shadow(const Hypergraph& h, int k);

/// True iff no two distinct edges share 2 or more vertices.
bool is_linear(const Hypergraph& h);

/// Length of a shortest Berge cycle, or nullopt when the hypergraph has no
/// Berge cycle at all (its girth is infinite).
std::optional<int> girth(const Hypergraph& h);

/// A shortest Berge cycle of length <= max_len, if one exists. The returned
/// witness always has length equal to girth(h).
std::optional<BergeCycleWitness> find_berge_cycle(const Hypergraph& h,
                                                  int max_len);

/// Check a claimed witness against the definition (distinctness, membership,
/// index bounds). Never trusts the caller.
bool verify_witness(const Hypergraph& h, const BergeCycleWitness& w);

/// True iff h contains a Berge cycle of length exactly len (len >= 2).
bool has_berge_cycle_of_length(const Hypergraph& h, int len);

/// Number of Berge cycles of length exactly l spanning exactly v distinct
/// vertices. A cycle is a (vertex sequence, edge sequence) pair counted up to
/// rotation and reflection of the cyclic order; "spanning" counts the union
/// of the l hyperedges. Requires l >= 2.
BigInt count_berge_cycles(const Hypergraph& h, int l, int v);

/// All spans at once: map from v = |union of cycle edges| to count.
std::map<int, BigInt> count_berge_cycles_by_span(const Hypergraph& h, int l);

/// Maximum, over all i-subsets S of vertices, of the number of edges
/// containing S (1 <= i <= r). Zero for an edgeless hypergraph.
int max_i_degree(const Hypergraph& h, int i);

}  // namespace bergelab

#endif
