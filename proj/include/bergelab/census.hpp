#ifndef BERGELAB_CENSUS_HPP
#define BERGELAB_CENSUS_HPP

#include <cstdint>
#include <utility>

#include "bergelab/hypergraph.hpp"

namespace bergelab {

/// Raised before starting a search whose enumeration-size estimate exceeds
/// the configured budget. CLI exit code 1.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  // Upper bound on sum_{j<=m} C(#candidate edges, j); searches with a larger
  // a-priori estimate are refused instead of started.
  double node_budget = 1e8;
  int threads = 1;
};

enum class CensusMode { Girth, Single };

struct CensusResult {
  int n = 0, m = 0, r = 0, l = 0;
  BigInt count;
  std::uint64_t nodes = 0;  // candidate tests performed by the search
  double ms = 0.0;          // wall time; informational only
};

struct InequalityReport {
  int n = 0, m = 0, r = 0, l = 0;
  BigInt lhs, rhs;
  long long exponent = 0;  // exponent applied to the 2-graph count
  bool holds = false;
  // Single-cycle reduction only: the 2^{c m} slack used, and the minimal
  // real c >= 0 that would make the inequality hold at these parameters.
  bool has_c = false;
  long long c = 0;
  double min_c = 0.0;
};

/// Number of labeled r-uniform hypergraphs on {1..n} with exactly m edges
/// and girth > l (no Berge cycle of length <= l). Requires l >= 2.
CensusResult count_girth(int n, int m, int r, int l,
                         const CensusOptions& opts = {});

/// Same but forbidding only Berge cycles of length exactly l.
CensusResult count_single_forbidden(int n, int m, int r, int l,
                                    const CensusOptions& opts = {});

/// Sum of the counts for 0..m edges (one search pass).
CensusResult count_at_most(int n, int m, int r, int l, CensusMode mode,
                           const CensusOptions& opts = {});

/// Exhaustively check  count_girth(n,m,r,l) <= count_girth(n,m,2,l)^(r-1+lambda).
/// Requires r >= 3, l >= 3.
InequalityReport verify_reduction_general(int n, int m, int r, int l,
                                          const CensusOptions& opts = {});

/// Exhaustively check
///   count_single_forbidden(n,m,r,l) <= 2^(c m) * count_at_most(n,m,2,l,Single)^(r!/2).
/// Requires r >= 3, l >= 2.
InequalityReport verify_reduction_single(int n, int m, int r, int l,
                                         long long c,
                                         const CensusOptions& opts = {});

/// Default slack constant for the single-cycle reduction:
/// sum_{s=3}^{r} (1 + l^2 s^2) * r!/s!   (145 at r=3, l=4).
long long default_single_constant(int r, int l);

/// Maximum number of edges of an r-uniform hypergraph on {1..n} with girth
/// > l, with an extremal witness. Exact branch-and-bound.
std::pair<int, Hypergraph> ex_girth(int n, int r, int l,
                                    const CensusOptions& opts = {});

/// Largest girth-> l subhypergraph of an arbitrary host, with witness.
std::pair<int, Hypergraph> max_girth_subgraph(const Hypergraph& host, int l,
                                              const CensusOptions& opts = {});

/// log of the count upper bound  e^{c m} * (log n)^{(k-1)m} * (n^{1+1/k}/m)^{k m}
/// with k = floor(l/2), evaluated in log space (natural log). Requires
/// n >= 3, m >= 1, l >= 3.
double girth_count_log_bound(int n, long long m, int l, double c);

}  // namespace bergelab

#endif
