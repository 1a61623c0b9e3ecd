#ifndef BERGELAB_RANDEX_HPP
#define BERGELAB_RANDEX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bergelab/census.hpp"
#include "bergelab/hypergraph.hpp"

namespace bergelab {

// Random r-uniform hypergraph model on {1..n}: either every r-set kept
// independently with probability p, or a uniformly random set of exactly m
// edges.
struct RandomSpec {
  enum class Model { Binomial, Uniform };

  int n = 0;
  int r = 2;
  Model model = Model::Binomial;
  double p = 0.0;       // Binomial
  long long m = 0;      // Uniform
  std::uint64_t seed = 0;
};

/// Draw one hypergraph from the model. Deterministic in the seed.
Hypergraph sample(const RandomSpec& spec);

// A map {1..source_n} -> {1..target_n}; image[i-1] is the image of vertex i.
struct VertexMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> image;
};

/// Random map with independent uniform images.
VertexMap random_vertex_map(int source_n, int target_n, std::uint64_t seed);

/// True iff chi maps every edge of f onto an edge of fprime bijectively
/// (injective on each edge, image edge present), i.e. chi is a local
/// isomorphism from f to fprime.
bool is_local_isomorphism(const VertexMap& chi, const Hypergraph& f,
                          const Hypergraph& fprime);

struct ExtractionReport {
  std::uint64_t seed = 0;
  int input_edges = 0;
  int kept = 0;             // edges kept by the per-edge rule
  int cleanup_deleted = 0;  // edges removed by the cleanup pass (if any)
  int host_n = 0;
  int host_edges = 0;
  bool girth_ok = false;       // output girth verified > target
  bool host_bound_ok = false;  // host size satisfies t >= r^2 4^r max_i Delta_i^{1/(r-i)}
};

/// Keep an edge of h iff its image under a random (or supplied) map is an
/// edge of the host and no other edge of h meeting it has the same image.
/// The host must have girth > l; the output then provably has girth > l,
/// which is verified. Returns the surviving subhypergraph of h.
std::pair<Hypergraph, ExtractionReport> extract_girth_subgraph(
    const Hypergraph& h, const Hypergraph& host, int l, std::uint64_t seed,
    const VertexMap* forced_map = nullptr);

/// Triangle-free variant: keep an edge iff its image is an edge of the host
/// (girth > 3 required), then repeatedly delete the lexicographically
/// smallest edge of a shortest remaining Berge cycle of length <= 3.
std::pair<Hypergraph, ExtractionReport> extract_triangle_subgraph(
    const Hypergraph& h, const Hypergraph& host, std::uint64_t seed,
    const VertexMap* forced_map = nullptr);

/// Maximal (greedy) r-uniform hypergraph on {1..t} with girth > l: scan all
/// r-sets in seeded random order, keeping each edge that preserves the girth
/// bound. The result admits no further edge.
Hypergraph greedy_host(int t, int r, int l, std::uint64_t seed);

struct ProbabilityEstimate {
  long long trials = 0;
  long long successes = 0;
  double estimate = 0.0;
  double half_width = 0.0;          // 1.96 * standard error
  std::vector<char> outcomes;       // per-trial success flags, trial order
};

/// Monte Carlo estimate of P(girth > l) for the uniform model with exactly
/// m edges. Trial i uses child_seed(seed, i); the result is identical for
/// any thread count.
ProbabilityEstimate estimate_girth_probability(int n, int r, long long m,
                                               int l, long long trials,
                                               std::uint64_t seed,
                                               int threads = 1);

// Reduced fraction with exact accessors, for exponent reporting.
struct Fraction {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(long long num, long long den);

// Predicted exponents for the maximum number of edges in a girth > l
// subhypergraph of a binomial random hypergraph, as functions of l and r.
// p exponents apply to max-subgraph sizes of the form n^{1+1/k} p^{e};
// n exponents describe the pure-n growth in the dense and flat regimes.
struct ExponentTable {
  int l = 0, r = 0;
  int k = 0;        // floor(l / 2)
  int lambda = 0;   // pages of the book on r vertices
  Fraction upper_p;            // 1 / ((r-1+lambda) k)
  Fraction lower_p;            // 1 / ((r-1) k)
  Fraction dense_n;            // 1 + 1/k
  Fraction flat_n;             // 1 + 1/(l-1)
  Fraction p_min;              // -r + 1 + 1/(l-1): below this, no edges survive
  Fraction upper_flat_end;     // p exponent where the upper bound leaves the flat regime
  Fraction upper_dense_start;  // p exponent where the dense regime starts (upper)
  Fraction lower_dense_start;  // same for the lower bound
  long long gamma_lower = 0;   // bracket for the critical exponent gamma_k:
  long long gamma_upper = 0;   //   (r-1) k <= gamma_k <= (r-1+lambda) k
  Fraction conjectured_gamma;  // r - 1 + (r-2)/(l-2)
};

/// Exponent predictions for given l >= 3, r >= 2 (r >= 3 when l == 3).
ExponentTable exponent_table(int l, int r);

enum class ExMethod { Extractor, Exact };

struct ExTrial {
  long long trial = 0;
  std::uint64_t seed = 0;
  long long sample_edges = 0;
  long long kept = 0;
  long long deleted = 0;
  bool girth_ok = false;
  long long value = 0;  // surviving edge count (or exact optimum)
};

struct RandomExResult {
  int n = 0, r = 0, l = 0;
  double p = 0.0;
  int t_used = 0;  // host size (extractor method)
  std::vector<ExTrial> trials;
  double mean = 0.0;
  double std_error = 0.0;
  long long max_value = 0;
};

/// Estimate the maximum girth > l subhypergraph size of a binomial random
/// hypergraph: either a random-host extractor lower bound (host size t, by
/// default round(p^{1/(r-1)} n) clamped to [r, n]) or the exact
/// branch-and-bound optimum per sample. Deterministic in the seed for any
/// thread count.
RandomExResult estimate_random_ex(int n, int r, double p, int l,
                                  long long trials, std::uint64_t seed,
                                  ExMethod method, int t_override = 0,
                                  int threads = 1,
                                  const CensusOptions& census_opts = {});

}  // namespace bergelab

#endif
