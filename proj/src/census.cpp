#include "bergelab/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "bergelab/incidence.hpp"
#include "bergelab/encode.hpp"
#include "bergelab/parallel.hpp"

namespace bergelab {

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt num = 1;
  for (long long i = 0; i < b; ++i) {
    num *= (a - i);
    num /= (i + 1);  // exact: prefix products are binomials
  }
  return num;
}

double log2_approx(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits <= 62) return std::log2(x.convert_to<double>());
  const BigInt top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

namespace {

struct DepthCounts {
  std::vector<BigInt> per_depth;  // per_depth[j] = hypergraphs with j edges
  std::uint64_t nodes = 0;
};

void guard_search(std::size_t candidates, int max_m, double budget) {
  BigInt est = 0;
  for (int j = 0; j <= max_m; ++j)
    est += binomial(static_cast<long long>(candidates), j);
  if (est.convert_to<double>() > budget) {
    throw SizeGuardError(
        "estimated enumeration size " + est.str() + " exceeds budget " +
        std::to_string(static_cast<long long>(budget)) +
        "; raise the budget to force the search");
  }
}

bool rejects(const IncidenceIndex& idx, const Edge& e, int l, CensusMode mode) {
  return mode == CensusMode::Girth ? idx.creates_girth_at_most(e, l)
                                   : idx.creates_cycle_of_length(e, l);
}

void census_dfs(IncidenceIndex& idx, const EdgeList& cand, std::size_t start,
                int depth, int max_depth, int l, CensusMode mode,
                DepthCounts& out) {
  if (depth == max_depth) return;
  for (std::size_t i = start; i < cand.size(); ++i) {
    ++out.nodes;
    if (rejects(idx, cand[i], l, mode)) continue;
    idx.push(cand[i]);
    out.per_depth[depth + 1] += 1;
    census_dfs(idx, cand, i + 1, depth + 1, max_depth, l, mode, out);
    idx.pop();
  }
}

// lexicographic DFS over edge subsets, parallelized over the first edge;
// per_depth[j] counts all j-subsets whose every prefix (hence, since the
// properties are downward closed, the subset itself) passes the filter
DepthCounts run_census(int n, int m, int r, int l, CensusMode mode,
                       const CensusOptions& opts) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (r < 2) throw std::invalid_argument("need r >= 2");
  if (l < 2) throw std::invalid_argument("need l >= 2");
  if (m < 0) throw std::invalid_argument("need m >= 0");
  EdgeList cand = all_r_sets(n, r);
  DepthCounts total;
  total.per_depth.assign(m + 1, 0);
  total.per_depth[0] = 1;
  if (m == 0 || cand.empty()) return total;
  guard_search(cand.size(), m, opts.node_budget);

  std::vector<DepthCounts> slots(cand.size());
  parallel_for(cand.size(), opts.threads, [&](std::size_t i) {
    DepthCounts& mine = slots[i];
    mine.per_depth.assign(m + 1, 0);
    mine.nodes = 1;  // the test of candidate i itself
    IncidenceIndex idx(n, r);
    if (rejects(idx, cand[i], l, mode)) return;
    idx.push(cand[i]);
    mine.per_depth[1] += 1;
    census_dfs(idx, cand, i + 1, 1, m, l, mode, mine);
  });
  for (const auto& s : slots) {
    total.nodes += s.nodes;
    for (int j = 1; j <= m; ++j) total.per_depth[j] += s.per_depth[j];
  }
  return total;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

}  // namespace

CensusResult count_girth(int n, int m, int r, int l,
                         const CensusOptions& opts) {
  Timer timer;
  DepthCounts c = run_census(n, m, r, l, CensusMode::Girth, opts);
  return {n, m, r, l, c.per_depth[m], c.nodes, timer.ms()};
}

CensusResult count_single_forbidden(int n, int m, int r, int l,
                                    const CensusOptions& opts) {
  Timer timer;
  DepthCounts c = run_census(n, m, r, l, CensusMode::Single, opts);
  return {n, m, r, l, c.per_depth[m], c.nodes, timer.ms()};
}

CensusResult count_at_most(int n, int m, int r, int l, CensusMode mode,
                           const CensusOptions& opts) {
  Timer timer;
  DepthCounts c = run_census(n, m, r, l, mode, opts);
  BigInt total = 0;
  for (const auto& x : c.per_depth) total += x;
  return {n, m, r, l, total, c.nodes, timer.ms()};
}

InequalityReport verify_reduction_general(int n, int m, int r, int l,
                                          const CensusOptions& opts) {
  const int lam = lambda_param(r, l);
  InequalityReport rep;
  rep.n = n;
  rep.m = m;
  rep.r = r;
  rep.l = l;
  rep.exponent = r - 1 + lam;
  rep.lhs = count_girth(n, m, r, l, opts).count;
  BigInt base = count_girth(n, m, 2, l, opts).count;
  rep.rhs = boost::multiprecision::pow(base, static_cast<unsigned>(rep.exponent));
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

InequalityReport verify_reduction_single(int n, int m, int r, int l,
                                         long long c,
                                         const CensusOptions& opts) {
  if (r < 3) throw std::invalid_argument("need r >= 3");
  if (c < 0) throw std::invalid_argument("need c >= 0");
  InequalityReport rep;
  rep.n = n;
  rep.m = m;
  rep.r = r;
  rep.l = l;
  long long rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;
  rep.exponent = rfact / 2;
  rep.has_c = true;
  rep.c = c;
  rep.lhs = count_single_forbidden(n, m, r, l, opts).count;
  BigInt base = count_at_most(n, m, 2, l, CensusMode::Single, opts).count;
  BigInt base_pow =
      boost::multiprecision::pow(base, static_cast<unsigned>(rep.exponent));
  rep.rhs = base_pow << static_cast<unsigned>(c * m);
  rep.holds = rep.lhs <= rep.rhs;
  if (rep.lhs <= base_pow || m == 0) {
    rep.min_c = 0.0;
  } else {
    rep.min_c = (log2_approx(rep.lhs) - log2_approx(base_pow)) / m;
  }
  return rep;
}

long long default_single_constant(int r, int l) {
  if (r < 3 || r > 12 || l < 2)
    throw std::invalid_argument("constant defined for 3 <= r <= 12, l >= 2");
  // sum over s = 3..r of (1 + l^2 s^2) * r!/s!
  long long total = 0;
  for (int s = 3; s <= r; ++s) {
    long long falling = 1;  // r!/s!
    for (int i = s + 1; i <= r; ++i) falling *= i;
    total += (1 + static_cast<long long>(l) * l * s * s) * falling;
  }
  return total;
}

namespace {

struct BnB {
  const EdgeList& cand;
  IncidenceIndex idx;
  int l;
  long long total_pairs;
  long long pairs_per_edge;
  int best = 0;
  EdgeList best_edges;
  std::uint64_t nodes = 0;

  BnB(const EdgeList& cand_, int n, int r, int l_)
      : cand(cand_), idx(n, r), l(l_) {
    total_pairs = static_cast<long long>(n) * (n - 1) / 2;
    pairs_per_edge = static_cast<long long>(r) * (r - 1) / 2;
  }

  void run(std::size_t start) {
    // a girth > l >= 2 hypergraph is linear, so edges occupy disjoint
    // vertex pair sets: at most total_pairs / pairs_per_edge edges overall
    long long used = static_cast<long long>(idx.size()) * pairs_per_edge;
    long long bound = idx.size() + (total_pairs - used) / pairs_per_edge;
    if (bound <= best) return;
    for (std::size_t i = start; i < cand.size(); ++i) {
      ++nodes;
      if (idx.creates_girth_at_most(cand[i], l)) continue;
      idx.push(cand[i]);
      if (idx.size() > best) {
        best = idx.size();
        best_edges = idx.edges();
      }
      run(i + 1);
      idx.pop();
    }
  }
};

}  // namespace

std::pair<int, Hypergraph> max_girth_subgraph(const Hypergraph& host, int l,
                                              const CensusOptions& opts) {
  if (l < 2) throw std::invalid_argument("need l >= 2");
  long long cap = (static_cast<long long>(host.n) * (host.n - 1) / 2) /
                  (static_cast<long long>(host.r) * (host.r - 1) / 2);
  cap = std::min<long long>(cap, host.edge_count());
  guard_search(host.edges.size(), static_cast<int>(cap), opts.node_budget);
  BnB bnb(host.edges, host.n, host.r, l);
  bnb.run(0);
  return {bnb.best, validate(bnb.best_edges, host.n, host.r)};
}

std::pair<int, Hypergraph> ex_girth(int n, int r, int l,
                                    const CensusOptions& opts) {
  return max_girth_subgraph(complete_hypergraph(n, r), l, opts);
}

double girth_count_log_bound(int n, long long m, int l, double c) {
  if (n < 3 || m < 1 || l < 3)
    throw std::invalid_argument("bound requires n >= 3, m >= 1, l >= 3");
  const int k = l / 2;
  const double logn = std::log(static_cast<double>(n));
  const double logm = std::log(static_cast<double>(m));
  return c * m + (k - 1) * m * std::log(logn) +
         k * m * ((1.0 + 1.0 / k) * logn - logm);
}

}  // namespace bergelab
