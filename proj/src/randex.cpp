#include "bergelab/randex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bergelab/encode.hpp"
#include "bergelab/incidence.hpp"
#include "bergelab/parallel.hpp"
#include "bergelab/rng.hpp"

namespace bergelab {

Hypergraph sample(const RandomSpec& spec) {
  if (spec.n < 1 || spec.r < 2 || spec.r > spec.n)
    throw std::invalid_argument("need 1 <= r <= n, r >= 2");
  EdgeList universe = all_r_sets(spec.n, spec.r);
  Rng rng(spec.seed);
  EdgeList picked;
  if (spec.model == RandomSpec::Model::Binomial) {
    if (spec.p < 0.0 || spec.p > 1.0)
      throw std::invalid_argument("need 0 <= p <= 1");
    for (const auto& e : universe)
      if (rng.next_double() < spec.p) picked.push_back(e);
  } else {
    if (spec.m < 0 || spec.m > static_cast<long long>(universe.size()))
      throw std::invalid_argument("edge count out of range for this n, r");
    rng.shuffle(universe);
    picked.assign(universe.begin(), universe.begin() + spec.m);
  }
  return validate(std::move(picked), spec.n, spec.r);
}

VertexMap random_vertex_map(int source_n, int target_n, std::uint64_t seed) {
  if (source_n < 0 || target_n < 1)
    throw std::invalid_argument("bad vertex map dimensions");
  VertexMap chi;
  chi.source_n = source_n;
  chi.target_n = target_n;
  chi.image.resize(source_n);
  Rng rng(seed);
  for (int i = 0; i < source_n; ++i)
    chi.image[i] = 1 + static_cast<int>(rng.next_below(target_n));
  return chi;
}

bool is_local_isomorphism(const VertexMap& chi, const Hypergraph& f,
                          const Hypergraph& fprime) {
  if (chi.source_n != f.n || chi.target_n != fprime.n) return false;
  if (static_cast<int>(chi.image.size()) != chi.source_n) return false;
  for (int x : chi.image)
    if (x < 1 || x > chi.target_n) return false;
  for (const auto& e : f.edges) {
    Edge img;
    img.reserve(e.size());
    for (int v : e) img.push_back(chi.image[v - 1]);
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end())
      return false;  // not injective on this edge
    if (!std::binary_search(fprime.edges.begin(), fprime.edges.end(), img))
      return false;
  }
  return true;
}

namespace {

Edge image_of(const Edge& e, const VertexMap& chi) {
  Edge img;
  img.reserve(e.size());
  for (int v : e) img.push_back(chi.image[v - 1]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool host_bound_holds(const Hypergraph& h, int t) {
  // t >= r^2 4^r * Delta_i^{1/(r-i)} for every i = 1..r-1
  const double base = static_cast<double>(h.r) * h.r *
                      std::pow(4.0, static_cast<double>(h.r));
  for (int i = 1; i < h.r; ++i) {
    double delta = static_cast<double>(max_i_degree(h, i));
    if (delta == 0.0) continue;
    if (static_cast<double>(t) < base * std::pow(delta, 1.0 / (h.r - i)))
      return false;
  }
  return true;
}

}  // namespace

std::pair<Hypergraph, ExtractionReport> extract_girth_subgraph(
    const Hypergraph& h, const Hypergraph& host, int l, std::uint64_t seed,
    const VertexMap* forced_map) {
  if (host.r != h.r)
    throw std::invalid_argument("host uniformity must match input");
  if (auto g = girth(host); g && *g <= l)
    throw PreconditionError("host girth must exceed " + std::to_string(l));
  VertexMap chi = forced_map ? *forced_map
                             : random_vertex_map(h.n, host.n, seed);
  if (chi.source_n != h.n || chi.target_n != host.n)
    throw std::invalid_argument("vertex map dimensions do not match");

  const int m = h.edge_count();
  std::vector<Edge> images(m);
  for (int i = 0; i < m; ++i) images[i] = image_of(h.edges[i], chi);

  // edges meeting each edge, via shared vertices
  std::vector<std::vector<int>> by_vertex(h.n + 1);
  for (int i = 0; i < m; ++i)
    for (int v : h.edges[i]) by_vertex[v].push_back(i);

  EdgeList kept;
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(images[i].size()) != h.r) continue;
    if (!std::binary_search(host.edges.begin(), host.edges.end(), images[i]))
      continue;
    bool clash = false;
    std::set<int> neighbors;
    for (int v : h.edges[i])
      neighbors.insert(by_vertex[v].begin(), by_vertex[v].end());
    for (int j : neighbors) {
      if (j == i) continue;
      if (images[j] == images[i]) { clash = true; break; }
    }
    if (!clash) kept.push_back(h.edges[i]);
  }

  Hypergraph out = validate(std::move(kept), h.n, h.r);
  ExtractionReport rep;
  rep.seed = seed;
  rep.input_edges = m;
  rep.kept = out.edge_count();
  rep.cleanup_deleted = 0;
  rep.host_n = host.n;
  rep.host_edges = host.edge_count();
  auto g = girth(out);
  rep.girth_ok = !g || *g > l;
  if (!rep.girth_ok)
    throw std::logic_error("extractor output has a short cycle");
  rep.host_bound_ok = host_bound_holds(h, host.n);
  return {std::move(out), rep};
}

std::pair<Hypergraph, ExtractionReport> extract_triangle_subgraph(
    const Hypergraph& h, const Hypergraph& host, std::uint64_t seed,
    const VertexMap* forced_map) {
  if (host.r != h.r)
    throw std::invalid_argument("host uniformity must match input");
  if (auto g = girth(host); g && *g <= 3)
    throw PreconditionError("host girth must exceed 3");
  VertexMap chi = forced_map ? *forced_map
                             : random_vertex_map(h.n, host.n, seed);
  if (chi.source_n != h.n || chi.target_n != host.n)
    throw std::invalid_argument("vertex map dimensions do not match");

  EdgeList kept;
  for (const auto& e : h.edges) {
    Edge img = image_of(e, chi);
    if (static_cast<int>(img.size()) != h.r) continue;
    if (std::binary_search(host.edges.begin(), host.edges.end(), img))
      kept.push_back(e);
  }
  Hypergraph cur = validate(std::move(kept), h.n, h.r);
  const int kept_count = cur.edge_count();

  // cleanup: while a Berge cycle of length <= 3 remains, delete the
  // lexicographically smallest edge on one shortest such cycle
  int deleted = 0;
  while (auto w = find_berge_cycle(cur, 3)) {
    Edge victim = cur.edges[w->edge_indices[0]];
    for (int idx : w->edge_indices)
      victim = std::min(victim, cur.edges[idx]);
    EdgeList rest;
    rest.reserve(cur.edges.size() - 1);
    for (const auto& e : cur.edges)
      if (e != victim) rest.push_back(e);
    cur = validate(std::move(rest), h.n, h.r);
    ++deleted;
  }

  ExtractionReport rep;
  rep.seed = seed;
  rep.input_edges = h.edge_count();
  rep.kept = kept_count;
  rep.cleanup_deleted = deleted;
  rep.host_n = host.n;
  rep.host_edges = host.edge_count();
  rep.girth_ok = true;  // guaranteed by the cleanup loop's exit condition
  rep.host_bound_ok = host_bound_holds(h, host.n);
  return {std::move(cur), rep};
}

Hypergraph greedy_host(int t, int r, int l, std::uint64_t seed) {
  if (t < r) throw std::invalid_argument("need t >= r");
  if (l < 2) throw std::invalid_argument("need l >= 2");
  EdgeList universe = all_r_sets(t, r);
  Rng rng(seed);
  rng.shuffle(universe);
  IncidenceIndex idx(t, r);
  for (const auto& e : universe)
    if (!idx.creates_girth_at_most(e, l)) idx.push(e);
  return idx.to_hypergraph();
}

ProbabilityEstimate estimate_girth_probability(int n, int r, long long m,
                                               int l, long long trials,
                                               std::uint64_t seed,
                                               int threads) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (l < 2) throw std::invalid_argument("need l >= 2");
  ProbabilityEstimate est;
  est.trials = trials;
  est.outcomes.assign(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    RandomSpec spec;
    spec.n = n;
    spec.r = r;
    spec.model = RandomSpec::Model::Uniform;
    spec.m = m;
    spec.seed = child_seed(seed, i);
    Hypergraph h = sample(spec);
    auto g = girth(h);
    est.outcomes[i] = (!g || *g > l) ? 1 : 0;
  });
  est.successes = std::accumulate(est.outcomes.begin(), est.outcomes.end(),
                                  0LL, [](long long a, char b) { return a + b; });
  est.estimate = static_cast<double>(est.successes) / trials;
  est.half_width =
      1.96 * std::sqrt(est.estimate * (1.0 - est.estimate) / trials);
  return est;
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Fraction make_fraction(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return {num, den};
}

ExponentTable exponent_table(int l, int r) {
  if (l < 3 || r < 2 || (l == 3 && r < 3))
    throw std::invalid_argument("exponent table requires l >= 3, r >= 2 "
                                "(r >= 3 when l = 3)");
  ExponentTable t;
  t.l = l;
  t.r = r;
  t.k = l / 2;
  t.lambda = r == 2 ? 0 : lambda_param(r, l);
  const long long k = t.k, lam = t.lambda;
  t.upper_p = make_fraction(1, (r - 1 + lam) * k);
  t.lower_p = make_fraction(1, (r - 1) * k);
  t.dense_n = make_fraction(k + 1, k);
  t.flat_n = make_fraction(l, l - 1);
  t.p_min = make_fraction((1 - r) * (l - 1) + 1, l - 1);
  t.upper_flat_end = make_fraction(-(r - 1 + lam) * (k - 1), 2 * k - 1);
  t.upper_dense_start = make_fraction(-(r - 1 + lam) * (l - 1 - k), l - 1);
  t.lower_dense_start = make_fraction(-(r - 1) * (l - 1 - k), l - 1);
  t.gamma_lower = (r - 1) * k;
  t.gamma_upper = (r - 1 + lam) * k;
  t.conjectured_gamma =
      make_fraction(static_cast<long long>(r - 1) * (l - 2) + (r - 2), l - 2);
  if (l == 3) {
    // triangle case: both bounds are tight at exponent 1/(2r-3), and the
    // regime thresholds coincide
    t.lower_p = t.upper_p;
    t.upper_flat_end = t.upper_dense_start;
    t.lower_dense_start = t.upper_dense_start;
    t.gamma_lower = t.gamma_upper;
  }
  return t;
}

RandomExResult estimate_random_ex(int n, int r, double p, int l,
                                  long long trials, std::uint64_t seed,
                                  ExMethod method, int t_override,
                                  int threads,
                                  const CensusOptions& census_opts) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("need 0 <= p <= 1");
  RandomExResult res;
  res.n = n;
  res.r = r;
  res.l = l;
  res.p = p;

  int t_used = 0;
  if (method == ExMethod::Extractor) {
    t_used = t_override > 0
                 ? t_override
                 : static_cast<int>(std::llround(
                       std::pow(p, 1.0 / (r - 1)) * n));
    t_used = std::clamp(t_used, r, n);
  }
  res.t_used = t_used;

  res.trials.assign(trials, {});
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    ExTrial& row = res.trials[i];
    row.trial = static_cast<long long>(i);
    row.seed = child_seed(seed, i);
    RandomSpec spec;
    spec.n = n;
    spec.r = r;
    spec.model = RandomSpec::Model::Binomial;
    spec.p = p;
    spec.seed = child_seed(row.seed, 0);
    Hypergraph h = sample(spec);
    row.sample_edges = h.edge_count();
    if (method == ExMethod::Exact) {
      auto [size, sub] = max_girth_subgraph(h, l, census_opts);
      row.kept = size;
      row.deleted = 0;
      row.girth_ok = true;
      row.value = size;
    } else {
      Hypergraph host = greedy_host(t_used, r, l, child_seed(row.seed, 1));
      if (l == 3) {
        auto [sub, rep] =
            extract_triangle_subgraph(h, host, child_seed(row.seed, 2));
        row.kept = rep.kept;
        row.deleted = rep.cleanup_deleted;
        row.girth_ok = rep.girth_ok;
        row.value = sub.edge_count();
      } else {
        auto [sub, rep] =
            extract_girth_subgraph(h, host, l, child_seed(row.seed, 2));
        row.kept = rep.kept;
        row.deleted = rep.cleanup_deleted;
        row.girth_ok = rep.girth_ok;
        row.value = sub.edge_count();
      }
    }
  });

  double sum = 0.0;
  long long maxv = 0;
  for (const auto& row : res.trials) {
    sum += static_cast<double>(row.value);
    maxv = std::max(maxv, row.value);
  }
  res.mean = sum / static_cast<double>(trials);
  res.max_value = maxv;
  double sq = 0.0;
  for (const auto& row : res.trials) {
    double d = static_cast<double>(row.value) - res.mean;
    sq += d * d;
  }
  res.std_error = trials > 1
                      ? std::sqrt(sq / (static_cast<double>(trials) - 1.0) /
                                  static_cast<double>(trials))
                      : 0.0;
  return res;
}

}  // namespace bergelab
