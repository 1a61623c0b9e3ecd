// bergelab command line tool: girth / encode / decode / census / random.
// All outputs are deterministic for a fixed seed and parameter set,
// independent of --threads (timings are suppressed unless --timing).

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "bergelab/census.hpp"
#include "bergelab/parallel.hpp"
#include "bergelab/encode.hpp"
#include "bergelab/hypergraph.hpp"
#include "bergelab/json_io.hpp"
#include "bergelab/randex.hpp"
#include "bergelab/rng.hpp"

namespace {

using namespace bergelab;

void emit_error(const std::string& kind, const std::string& message) {
  Json err{{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ValidationError& e) {
    emit_error("validation", e.what());
    return 2;
  } catch (const SizeGuardError& e) {
    emit_error("size_guard", e.what());
    return 1;
  } catch (const PreconditionError& e) {
    emit_error("precondition", e.what());
    return 1;
  } catch (const NotInImageError& e) {
    emit_error("not_in_image", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    emit_error("usage", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "1,3,7..9" -> {1,3,7,8,9}
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("empty list entry in '" + s + "'");
    auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        int lo = std::stoi(part.substr(0, dots));
        int hi = std::stoi(part.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("descending range");
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("cannot parse integer list '" + s + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("integer out of range in list '" + s + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + s + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number list '" + s + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + s + "'");
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("BERGE_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- girth --

void cmd_girth(const std::string& input) {
  Hypergraph h = hypergraph_from_json(parse_json_text(read_input(input)));
  auto g = girth(h);
  Json out{{"command", "girth"},
           {"n", h.n},
           {"r", h.r},
           {"edges", h.edge_count()},
           {"linear", is_linear(h)},
           {"girth", g ? Json(*g) : Json(nullptr)},
           {"witness", Json(nullptr)}};
  if (g) {
    auto w = find_berge_cycle(h, *g);
    if (w) out["witness"] = to_json(*w);
  }
  print_json(out);
}

// ------------------------------------------------------- encode / decode --

void cmd_encode(const std::string& mode, int l, const std::string& input) {
  Hypergraph h = hypergraph_from_json(parse_json_text(read_input(input)));
  if (mode == "book") {
    print_json(to_json(encode_book(h, l)));
  } else if (mode == "shadow") {
    print_json(to_json(encode_shadow(h)));
  } else {
    throw std::invalid_argument("unknown encode mode '" + mode + "'");
  }
}

void cmd_decode(const std::string& mode, const std::string& input) {
  Json j = parse_json_text(read_input(input));
  if (mode == "book") {
    print_json(to_json(decode_book(tuple_from_json(j))));
  } else if (mode == "shadow") {
    print_json(to_json(decode_shadow(shadow_record_from_json(j))));
  } else {
    throw std::invalid_argument("unknown decode mode '" + mode + "'");
  }
}

// --------------------------------------------------------------- census --

struct CensusCli {
  std::string mode = "girth";
  std::string n_list, m_list = "0", r_list, l_list;
  std::string kind = "girth";  // inner filter for --mode atmost
  long long c = -1;            // verify1.3 slack; -1 = use default constant
  double budget = 1e8;
  int threads = 0;
  std::string format = "json";
  bool timing = false;
};

void cmd_census(const CensusCli& cli) {
  CensusOptions opts;
  opts.node_budget = cli.budget;
  opts.threads = resolve_threads(cli.threads);
  auto ns = parse_int_list(cli.n_list);
  auto rs = parse_int_list(cli.r_list);
  auto ls = parse_int_list(cli.l_list);
  auto ms = parse_int_list(cli.m_list);
  const bool csv = cli.format == "csv";
  if (cli.format != "csv" && cli.format != "json")
    throw std::invalid_argument("format must be json or csv");

  Json rows = Json::array();
  std::ostringstream csv_out;

  auto ms_value = [&](double measured) -> Json {
    return cli.timing ? Json(measured) : Json(0);
  };
  auto ms_text = [&](double measured) {
    return cli.timing ? fmt_double(measured) : std::string("0");
  };

  if (cli.mode == "girth" || cli.mode == "single" || cli.mode == "atmost") {
    if (csv) csv_out << "n,m,r,l,count,nodes,ms\n";
    for (int n : ns)
      for (int m : ms)
        for (int r : rs)
          for (int l : ls) {
            CensusResult res;
            if (cli.mode == "girth") {
              res = count_girth(n, m, r, l, opts);
            } else if (cli.mode == "single") {
              res = count_single_forbidden(n, m, r, l, opts);
            } else {
              CensusMode inner = cli.kind == "single" ? CensusMode::Single
                                                      : CensusMode::Girth;
              if (cli.kind != "single" && cli.kind != "girth")
                throw std::invalid_argument("kind must be girth or single");
              res = count_at_most(n, m, r, l, inner, opts);
            }
            if (csv) {
              csv_out << res.n << ',' << res.m << ',' << res.r << ','
                      << res.l << ',' << res.count.str() << ',' << res.nodes
                      << ',' << ms_text(res.ms) << '\n';
            } else {
              rows.push_back(Json{{"n", res.n},
                                  {"m", res.m},
                                  {"r", res.r},
                                  {"l", res.l},
                                  {"count", bigint_to_json(res.count)},
                                  {"nodes", res.nodes},
                                  {"ms", ms_value(res.ms)}});
            }
          }
  } else if (cli.mode == "verify1.2" || cli.mode == "verify1.3") {
    const bool single = cli.mode == "verify1.3";
    if (csv) {
      csv_out << (single ? "n,m,r,l,lhs,rhs,exponent,holds,c,min_c\n"
                         : "n,m,r,l,lhs,rhs,exponent,holds\n");
    }
    for (int n : ns)
      for (int m : ms)
        for (int r : rs)
          for (int l : ls) {
            InequalityReport rep;
            if (single) {
              long long c = cli.c >= 0 ? cli.c : default_single_constant(r, l);
              rep = verify_reduction_single(n, m, r, l, c, opts);
            } else {
              rep = verify_reduction_general(n, m, r, l, opts);
            }
            if (csv) {
              csv_out << rep.n << ',' << rep.m << ',' << rep.r << ','
                      << rep.l << ',' << rep.lhs.str() << ','
                      << rep.rhs.str() << ',' << rep.exponent << ','
                      << (rep.holds ? 1 : 0);
              if (single)
                csv_out << ',' << rep.c << ',' << fmt_double(rep.min_c);
              csv_out << '\n';
            } else {
              Json row{{"n", rep.n},           {"m", rep.m},
                       {"r", rep.r},           {"l", rep.l},
                       {"lhs", bigint_to_json(rep.lhs)},
                       {"rhs", bigint_to_json(rep.rhs)},
                       {"exponent", rep.exponent},
                       {"holds", rep.holds}};
              if (single) {
                row["c"] = rep.c;
                row["min_c"] = rep.min_c;
              }
              rows.push_back(std::move(row));
            }
          }
  } else if (cli.mode == "ex") {
    if (csv) csv_out << "n,m,r,l,count,nodes,ms\n";
    for (int n : ns)
      for (int r : rs)
        for (int l : ls) {
          auto [size, witness] = ex_girth(n, r, l, opts);
          if (csv) {
            csv_out << n << ',' << size << ',' << r << ',' << l << ','
                    << size << ",0,0\n";
          } else {
            rows.push_back(Json{{"n", n},
                                {"r", r},
                                {"l", l},
                                {"ex", size},
                                {"witness", to_json(witness)}});
          }
        }
  } else {
    throw std::invalid_argument("unknown census mode '" + cli.mode + "'");
  }

  if (csv) {
    std::cout << csv_out.str();
  } else {
    print_json(Json{{"command", "census"}, {"mode", cli.mode}, {"rows", rows}});
  }
}

// --------------------------------------------------------------- random --

struct RandomCli {
  std::string experiment;
  int n = 0, r = 0, l = 0;
  long long m = -1;
  std::string p_list;
  int t = 0;
  long long trials = 1000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string method = "extractor";
  std::string extractor = "girth";
  bool plot_data = false;
  std::string format = "json";
  double budget = 1e8;
  int threads = 0;
};

void random_prob(const RandomCli& cli, int threads) {
  if (cli.m < 0) throw std::invalid_argument("--m is required for prob");
  auto est = estimate_girth_probability(cli.n, cli.r, cli.m, cli.l,
                                        cli.trials, cli.seed, threads);
  double fitted_a = est.estimate > 0 && cli.m > 0
                        ? std::pow(est.estimate, -1.0 / cli.m)
                        : 0.0;
  Json summary{{"command", "random"},
               {"experiment", "prob"},
               {"n", cli.n},
               {"r", cli.r},
               {"m", cli.m},
               {"l", cli.l},
               {"trials", est.trials},
               {"seed", cli.seed},
               {"successes", est.successes},
               {"estimate", est.estimate},
               {"half_width", est.half_width},
               {"fitted_a", est.estimate > 0 ? Json(fitted_a) : Json(nullptr)}};
  if (cli.format == "csv") {
    std::cout << "trial,seed,n,r,l,p_or_m,kept,deleted,girth_ok\n";
    for (long long i = 0; i < est.trials; ++i) {
      std::cout << i << ',' << child_seed(cli.seed, i) << ',' << cli.n << ','
                << cli.r << ',' << cli.l << ',' << cli.m << ',' << cli.m
                << ",0," << (est.outcomes[i] ? 1 : 0) << '\n';
    }
    std::cout << "# summary " << summary.dump() << "\n";
  } else {
    print_json(summary);
  }
}

void random_extract(const RandomCli& cli, int threads) {
  const bool binomial = !cli.p_list.empty();
  double p = 0.0;
  if (binomial) {
    auto ps = parse_double_list(cli.p_list);
    if (ps.size() != 1)
      throw std::invalid_argument("extract takes a single --p value");
    p = ps[0];
  } else if (cli.m < 0) {
    throw std::invalid_argument("extract needs --p or --m");
  }
  if (cli.extractor != "girth" && cli.extractor != "triangle")
    throw std::invalid_argument("extractor must be girth or triangle");
  const int target_l = cli.extractor == "triangle" ? 3 : cli.l;

  double p_eff =
      binomial ? p
               : static_cast<double>(cli.m) /
                     bergelab::binomial(cli.n, cli.r).convert_to<double>();
  int t = cli.t > 0 ? cli.t
                    : static_cast<int>(std::llround(
                          std::pow(p_eff, 1.0 / (cli.r - 1)) * cli.n));
  t = std::clamp(t, cli.r, cli.n);

  struct Row {
    std::uint64_t seed = 0;
    long long sample_edges = 0, kept = 0, deleted = 0;
    bool girth_ok = false, host_bound_ok = false;
    long long host_edges = 0;
  };
  std::vector<Row> rows(cli.trials);
  parallel_for(static_cast<std::size_t>(cli.trials), threads,
               [&](std::size_t i) {
                 Row& row = rows[i];
                 row.seed = child_seed(cli.seed, i);
                 RandomSpec spec;
                 spec.n = cli.n;
                 spec.r = cli.r;
                 if (binomial) {
                   spec.model = RandomSpec::Model::Binomial;
                   spec.p = p;
                 } else {
                   spec.model = RandomSpec::Model::Uniform;
                   spec.m = cli.m;
                 }
                 spec.seed = child_seed(row.seed, 0);
                 Hypergraph h = sample(spec);
                 row.sample_edges = h.edge_count();
                 Hypergraph host =
                     greedy_host(t, cli.r, target_l, child_seed(row.seed, 1));
                 row.host_edges = host.edge_count();
                 if (cli.extractor == "triangle") {
                   auto [sub, rep] = extract_triangle_subgraph(
                       h, host, child_seed(row.seed, 2));
                   row.kept = rep.kept;
                   row.deleted = rep.cleanup_deleted;
                   row.girth_ok = rep.girth_ok;
                   row.host_bound_ok = rep.host_bound_ok;
                 } else {
                   auto [sub, rep] = extract_girth_subgraph(
                       h, host, cli.l, child_seed(row.seed, 2));
                   row.kept = rep.kept;
                   row.deleted = rep.cleanup_deleted;
                   row.girth_ok = rep.girth_ok;
                   row.host_bound_ok = rep.host_bound_ok;
                 }
               });

  if (cli.format == "csv") {
    std::cout << "trial,seed,n,r,l,p_or_m,kept,deleted,girth_ok\n";
    for (long long i = 0; i < cli.trials; ++i) {
      const Row& row = rows[i];
      std::cout << i << ',' << row.seed << ',' << cli.n << ',' << cli.r << ','
                << target_l << ','
                << (binomial ? fmt_double(p) : std::to_string(cli.m)) << ','
                << row.kept << ',' << row.deleted << ','
                << (row.girth_ok ? 1 : 0) << '\n';
    }
  } else {
    Json jrows = Json::array();
    for (long long i = 0; i < cli.trials; ++i) {
      const Row& row = rows[i];
      jrows.push_back(Json{{"trial", i},
                           {"seed", row.seed},
                           {"sample_edges", row.sample_edges},
                           {"kept", row.kept},
                           {"deleted", row.deleted},
                           {"girth_ok", row.girth_ok},
                           {"host_edges", row.host_edges},
                           {"host_bound_ok", row.host_bound_ok}});
    }
    print_json(Json{{"command", "random"},
                    {"experiment", "extract"},
                    {"n", cli.n},
                    {"r", cli.r},
                    {"l", target_l},
                    {"model", binomial ? "binomial" : "uniform"},
                    {"p_or_m", binomial ? Json(p) : Json(cli.m)},
                    {"t", t},
                    {"extractor", cli.extractor},
                    {"trials", cli.trials},
                    {"seed", cli.seed},
                    {"rows", jrows}});
  }
}

void random_ex(const RandomCli& cli, int threads) {
  if (cli.p_list.empty())
    throw std::invalid_argument("--p is required for the ex experiment");
  auto ps = parse_double_list(cli.p_list);
  ExMethod method;
  if (cli.method == "extractor") method = ExMethod::Extractor;
  else if (cli.method == "exact") method = ExMethod::Exact;
  else throw std::invalid_argument("method must be extractor or exact");
  CensusOptions census_opts;
  census_opts.node_budget = cli.budget;

  std::vector<RandomExResult> results;
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    results.push_back(estimate_random_ex(
        cli.n, cli.r, ps[pi], cli.l, cli.trials,
        child_seed(cli.seed, 1000000 + pi), method, cli.t, threads,
        census_opts));
  }

  if (cli.format == "csv") {
    std::cout << "trial,seed,n,r,l,p_or_m,kept,deleted,girth_ok\n";
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
      for (const auto& row : results[pi].trials)
        std::cout << row.trial << ',' << row.seed << ',' << cli.n << ','
                  << cli.r << ',' << cli.l << ',' << fmt_double(ps[pi]) << ','
                  << row.kept << ',' << row.deleted << ','
                  << (row.girth_ok ? 1 : 0) << '\n';
    Json summary = Json::array();
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
      summary.push_back(Json{{"p", ps[pi]},
                             {"mean", results[pi].mean},
                             {"std_error", results[pi].std_error},
                             {"max", results[pi].max_value},
                             {"t_used", results[pi].t_used}});
    std::cout << "# summary " << summary.dump() << "\n";
  } else {
    Json jres = Json::array();
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
      jres.push_back(Json{{"p", ps[pi]},
                          {"t_used", results[pi].t_used},
                          {"trials", cli.trials},
                          {"mean", results[pi].mean},
                          {"std_error", results[pi].std_error},
                          {"max", results[pi].max_value}});
    }
    Json out{{"command", "random"},
             {"experiment", "ex"},
             {"n", cli.n},
             {"r", cli.r},
             {"l", cli.l},
             {"method", cli.method},
             {"trials", cli.trials},
             {"seed", cli.seed},
             {"results", jres}};
    if (cli.plot_data) {
      Json pd = Json::array();
      for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        if (ps[pi] > 0 && results[pi].mean > 0)
          pd.push_back(Json::array(
              {std::log(ps[pi]), std::log(results[pi].mean)}));
      }
      out["plot_data"] = pd;
    }
    print_json(out);
  }
}

void random_exponents(const RandomCli& cli) {
  ExponentTable t = exponent_table(cli.l, cli.r);
  if (cli.format == "csv") {
    auto line = [](const std::string& q, const Fraction& f) {
      std::cout << q << ',' << f.num << ',' << f.den << ','
                << fmt_double(f.value()) << '\n';
    };
    std::cout << "quantity,num,den,value\n";
    std::cout << "k," << t.k << ",1," << t.k << '\n';
    std::cout << "lambda," << t.lambda << ",1," << t.lambda << '\n';
    line("upper_p", t.upper_p);
    line("lower_p", t.lower_p);
    line("dense_n", t.dense_n);
    line("flat_n", t.flat_n);
    line("p_min", t.p_min);
    line("upper_flat_end", t.upper_flat_end);
    line("upper_dense_start", t.upper_dense_start);
    line("lower_dense_start", t.lower_dense_start);
    std::cout << "gamma_lower," << t.gamma_lower << ",1," << t.gamma_lower
              << '\n';
    std::cout << "gamma_upper," << t.gamma_upper << ",1," << t.gamma_upper
              << '\n';
    line("conjectured_gamma", t.conjectured_gamma);
  } else {
    print_json(Json{{"command", "random"},
                    {"experiment", "exponents"},
                    {"table", to_json(t)}});
  }
}

void cmd_random(const RandomCli& cli) {
  int threads = resolve_threads(cli.threads);
  if (cli.format != "csv" && cli.format != "json")
    throw std::invalid_argument("format must be json or csv");
  if (cli.experiment == "exponents") {
    random_exponents(cli);
    return;
  }
  if (!cli.seed_given)
    throw std::invalid_argument("--seed is required for randomized experiments");
  if (cli.experiment == "prob") random_prob(cli, threads);
  else if (cli.experiment == "extract") random_extract(cli, threads);
  else if (cli.experiment == "ex") random_ex(cli, threads);
  else throw std::invalid_argument("unknown experiment '" + cli.experiment + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"berge girth laboratory"};
  app.require_subcommand(1);

  std::string input = "-";

  auto* sub_girth = app.add_subcommand("girth", "girth and witness of a hypergraph");
  sub_girth->add_option("--input", input, "hypergraph JSON file, - for stdin");

  std::string enc_mode = "book";
  int enc_l = 0;
  auto* sub_encode = app.add_subcommand("encode", "encode a hypergraph");
  sub_encode->add_option("--mode", enc_mode, "book or shadow")->required();
  sub_encode->add_option("--l", enc_l, "forbidden cycle length bound (book)");
  sub_encode->add_option("--input", input, "hypergraph JSON file, - for stdin");

  std::string dec_mode = "book";
  auto* sub_decode = app.add_subcommand("decode", "decode an encoded object");
  sub_decode->add_option("--mode", dec_mode, "book or shadow")->required();
  sub_decode->add_option("--input", input, "encoded JSON file, - for stdin");

  CensusCli census_cli;
  auto* sub_census = app.add_subcommand("census", "exact counts and checks");
  sub_census->add_option("--mode", census_cli.mode,
                         "girth | single | atmost | verify1.2 | verify1.3 | ex")
      ->required();
  sub_census->add_option("--n", census_cli.n_list, "vertex counts, e.g. 4,6..8")
      ->required();
  sub_census->add_option("--m", census_cli.m_list, "edge counts");
  sub_census->add_option("--r", census_cli.r_list, "uniformities")->required();
  sub_census->add_option("--l", census_cli.l_list, "cycle length bounds")
      ->required();
  sub_census->add_option("--kind", census_cli.kind,
                         "filter for atmost: girth | single");
  sub_census->add_option("--c", census_cli.c, "slack constant for verify1.3");
  sub_census->add_option("--budget", census_cli.budget,
                         "enumeration size guard");
  sub_census->add_option("--threads", census_cli.threads, "worker threads");
  sub_census->add_option("--format", census_cli.format, "json | csv");
  sub_census->add_flag("--timing", census_cli.timing,
                       "report wall-clock times (breaks byte determinism)");

  RandomCli random_cli;
  auto* sub_random = app.add_subcommand("random", "randomized experiments");
  sub_random->add_option("--experiment", random_cli.experiment,
                         "prob | extract | ex | exponents")
      ->required();
  sub_random->add_option("--n", random_cli.n, "vertex count");
  sub_random->add_option("--r", random_cli.r, "uniformity");
  sub_random->add_option("--l", random_cli.l, "cycle length bound");
  sub_random->add_option("--m", random_cli.m, "edge count (uniform model)");
  sub_random->add_option("--p", random_cli.p_list,
                         "edge probabilities (binomial model)");
  sub_random->add_option("--t", random_cli.t, "host vertex count override");
  sub_random->add_option("--trials", random_cli.trials, "number of trials");
  auto* seed_opt =
      sub_random->add_option("--seed", random_cli.seed, "master RNG seed");
  sub_random->add_option("--method", random_cli.method, "extractor | exact");
  sub_random->add_option("--extractor", random_cli.extractor,
                         "girth | triangle");
  sub_random->add_flag("--plot-data", random_cli.plot_data,
                       "emit (log p, log mean) pairs");
  sub_random->add_option("--format", random_cli.format, "json | csv");
  sub_random->add_option("--budget", random_cli.budget,
                         "enumeration size guard (exact method)");
  sub_random->add_option("--threads", random_cli.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  random_cli.seed_given = seed_opt->count() > 0;

  if (sub_girth->parsed())
    return run_guarded([&] { cmd_girth(input); });
  if (sub_encode->parsed()) {
    return run_guarded([&] {
      if (enc_mode == "book" && enc_l == 0)
        throw std::invalid_argument("--l is required for book encoding");
      cmd_encode(enc_mode, enc_l, input);
    });
  }
  if (sub_decode->parsed())
    return run_guarded([&] { cmd_decode(dec_mode, input); });
  if (sub_census->parsed())
    return run_guarded([&] { cmd_census(census_cli); });
  if (sub_random->parsed())
    return run_guarded([&] { cmd_random(random_cli); });
  return 2;
}
