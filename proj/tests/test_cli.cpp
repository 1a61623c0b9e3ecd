#include <doctest.h>

#include <string>

#include "bergelab/encode.hpp"
#include "bergelab/hypergraph.hpp"
#include "bergelab/json_io.hpp"
#include "cli_harness.hpp"

using namespace bergelab;
using cliharness::CliResult;
using cliharness::run_cli;

namespace {

std::string fano_json() {
  Hypergraph h = validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                           {2, 5, 7}, {3, 4, 7}, {3, 5, 6}},
                          7, 3);
  return to_json(h).dump();
}

std::string star_json() {
  // pairwise intersections are all {1}: no Berge cycle at all
  Hypergraph h = validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}, 7, 3);
  return to_json(h).dump();
}

}  // namespace

TEST_CASE("cli girth: fano from stdin") {
  CliResult res = run_cli("girth", fano_json());
  REQUIRE(res.exit_code == 0);
  Json out = parse_json_text(res.out);
  CHECK(out.at("command") == "girth");
  CHECK(out.at("n") == 7);
  CHECK(out.at("r") == 3);
  CHECK(out.at("edges") == 7);
  CHECK(out.at("linear") == true);
  CHECK(out.at("girth") == 3);
  REQUIRE(!out.at("witness").is_null());
  Hypergraph h = hypergraph_from_json(parse_json_text(fano_json()));
  BergeCycleWitness w;
  w.length = out["witness"].at("length").get<int>();
  w.vertices = out["witness"].at("vertices").get<std::vector<int>>();
  w.edge_indices =
      out["witness"].at("edge_indices").get<std::vector<int>>();
  CHECK(w.length == 3);
  CHECK(verify_witness(h, w));
}

TEST_CASE("cli girth: acyclic input reports null girth") {
  CliResult res = run_cli("girth", star_json());
  REQUIRE(res.exit_code == 0);
  Json out = parse_json_text(res.out);
  CHECK(out.at("girth").is_null());
  CHECK(out.at("witness").is_null());
  CHECK(out.at("linear") == true);
}

TEST_CASE("cli encode/decode: book round trip") {
  CliResult enc = run_cli("encode --mode book --l 3", star_json());
  REQUIRE(enc.exit_code == 0);
  Json tuple = parse_json_text(enc.out);
  CHECK(tuple.at("r") == 3);
  CHECK(tuple.at("l") == 3);
  CHECK(tuple.at("graphs").size() == 3);  // 2 + lambda(3,3)

  CliResult dec = run_cli("decode --mode book", enc.out);
  REQUIRE(dec.exit_code == 0);
  CHECK(parse_json_text(dec.out) == parse_json_text(star_json()));
}

TEST_CASE("cli decode: corrupted tuple exits 1 with not_in_image") {
  CliResult enc = run_cli("encode --mode book --l 3", star_json());
  REQUIRE(enc.exit_code == 0);
  Json tuple = parse_json_text(enc.out);
  REQUIRE(tuple.at("graphs")[0].size() > 0);
  tuple["graphs"][0].erase(0);  // drop one edge from the first component
  CliResult dec = run_cli("decode --mode book", tuple.dump());
  CHECK(dec.exit_code == 1);
  Json err = parse_json_text(dec.err);
  CHECK(err.at("error") == "not_in_image");
}

TEST_CASE("cli encode/decode: shadow round trip") {
  CliResult enc = run_cli("encode --mode shadow", fano_json());
  REQUIRE(enc.exit_code == 0);
  CliResult dec = run_cli("decode --mode shadow", enc.out);
  REQUIRE(dec.exit_code == 0);
  CHECK(parse_json_text(dec.out) == parse_json_text(fano_json()));
}

TEST_CASE("cli census: csv rows are frozen and timing-free") {
  CliResult res = run_cli(
      "census --mode girth --n 4 --m 3 --r 2 --l 3 --format csv");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.out.rfind("n,m,r,l,count,nodes,ms\n", 0) == 0);
  const std::string row = res.out.substr(res.out.find('\n') + 1);
  CHECK(row.rfind("4,3,2,3,16,", 0) == 0);
  CHECK(row.substr(row.size() - 3) == ",0\n");  // ms column stays 0
}

TEST_CASE("cli census: ex mode csv") {
  CliResult res =
      run_cli("census --mode ex --n 7 --r 3 --l 2 --format csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "n,m,r,l,count,nodes,ms\n7,7,3,2,7,0,0\n");
}

TEST_CASE("cli census: budget exhaustion exits 1 with size_guard") {
  CliResult res = run_cli(
      "census --mode girth --n 6 --m 4 --r 3 --l 3 --budget 10");
  CHECK(res.exit_code == 1);
  Json err = parse_json_text(res.err);
  CHECK(err.at("error") == "size_guard");
}

TEST_CASE("cli: malformed json exits 2 with validation") {
  CliResult res = run_cli("girth", "{not json");
  CHECK(res.exit_code == 2);
  Json err = parse_json_text(res.err);
  CHECK(err.at("error") == "validation");
}

TEST_CASE("cli random: missing seed exits 2 with usage") {
  CliResult res = run_cli(
      "random --experiment prob --n 5 --r 3 --m 2 --l 2 --trials 10");
  CHECK(res.exit_code == 2);
  Json err = parse_json_text(res.err);
  CHECK(err.at("error") == "usage");
}

TEST_CASE("cli random: exponents table") {
  CliResult res = run_cli("random --experiment exponents --l 4 --r 3");
  REQUIRE(res.exit_code == 0);
  Json out = parse_json_text(res.out);
  CHECK(out.at("experiment") == "exponents");
  CHECK(out.at("table").at("upper_p").at("num") == 1);
  CHECK(out.at("table").at("upper_p").at("den") == 6);
  CHECK(out.at("table").at("gamma_upper") == 6);

  CliResult csv =
      run_cli("random --experiment exponents --l 4 --r 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind("quantity,num,den,value\n", 0) == 0);
  CHECK(csv.out.find("\nupper_p,1,6,") != std::string::npos);
  CHECK(csv.out.find("\nlower_p,1,4,") != std::string::npos);
}

TEST_CASE("cli random: prob csv carries per-trial outcomes and a summary") {
  CliResult res = run_cli(
      "random --experiment prob --n 5 --r 3 --m 2 --l 2 --trials 50 "
      "--seed 9 --format csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.rfind("trial,seed,n,r,l,p_or_m,kept,deleted,girth_ok\n", 0) ==
        0);
  const auto mark = res.out.find("# summary ");
  REQUIRE(mark != std::string::npos);
  Json summary = parse_json_text(res.out.substr(mark + 10));
  CHECK(summary.at("trials") == 50);
  CHECK(summary.at("successes").get<long long>() >= 0);
}

TEST_CASE("cli: outputs are byte-identical across thread counts") {
  const std::string cases[] = {
      "census --mode girth --n 4,5 --m 0..3 --r 2,3 --l 2,3 --format csv",
      "census --mode verify1.2 --n 4,5 --m 0..2 --r 3 --l 3",
      "census --mode verify1.3 --n 4 --m 0..2 --r 3 --l 3 --format csv",
      "random --experiment prob --n 5 --r 3 --m 2 --l 2 --trials 2000 "
      "--seed 42 --format csv",
      "random --experiment extract --n 8 --r 3 --l 2 --p 0.3 --trials 100 "
      "--seed 7",
      "random --experiment ex --n 7 --r 3 --l 2 --p 0.2,0.4 --trials 50 "
      "--seed 11 --format csv",
  };
  for (const std::string& base : cases) {
    CliResult one = run_cli(base + " --threads 1");
    REQUIRE(one.exit_code == 0);
    CliResult two = run_cli(base + " --threads 2");
    CliResult eight = run_cli(base + " --threads 8");
    CHECK(two.exit_code == 0);
    CHECK(eight.exit_code == 0);
    CHECK(one.out == two.out);
    CHECK(one.out == eight.out);
  }
  // environment fallback selects threads without changing bytes
  const std::string probe = cases[0];
  CliResult flag8 = run_cli(probe + " --threads 8");
  CliResult env8 = run_cli(probe, "", "BERGE_LAB_THREADS=8");
  REQUIRE(env8.exit_code == 0);
  CHECK(env8.out == flag8.out);
}
