#include <doctest.h>

#include <algorithm>
#include <set>

#include "bergelab/encode.hpp"
#include "bergelab/hypergraph.hpp"
#include "bergelab/randex.hpp"
#include "bergelab/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace bergelab;

namespace {

Hypergraph fano() {
  return validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                   {2, 5, 7}, {3, 4, 7}, {3, 5, 6}},
                  7, 3);
}

// union of the component 2-graphs of an encoded tuple
Hypergraph union_graph(const EncodedTuple& t) {
  std::set<Edge> uni;
  for (const auto& g : t.graphs) uni.insert(g.edges.begin(), g.edges.end());
  return validate(EdgeList(uni.begin(), uni.end()), t.n, 2);
}

// girth > l subhypergraph of {1..n}: random subset of a greedy maximal one
Hypergraph random_girth_instance(int n, int r, int l, int max_m,
                                 std::uint64_t seed) {
  Rng rng(seed);
  Hypergraph host = greedy_host(n, r, l, rng.next_u64());
  EdgeList pool = host.edges;
  rng.shuffle(pool);
  int want = std::min<int>(max_m, static_cast<int>(pool.size()));
  want = static_cast<int>(rng.next_below(want + 1));
  pool.resize(want);
  return validate(pool, n, r);
}

}  // namespace

TEST_CASE("lambda_param values and errors") {
  CHECK(lambda_param(3, 3) == 1);
  CHECK(lambda_param(4, 3) == 2);
  CHECK(lambda_param(5, 3) == 3);
  CHECK(lambda_param(3, 4) == 1);
  CHECK(lambda_param(4, 4) == 1);
  CHECK(lambda_param(6, 4) == 2);
  CHECK(lambda_param(7, 4) == 3);
  CHECK(lambda_param(8, 5) == 2);
  CHECK_THROWS_AS(lambda_param(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(lambda_param(3, 2), std::invalid_argument);
}

TEST_CASE("build_book structure over a grid") {
  for (int r = 3; r <= 8; ++r) {
    for (int l = 3; l <= 6; ++l) {
      BookGraph b = build_book(r, l);
      const int lambda = lambda_param(r, l);
      CHECK(b.r == r);
      CHECK(b.page_limit == l);
      CHECK(b.spine == std::pair<int, int>{1, 2});
      CHECK(static_cast<int>(b.pages.size()) == lambda);
      CHECK(b.edge_count() == r - 1 + lambda);
      CHECK(b.edge_order[0] == std::pair<int, int>{1, 2});

      // pages run from 1 to 2, have at most l vertices, and their interiors
      // partition {3..r}
      std::vector<int> interior;
      for (const auto& page : b.pages) {
        REQUIRE(page.size() >= 3);
        CHECK(static_cast<int>(page.size()) <= l);
        CHECK(page.front() == 1);
        CHECK(page.back() == 2);
        for (std::size_t i = 1; i + 1 < page.size(); ++i)
          interior.push_back(page[i]);
      }
      std::sort(interior.begin(), interior.end());
      std::vector<int> expect;
      for (int v = 3; v <= r; ++v) expect.push_back(v);
      CHECK(interior == expect);

      // edge_order lists the spine then all page edges, without repeats
      std::set<std::pair<int, int>> uniq(b.edge_order.begin(),
                                         b.edge_order.end());
      CHECK(uniq.size() == b.edge_order.size());
      std::set<std::pair<int, int>> from_pages{{1, 2}};
      for (const auto& page : b.pages)
        for (std::size_t i = 0; i + 1 < page.size(); ++i)
          from_pages.insert({std::min(page[i], page[i + 1]),
                             std::max(page[i], page[i + 1])});
      CHECK(uniq == from_pages);
    }
  }
}

TEST_CASE("phi_book projects edges onto book edge positions") {
  Hypergraph h = validate({{1, 2, 3}}, 3, 3);
  BookGraph b = build_book(3, 3);
  CHECK(phi_book(h, b, 1).edges == EdgeList{{1, 2}});
  CHECK(phi_book(h, b, 2).edges == EdgeList{{1, 3}});
  CHECK(phi_book(h, b, 3).edges == EdgeList{{2, 3}});

  Hypergraph g = validate({{2, 4, 7}}, 7, 3);
  CHECK(phi_book(g, b, 1).edges == EdgeList{{2, 4}});  // positions 1,2
  CHECK(phi_book(g, b, 2).edges == EdgeList{{2, 7}});  // positions 1,3
  CHECK(phi_book(g, b, 3).edges == EdgeList{{4, 7}});  // positions 2,3
}

TEST_CASE("encode_book basics and preconditions") {
  Hypergraph h = validate({{1, 2, 3}}, 3, 3);
  EncodedTuple t = encode_book(h, 3);
  CHECK(t.r == 3);
  CHECK(t.l == 3);
  CHECK(t.n == 3);
  CHECK(t.graphs.size() == 3);  // r - 1 + lambda = 3
  for (const auto& g : t.graphs) CHECK(g.edge_count() == 1);
  CHECK(decode_book(t) == h);

  // girth must exceed l
  CHECK_THROWS_AS(encode_book(fano(), 3), PreconditionError);
  CHECK_THROWS_AS(
      encode_book(validate({{1, 2, 3}, {1, 2, 4}}, 4, 3), 3),
      PreconditionError);
  CHECK_THROWS_AS(encode_book(h, 2), std::invalid_argument);  // l >= 3

  // empty hypergraph round trip
  Hypergraph none = validate({}, 5, 3);
  EncodedTuple te = encode_book(none, 4);
  CHECK(te.graphs.size() == 3);
  for (const auto& g : te.graphs) CHECK(g.edge_count() == 0);
  CHECK(decode_book(te) == none);
}

TEST_CASE("encode/decode round trip exhaustively for small girth > l inputs") {
  for (int l = 3; l <= 4; ++l) {
    for (int n = 3; n <= 5; ++n) {
      for (int m = 0; m <= 3; ++m) {
        testutil::for_each_hypergraph(n, 3, m, [&](const Hypergraph& h) {
          auto g = girth(h);
          if (g && *g <= l) return;
          EncodedTuple t = encode_book(h, l);
          CHECK(static_cast<int>(t.graphs.size()) == 2 + lambda_param(3, l));
          for (const auto& comp : t.graphs) {
            CHECK(comp.edge_count() == h.edge_count());
            auto cg = girth(comp);
            CHECK((!cg || *cg > l));
          }
          CHECK(decode_book(t) == h);
          CHECK(find_books(union_graph(t), h.r, l) == h.edges);
        });
      }
    }
  }
}

TEST_CASE("encode/decode round trip on random r = 4 inputs") {
  for (int l = 3; l <= 4; ++l) {
    for (int t = 0; t < 30; ++t) {
      Hypergraph h =
          random_girth_instance(8, 4, l, 6, child_seed(1200 + l, t));
      EncodedTuple enc = encode_book(h, l);
      CHECK(static_cast<int>(enc.graphs.size()) == 3 + lambda_param(4, l));
      for (const auto& comp : enc.graphs) {
        CHECK(comp.edge_count() == h.edge_count());
        auto cg = girth(comp);
        CHECK((!cg || *cg > l));
      }
      CHECK(decode_book(enc) == h);
      CHECK(find_books(union_graph(enc), 4, l) == h.edges);
    }
  }
}

TEST_CASE("find_books on hand-built graphs") {
  // a triangle carries exactly one 3-vertex book
  Hypergraph tri = validate({{1, 2}, {1, 3}, {2, 3}}, 3, 2);
  CHECK(find_books(tri, 3, 3) == std::vector<Edge>{{1, 2, 3}});

  // a 4-cycle is a one-page book on 4 vertices for l = 4, none for l = 3
  Hypergraph c4 = validate({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4, 2);
  CHECK(find_books(c4, 4, 4) == std::vector<Edge>{{1, 2, 3, 4}});
  CHECK(find_books(c4, 4, 3).empty());
  CHECK(find_books(c4, 3, 4).empty());  // no 3-set carries a book

  // triangle inside a larger vertex set: no 4-vertex book
  Hypergraph tri5 = validate({{1, 2}, {1, 3}, {2, 3}}, 5, 2);
  CHECK(find_books(tri5, 4, 4).empty());
  CHECK(find_books(tri5, 3, 4) == std::vector<Edge>{{1, 2, 3}});

  CHECK(find_books(validate({}, 4, 2), 3, 3).empty());
}

TEST_CASE("decode_book rejects tuples outside the image") {
  // star of three triples through vertex 1: no Berge cycle at all
  Hypergraph h = validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}, 7, 3);
  REQUIRE(!girth(h).has_value());
  EncodedTuple good = encode_book(h, 3);
  REQUIRE(decode_book(good) == h);

  // component count mismatch
  EncodedTuple bad = good;
  bad.graphs.pop_back();
  CHECK_THROWS_AS(decode_book(bad), NotInImageError);

  // edge count mismatch in one component
  bad = good;
  EdgeList fewer = bad.graphs[0].edges;
  fewer.pop_back();
  bad.graphs[0] = validate(fewer, bad.n, 2);
  CHECK_THROWS_AS(decode_book(bad), NotInImageError);

  // consistent sizes but wrong content
  bad = good;
  REQUIRE(bad.graphs[1].edges != bad.graphs[0].edges);
  bad.graphs[1] = bad.graphs[0];
  CHECK_THROWS_AS(decode_book(bad), NotInImageError);
}

TEST_CASE("core_sets: frozen example and oracle agreement") {
  Hypergraph h = validate({{2, 3, 6}, {1, 3, 5}, {1, 2, 4}}, 6, 3);
  CHECK(core_sets(h) == std::vector<Edge>{{1, 2, 3}});
  CHECK(core_sets(validate({{1, 2, 3}}, 3, 3)).empty());
  CHECK(core_sets(validate({}, 4, 3)).empty());

  // in the complete 3-graph on 4 vertices every triple is a core set
  CHECK(core_sets(complete_hypergraph(4, 3)) == all_r_sets(4, 3));

  for (int t = 0; t < 80; ++t) {
    Hypergraph g = testutil::random_instance(6, 3, 6, child_seed(1313, t));
    CHECK(core_sets(g) == oracles::core_sets(g));
  }
  for (int t = 0; t < 15; ++t) {
    Hypergraph g = testutil::random_instance(7, 4, 6, child_seed(1414, t));
    CHECK(core_sets(g) == oracles::core_sets(g));
  }
}

TEST_CASE("clique candidates split into edges and core sets") {
  // holds for every hypergraph: an (r-1)-clique candidate either is an edge
  // or admits a system of distinct covering edges
  for (int t = 0; t < 80; ++t) {
    int r = 3 + static_cast<int>(t % 2);
    Hypergraph g =
        testutil::random_instance(r + 3, r, 7, child_seed(1515, t));
    std::set<Edge> expect(g.edges.begin(), g.edges.end());
    for (const Edge& s : core_sets(g)) expect.insert(s);
    CHECK(clique_candidates(shadow(g, r - 1)) ==
          std::vector<Edge>(expect.begin(), expect.end()));
  }
}

TEST_CASE("core set count bound for cycle-free hypergraphs") {
  // no Berge cycle of length exactly l  =>  at most l^2 r^2 m core sets
  for (int l = 3; l <= 4; ++l) {
    for (int t = 0; t < 60; ++t) {
      Hypergraph g = testutil::random_instance(6, 3, 6, child_seed(1616, t));
      if (has_berge_cycle_of_length(g, l)) continue;
      CHECK(static_cast<long long>(core_sets(g).size()) <=
            static_cast<long long>(l) * l * 3 * 3 * g.edge_count());
    }
  }
}

TEST_CASE("clique_candidates on hand-built systems") {
  CHECK(clique_candidates(shadow(complete_hypergraph(4, 3), 2)) ==
        all_r_sets(4, 3));
  KGraph sparse = validate_kgraph({{1, 2}, {2, 3}}, 3, 2);
  CHECK(clique_candidates(sparse).empty());
  KGraph tri = validate_kgraph({{1, 2}, {1, 3}, {2, 3}}, 4, 2);
  CHECK(clique_candidates(tri) == std::vector<Edge>{{1, 2, 3}});
}

TEST_CASE("shadow encoding round trip and rejection") {
  for (int t = 0; t < 40; ++t) {
    int r = 3 + static_cast<int>(t % 2);
    Hypergraph g =
        testutil::random_instance(r + 3, r, 6, child_seed(1717, t));
    ShadowRecord rec = encode_shadow(g);
    CHECK(rec.r == g.r);
    CHECK(rec.n == g.n);
    CHECK(static_cast<int>(rec.layers.size()) == g.r);
    CHECK(decode_shadow(rec) == g);

    // the layers together cover exactly the (r-1)-shadow
    std::set<Edge> uni;
    for (const auto& layer : rec.layers)
      uni.insert(layer.sets.begin(), layer.sets.end());
    CHECK(EdgeList(uni.begin(), uni.end()) == shadow(g, g.r - 1).sets);
  }

  Hypergraph h = validate({{1, 2, 3}, {2, 3, 4}}, 4, 3);
  ShadowRecord rec = encode_shadow(h);

  ShadowRecord bad = rec;
  bad.edge_set.pop_back();
  CHECK_THROWS_AS(decode_shadow(bad), NotInImageError);

  bad = rec;
  EdgeList tampered = bad.layers[0].sets;
  tampered.push_back({1, 4});
  std::sort(tampered.begin(), tampered.end());
  bad.layers[0] = validate_kgraph(tampered, bad.n, bad.r - 1);
  CHECK_THROWS_AS(decode_shadow(bad), NotInImageError);
}
