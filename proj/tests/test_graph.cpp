#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "blowup/forbidden.hpp"
#include "blowup/graph.hpp"
#include "clique_oracle.hpp"

using namespace blowup;

TEST_CASE("neighbourhood of zero in the a = 0 slice") {
  auto g = build_graph(FamilyParam(5), Window{{0, 0}, {-2, 2}, {-2, 2}});
  auto zero = g.index_of({0, 0, 0});
  std::set<DivisorClass> nb;
  for (auto v : g.neighbours(zero).members())
    nb.insert(g.vertex(v));
  std::set<DivisorClass> six{{0, -1, 0}, {0, 0, -1}, {0, 1, 0}, {0, 0, 1}, {0, -1, 1}, {0, 1, -1}};
  CHECK(nb == six);
}

TEST_CASE("singleton window") {
  auto g = build_graph(FamilyParam(7), Window{{3, 3}, {1, 1}, {2, 2}});
  CHECK(g.size() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(max_clique(g).size == 1);
}

TEST_CASE("edge from zero to (1,0,0)") {
  auto g = build_graph(FamilyParam(5), Window{{0, 1}, {-1, 1}, {-1, 1}});
  CHECK(g.adjacent(g.index_of({0, 0, 0}), g.index_of({1, 0, 0})));
}

TEST_CASE("adjacency matches is_compatible and has no self loops") {
  FamilyParam n(4);
  auto g = build_graph(n, Window{{0, 2}, {-2, 2}, {-2, 2}});
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK_FALSE(g.adjacent(i, i));
    for (std::size_t j = 0; j < g.size(); ++j) {
      CHECK(g.adjacent(i, j) == g.adjacent(j, i));
      if (i != j)
        CHECK(g.adjacent(i, j) == is_compatible(n, g.vertex(i), g.vertex(j)).compatible());
    }
  }
}

TEST_CASE("threaded build gives the same graph") {
  FamilyParam n(5);
  Window w{{0, 3}, {-2, 3}, {-2, 3}};
  auto g1 = build_graph(n, w, 1);
  auto g4 = build_graph(n, w, 4);
  REQUIRE(g1.size() == g4.size());
  for (std::size_t i = 0; i < g1.size(); ++i)
    CHECK(g1.neighbours(i).members() == g4.neighbours(i).members());
}

TEST_CASE("complete graph on four vertices") {
  CompatGraph g(5, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      g.add_edge(i, j);
  auto r = max_clique(g);
  CHECK(r.size == 4);
  CHECK(g.is_clique(r.members));
}

TEST_CASE("clique number three in the a = 0 slice around zero") {
  auto g = build_graph(FamilyParam(5), Window{{0, 0}, {-3, 3}, {-3, 3}});
  auto zero = g.index_of({0, 0, 0});
  auto keep = g.neighbours(zero).members();
  keep.push_back(zero);
  std::sort(keep.begin(), keep.end());
  auto sub = g.induced(keep);
  CHECK(max_clique(sub).size == 3);
}

TEST_CASE("three consecutive a values give at most eight") {
  auto g = build_graph(FamilyParam(5), Window{{0, 2}, {-1, 2}, {-1, 2}});
  CHECK(max_clique(g).size <= 8);
}

TEST_CASE("clique search matches exhaustive search on random subgraphs") {
  std::mt19937 rng(2024);
  for (std::int64_t nv : {4, 6}) {
    auto g = build_graph(FamilyParam(nv), Window{{0, 3}, {-2, 3}, {-2, 3}});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::size_t> idx(g.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(std::uniform_int_distribution<std::size_t>(1, 20)(rng));
      std::sort(idx.begin(), idx.end());
      auto sub = g.induced(idx);
      auto r = max_clique(sub);
      CHECK(r.size == testing::naive_clique_number(sub));
      CHECK(sub.is_clique(r.members));
    }
  }
}

TEST_CASE("clique monotone under sub-windows and translation") {
  FamilyParam n(5);
  auto big = max_clique(build_graph(n, Window{{0, 2}, {-2, 3}, {-2, 3}})).size;
  auto small = max_clique(build_graph(n, Window{{0, 1}, {-1, 2}, {-1, 2}})).size;
  CHECK(small <= big);
  auto shifted = max_clique(build_graph(n, Window{{5, 7}, {1, 6}, {-4, 1}})).size;
  CHECK(shifted == big);
}

TEST_CASE("max clique containing a vertex") {
  auto g = build_graph(FamilyParam(6), Window{{0, 2}, {-2, 3}, {-2, 3}});
  auto zero = g.index_of({0, 0, 0});
  auto r = max_clique_containing(g, zero);
  CHECK(std::find(r.members.begin(), r.members.end(), zero) != r.members.end());
  CHECK(g.is_clique(r.members));
  CHECK(r.size <= max_clique(g).size);
}

TEST_CASE("maximal cliques on a small graph") {
  // path 0-1-2 plus triangle 2-3-4
  CompatGraph g(5, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(2, 4);
  std::set<std::vector<std::size_t>> seen;
  for_each_maximal_clique(g, [&](const std::vector<std::size_t>& c) { seen.insert(c); });
  std::set<std::vector<std::size_t>> want{{0, 1}, {1, 2}, {2, 3, 4}};
  CHECK(seen == want);
}

TEST_CASE("graph export") {
  auto g = build_graph(FamilyParam(5), Window{{0, 0}, {0, 1}, {0, 0}});
  nlohmann::json j = g;
  CHECK(j["n"] == 5);
  CHECK(j["vertices"].dump() == "[[0,0,0],[0,1,0]]");
  CHECK(j["edges"].dump() == "[[0,1]]");
  CHECK(j["window"]["b"].dump() == "[0,1]");
  auto dot = to_dot(g);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("(0,1,0)") != std::string::npos);
}

TEST_CASE("window parsing") {
  auto w = parse_window("0..2,-1..3,4");
  CHECK(w == Window{{0, 2}, {-1, 3}, {4, 4}});
  CHECK(w.size() == 15);
  CHECK_THROWS(parse_window("0..2,-1..3"));
  CHECK_THROWS(parse_window("2..0,0,0"));
  CHECK_THROWS(parse_window("a..b,0,0"));
  nlohmann::json j = w;
  CHECK(j.get<Window>() == w);
}
