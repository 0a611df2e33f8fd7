#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fsna/paths.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using fsna::FuzzyDigraph;
using fsna::NodeIndex;
using fsna::PathSearch;
using fsna::PathSearchOptions;
using fsna::Tfn;

TEST_SUITE("paths") {

TEST_CASE("path intensity examples") {
  FuzzyDigraph g({"A", "B", "C", "D"}, 1.0);
  g.set_edge("A", "B", Tfn(0.6, 0.7, 0.8));
  g.set_edge("B", "C", Tfn(0.4, 0.5, 0.6));
  g.set_edge("C", "D", Tfn(0.8, 0.9, 1.0));
  const std::vector<NodeIndex> abcd{0, 1, 2, 3};
  CHECK(fsna::path_intensity(g, abcd) == Tfn(0.4, 0.5, 0.6));
  const std::vector<NodeIndex> ab{0, 1};
  CHECK(fsna::path_intensity(g, ab) == Tfn(0.6, 0.7, 0.8));

  FuzzyDigraph h({"A", "B", "C"}, 1.0);
  h.set_edge("A", "B", Tfn(0.2, 0.4, 0.6));
  h.set_edge("B", "C", Tfn(0.1, 0.4, 0.7));
  const std::vector<NodeIndex> abc{0, 1, 2};
  CHECK(fsna::path_intensity(h, abc) == Tfn(0.2, 0.4, 0.6));
}

TEST_CASE("invalid paths") {
  const auto g = testing::abc_network();
  const std::vector<NodeIndex> missing{1, 0};
  const std::vector<NodeIndex> repeated{0, 1, 0};
  const std::vector<NodeIndex> single{0};
  CHECK_THROWS_AS(fsna::path_intensity(g, missing), fsna::InvalidPath);
  CHECK_THROWS_AS(fsna::path_intensity(g, repeated), fsna::InvalidPath);
  CHECK_THROWS_AS(fsna::path_intensity(g, single), fsna::InvalidPath);
}

TEST_CASE("best path examples") {
  const auto g = testing::abc_network();
  const auto two = fsna::best_path(g, 0, 2, 2);
  REQUIRE(two.has_value());
  CHECK(two->nodes == std::vector<NodeIndex>{0, 1, 2});
  CHECK(two->intensity == Tfn(0.6, 0.7, 0.8));
  CHECK(two->rank == doctest::Approx(0.7));
  CHECK(two->length() == 2);

  const auto one = fsna::best_path(g, 0, 2, 1);
  REQUIRE(one.has_value());
  CHECK(one->nodes == std::vector<NodeIndex>{0, 2});
  CHECK(one->intensity == Tfn(0.05, 0.1, 0.15));

  CHECK_FALSE(fsna::best_path(g, 2, 0, 4).has_value());
  CHECK_THROWS_AS(fsna::best_path(g, 0, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(fsna::best_path(g, 0, 9, 2), std::out_of_range);
  CHECK_THROWS_AS(PathSearch(g, PathSearchOptions{0, 1e-9, 10}), std::invalid_argument);
}

TEST_CASE("all best paths examples") {
  const auto g = testing::abc_network();
  const auto set = fsna::all_best_paths(g, 0, 2, {2, 1e-9, 100000});
  REQUIRE(set.paths.size() == 1);
  CHECK(set.paths[0].nodes == std::vector<NodeIndex>{0, 1, 2});
  CHECK_FALSE(set.truncated);

  const auto d = testing::diamond(Tfn(0.4, 0.5, 0.6));
  const auto both = fsna::all_best_paths(d, 0, 3, {2, 1e-9, 100000});
  REQUIRE(both.paths.size() == 2);
  CHECK(both.paths[0].nodes == std::vector<NodeIndex>{0, 1, 3});
  CHECK(both.paths[1].nodes == std::vector<NodeIndex>{0, 2, 3});

  auto direct = testing::abc_network();
  const auto only = fsna::all_best_paths(direct, 0, 2, {1, 1e-9, 100000});
  REQUIRE(only.paths.size() == 1);
  CHECK(only.paths[0].nodes == std::vector<NodeIndex>{0, 2});

  const auto capped = fsna::all_best_paths(d, 0, 3, {2, 1e-9, 1});
  CHECK(capped.paths.size() == 1);
  CHECK(capped.truncated);
}

TEST_CASE("connected intensity and matrix examples") {
  const auto g = testing::abc_network();
  CHECK(fsna::connected_intensity(g, 1, 1, 2) == Tfn(1, 1, 1));
  CHECK(fsna::connected_intensity(g, 2, 0, 2) == Tfn(0, 0, 0));
  CHECK(fsna::connected_intensity(g, 0, 2, 2) == Tfn(0.6, 0.7, 0.8));

  const FuzzyDigraph empty({"A", "B"}, 1.0);
  const auto m = fsna::intensity_matrix(empty, 4);
  CHECK(m.at(0, 0) == Tfn(1, 1, 1));
  CHECK(m.at(1, 1) == Tfn(1, 1, 1));
  CHECK(m.at(0, 1) == Tfn(0, 0, 0));
  CHECK(m.at(1, 0) == Tfn(0, 0, 0));

  FuzzyDigraph single({"A", "B"}, 1.0);
  single.set_edge("A", "B", Tfn(0.2, 0.3, 0.4));
  const auto s = fsna::intensity_matrix(single, 4);
  CHECK(s.at(0, 1) == Tfn(0.2, 0.3, 0.4));
  CHECK(s.at(1, 0) == Tfn(0, 0, 0));

  CHECK(fsna::intensity_matrix(g, 2).at(0, 2) == Tfn(0.6, 0.7, 0.8));
}

TEST_CASE("best paths agree with exhaustive enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto g = oracle::grid_graph(rng, n, 0.5, trial % 2 ? 5 : 1000, trial % 3 == 0);
    const std::size_t cap = 1 + trial % 4;
    const PathSearch search(g, {cap, 1e-9, 100000});
    for (NodeIndex u = 0; u < n; ++u) {
      const auto widths = search.bottleneck_from(u);
      for (NodeIndex v = 0; v < n; ++v) {
        if (u == v)
          continue;
        const auto expected = oracle::best_paths(g, u, v, cap, 1e-9);
        const auto best = search.best_path(u, v);
        REQUIRE(best.has_value() == expected.reachable);
        if (!expected.reachable) {
          CHECK(widths[v] == -std::numeric_limits<double>::infinity());
          CHECK(search.all_best_paths(u, v).paths.empty());
          continue;
        }
        CHECK(widths[v] == expected.value);
        CHECK(best->rank == oracle::bottleneck(g, expected.preferred));
        CHECK(best->rank >= expected.value - 1e-9);
        CHECK(best->nodes == expected.preferred);
        CHECK(best->intensity == oracle::weakest_tie(g, best->nodes, 1e-9));
        const auto all = search.all_best_paths(u, v);
        std::vector<std::vector<NodeIndex>> got;
        for (const auto& p : all.paths) {
          got.push_back(p.nodes);
          CHECK(p.rank >= expected.value - 1e-9);
        }
        CHECK(got == expected.tied);
        CHECK(std::find(got.begin(), got.end(), best->nodes) != got.end());
      }
    }
  }
}

TEST_CASE("longer step caps never weaken the best path") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::grid_graph(rng, 7, 0.4, 1000, false);
    for (NodeIndex u = 0; u < 7; ++u)
      for (NodeIndex v = 0; v < 7; ++v) {
        if (u == v)
          continue;
        for (std::size_t s = 1; s < 6; ++s) {
          const auto shorter = fsna::best_path(g, u, v, s);
          const auto longer = fsna::best_path(g, u, v, s + 1);
          if (shorter) {
            REQUIRE(longer.has_value());
            CHECK(longer->rank >= shorter->rank);
          }
        }
      }
  }
}

TEST_CASE("crisp ties reduce to the widest path on scalars") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const auto g = oracle::grid_graph(rng, n, 0.5, 1000, true);
    std::vector<std::vector<double>> strength(n, std::vector<double>(n, -std::numeric_limits<double>::infinity()));
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = 0; v < n; ++v)
        if (g.has_edge(u, v))
          strength[u][v] = g.edge(u, v)->mode();
    const std::size_t cap = 1 + trial % 4;
    const auto widest = oracle::widest_scalar(strength, cap);
    const auto m = fsna::intensity_matrix(g, cap);
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = 0; v < n; ++v) {
        if (u == v)
          continue;
        const double expected = widest[u][v] == -std::numeric_limits<double>::infinity() ? 0.0 : widest[u][v];
        CHECK(m.at(u, v) == Tfn::crisp(expected));
      }
  }
}

TEST_CASE("symmetric networks give symmetric intensity matrices") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 6;
    auto g = oracle::grid_graph(rng, n, 0.4, 1000, false);
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v))
          g.set_edge(v, u, *g.edge(u, v));
        else
          g.remove_edge(v, u);
      }
    const auto m = fsna::intensity_matrix(g, 3);
    for (NodeIndex u = 0; u < n; ++u)
      for (NodeIndex v = 0; v < n; ++v)
        CHECK(fsna::cog(m.at(u, v)) == doctest::Approx(fsna::cog(m.at(v, u))).epsilon(1e-12));
  }
}

}  // TEST_SUITE
