#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fsna/centrality.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using fsna::FuzzyDigraph;
using fsna::IndexKind;
using fsna::IndexParameters;
using fsna::NodeIndex;
using fsna::Tfn;
using fsna::WeightSpec;

namespace {

IndexParameters with(WeightSpec weights, std::size_t step_cap = 4) {
  IndexParameters p;
  p.weights = weights;
  p.step_cap = step_cap;
  return p;
}

FuzzyDigraph two_in(const Tfn& a, const Tfn& b) {
  FuzzyDigraph g({"A", "B", "V"}, 1.0);
  g.set_edge("A", "V", a);
  g.set_edge("B", "V", b);
  return g;
}

}  // namespace

TEST_SUITE("centrality") {

TEST_CASE("in-degree examples") {
  const auto g = two_in(Tfn(0.2, 0.4, 0.6), Tfn(0.4, 0.6, 0.8));
  testing::check_close(fsna::fuzzy_in_degree(g, 2), Tfn(0.3, 0.5, 0.7));
  CHECK(fsna::fuzzy_in_degree(g, 2, with(WeightSpec::parse("1,0"))) == Tfn(0.4, 0.6, 0.8));
  CHECK(fsna::fuzzy_in_degree(g, 0) == Tfn(0, 0, 0));
  CHECK_THROWS_AS(fsna::fuzzy_in_degree(g, 3), std::out_of_range);
}

TEST_CASE("out-degree examples") {
  const auto g = two_in(Tfn(0.2, 0.4, 0.6), Tfn(0.4, 0.6, 0.8)).transposed();
  testing::check_close(fsna::fuzzy_out_degree(g, 2), Tfn(0.3, 0.5, 0.7));
  CHECK(fsna::fuzzy_out_degree(g, 2, with(WeightSpec::parse("0,1"))) == Tfn(0.2, 0.4, 0.6));
  FuzzyDigraph one({"A", "B"}, 1.0);
  one.set_edge("A", "B", Tfn(0.1, 0.5, 0.9));
  for (auto w : {"max", "min", "mean"})
    CHECK(fsna::fuzzy_out_degree(one, 0, with(WeightSpec::parse(w))) == Tfn(0.1, 0.5, 0.9));
}

TEST_CASE("total degree") {
  FuzzyDigraph g({"A", "V", "B"}, 1.0);
  g.set_edge("A", "V", Tfn(0.3, 0.5, 0.7));
  g.set_edge("V", "B", Tfn(0.1, 0.2, 0.3));
  testing::check_close(fsna::fuzzy_total_degree(g, 1), Tfn(0.4, 0.7, 1.0));
  CHECK(fsna::fuzzy_total_degree(g, 1) ==
        fsna::add(fsna::fuzzy_out_degree(g, 1), fsna::fuzzy_in_degree(g, 1)));
  const FuzzyDigraph isolated({"A", "B"}, 1.0);
  CHECK(fsna::fuzzy_total_degree(isolated, 0) == Tfn(0, 0, 0));
}

TEST_CASE("normalization divides by the scale") {
  FuzzyDigraph g({"A", "B"}, 4.0);
  g.set_edge("A", "B", Tfn(1, 2, 4));
  CHECK(fsna::fuzzy_in_degree(g, 1) == Tfn(0.25, 0.5, 1.0));
  IndexParameters raw;
  raw.normalized = false;
  CHECK(fsna::fuzzy_in_degree(g, 1, raw) == Tfn(1, 2, 4));
  IndexParameters wider;
  wider.scale_max = 8.0;
  CHECK(fsna::fuzzy_in_degree(g, 1, wider) == Tfn(0.125, 0.25, 0.5));
}

TEST_CASE("betweenness examples") {
  const auto g = testing::abc_network();
  const auto params = with(WeightSpec::Preset::mean, 2);
  CHECK(fsna::fuzzy_betweenness(g, 1, params) == 1.0);
  CHECK(fsna::fuzzy_betweenness(g, 0, params) == 0.0);
  CHECK(fsna::fuzzy_betweenness(g, 2, params) == 0.0);

  FuzzyDigraph pair({"A", "B"}, 1.0);
  pair.set_edge("A", "B", Tfn(0.5, 0.5, 0.5));
  pair.set_edge("B", "A", Tfn(0.5, 0.5, 0.5));
  CHECK(fsna::fuzzy_betweenness(pair, 0) == 0.0);
  CHECK(fsna::fuzzy_betweenness(pair, 1) == 0.0);

  const auto d = testing::diamond(Tfn(0.4, 0.5, 0.6));
  CHECK(fsna::fuzzy_betweenness(d, 1, with(WeightSpec::Preset::mean, 2)) == 0.5);
  CHECK(fsna::fuzzy_betweenness(d, 2, with(WeightSpec::Preset::mean, 2)) == 0.5);
}

TEST_CASE("closeness examples") {
  const auto g = testing::abc_network();
  const auto params = with(WeightSpec::Preset::mean, 2);
  testing::check_close(fsna::fuzzy_in_closeness(g, 2, params), Tfn(0.65, 0.75, 0.85));
  testing::check_close(fsna::fuzzy_out_closeness(g, 0, params), Tfn(0.6, 0.7, 0.8));
  testing::check_close(fsna::fuzzy_total_closeness(g, 2, params), Tfn(0.65, 0.75, 0.85));

  // In-star: every spoke points at the hub.
  const Tfn e(0.2, 0.3, 0.5);
  FuzzyDigraph star({"H", "a", "b", "c"}, 1.0);
  for (auto leaf : {"a", "b", "c"})
    star.set_edge(leaf, "H", e);
  for (std::size_t s = 1; s <= 4; ++s)
    testing::check_close(fsna::fuzzy_in_closeness(star, 0, with(WeightSpec::Preset::mean, s)), e);
  CHECK(fsna::fuzzy_in_closeness(star, 1) == Tfn(0, 0, 0));
  testing::check_close(fsna::fuzzy_out_closeness(star.transposed(), 0), e);
  CHECK(fsna::fuzzy_out_closeness(star, 0) == Tfn(0, 0, 0));

  const FuzzyDigraph isolated({"A", "B", "C"}, 1.0);
  CHECK(fsna::fuzzy_total_closeness(isolated, 1) == Tfn(0, 0, 0));
}

TEST_CASE("literal closeness direction swaps in and out") {
  const auto g = testing::abc_network();
  auto literal = with(WeightSpec::Preset::mean, 2);
  literal.closeness_direction = fsna::ClosenessDirection::literal;
  const auto conventional = with(WeightSpec::Preset::mean, 2);
  for (NodeIndex v = 0; v < 3; ++v) {
    CHECK(fsna::fuzzy_in_closeness(g, v, literal) == fsna::fuzzy_out_closeness(g, v, conventional));
    CHECK(fsna::fuzzy_out_closeness(g, v, literal) == fsna::fuzzy_in_closeness(g, v, conventional));
  }
}

TEST_CASE("closeness with one step is degree over all other nodes") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::grid_graph(rng, 6, 0.5, 1000, false);
    for (NodeIndex v = 0; v < 6; ++v) {
      std::vector<Tfn> direct;
      for (NodeIndex u = 0; u < 6; ++u)
        if (u != v)
          direct.push_back(g.edge(u, v).value_or(Tfn{}));
      const auto expected = fsna::fowa(fsna::WeightVector::mean_preset(5), direct);
      testing::check_close(fsna::fuzzy_in_closeness(g, v, with(WeightSpec::Preset::mean, 1)), expected);
    }
  }
}

TEST_CASE("symmetric networks double the in value") {
  FuzzyDigraph g({"A", "B", "C"}, 1.0);
  const Tfn ab(0.2, 0.3, 0.4), bc(0.5, 0.6, 0.9);
  g.set_edge("A", "B", ab);
  g.set_edge("B", "A", ab);
  g.set_edge("B", "C", bc);
  g.set_edge("C", "B", bc);
  for (NodeIndex v = 0; v < 3; ++v) {
    testing::check_close(fsna::fuzzy_total_degree(g, v), fsna::scale(2.0, fsna::fuzzy_in_degree(g, v)));
    testing::check_close(fsna::fuzzy_total_closeness(g, v), fsna::scale(2.0, fsna::fuzzy_in_closeness(g, v)));
  }
}

TEST_CASE("reciprocal closeness") {
  CHECK(fsna::reciprocal_closeness(Tfn(0.5, 0.5, 0.5)) == Tfn(2, 2, 2));
  CHECK(fsna::reciprocal_closeness(Tfn(0.25, 0.5, 1)) == Tfn(1, 2, 4));
  CHECK_THROWS_AS(fsna::reciprocal_closeness(Tfn(0, 0.5, 1)), std::domain_error);
}

TEST_CASE("crisp baseline examples") {
  FuzzyDigraph complete({"A", "B", "C", "D"}, 1.0);
  for (NodeIndex u = 0; u < 4; ++u)
    for (NodeIndex v = 0; v < 4; ++v)
      if (u != v)
        complete.set_edge(u, v, Tfn::crisp(0.5));
  for (const auto& b : fsna::crisp_baselines(complete)) {
    CHECK(b.in_degree == 3.0);
    CHECK(b.in_degree_normalized == 1.0);
    CHECK(b.out_degree_normalized == 1.0);
    CHECK(b.in_strength == doctest::Approx(1.5));
    CHECK(b.closeness == 1.0);
    CHECK(b.betweenness == 0.0);
  }

  FuzzyDigraph path({"a", "b", "c"}, 1.0);
  path.set_edge("a", "b", Tfn::crisp(0.5));
  path.set_edge("b", "c", Tfn::crisp(0.5));
  CHECK(fsna::crisp_baselines(path, 1).betweenness == 1.0);
  CHECK(fsna::crisp_baselines(path, 0).betweenness == 0.0);
  // c cannot reach anyone, so its closeness is 0.
  CHECK(fsna::crisp_baselines(path, 2).closeness == 0.0);

  FuzzyDigraph two({"a", "b"}, 1.0);
  two.set_edge("a", "b", Tfn(0.1, 0.2, 0.3));
  CHECK(fsna::crisp_baselines(two, 0).closeness == 1.0);
  CHECK(fsna::crisp_baselines(two, 1).closeness == 0.0);
}

TEST_CASE("crisp betweenness matches enumeration of shortest paths") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto g = oracle::grid_graph(rng, n, 0.4, 10, false);
    std::vector<double> expected(n, 0.0);
    for (NodeIndex s = 0; s < n; ++s)
      for (NodeIndex t = 0; t < n; ++t) {
        if (s == t)
          continue;
        const auto paths = oracle::simple_paths(g, s, t, n);
        if (paths.empty())
          continue;
        std::size_t shortest = n + 1;
        for (const auto& p : paths)
          shortest = std::min(shortest, p.size());
        std::size_t count = 0;
        std::vector<std::size_t> hits(n, 0);
        for (const auto& p : paths) {
          if (p.size() != shortest)
            continue;
          ++count;
          for (std::size_t k = 1; k + 1 < p.size(); ++k)
            ++hits[p[k]];
        }
        for (NodeIndex v = 0; v < n; ++v)
          expected[v] += static_cast<double>(hits[v]) / static_cast<double>(count);
      }
    const auto baselines = fsna::crisp_baselines(g);
    for (NodeIndex v = 0; v < n; ++v)
      CHECK(baselines[v].betweenness == doctest::Approx(expected[v]).epsilon(1e-12));
  }
}

TEST_CASE("fuzzy betweenness matches brute force") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto g = oracle::grid_graph(rng, n, 0.5, trial % 2 ? 4 : 1000, trial % 4 == 0, 5.0);
    const std::size_t cap = 1 + trial % 4;
    const auto expected = oracle::betweenness(g, cap, 1e-9);
    const auto got = fsna::fuzzy_betweenness_all(g, with(WeightSpec::Preset::mean, cap));
    CHECK_FALSE(got.truncated);
    for (NodeIndex v = 0; v < n; ++v)
      CHECK(std::abs(got.values[v] - expected[v]) <= 1e-9);
  }
}

TEST_CASE("each pair contributes a bounded amount") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6;
    const auto g = oracle::grid_graph(rng, n, 0.6, 3, false);
    const auto normalized = g.normalized();
    const fsna::PathSearch search(normalized, {4, 1e-9, 100000});
    for (NodeIndex s = 0; s < n; ++s)
      for (NodeIndex t = 0; t < n; ++t) {
        if (s == t)
          continue;
        const auto set = search.all_best_paths(s, t);
        if (set.paths.empty())
          continue;
        std::size_t longest = 0;
        std::vector<double> share(n, 0.0);
        for (const auto& p : set.paths) {
          longest = std::max(longest, p.length());
          for (std::size_t k = 1; k + 1 < p.nodes.size(); ++k)
            share[p.nodes[k]] += 1.0 / static_cast<double>(set.paths.size());
        }
        double total = 0.0;
        for (double x : share) {
          CHECK(x >= 0.0);
          CHECK(x <= 1.0 + 1e-12);
          total += x;
        }
        CHECK(total <= static_cast<double>(longest - 1) + 1e-12);
      }
  }
}

TEST_CASE("degenerate ties reduce to scalar formulas") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const auto g = oracle::grid_graph(rng, n, 0.5, 1000, true);
    for (NodeIndex v = 0; v < n; ++v) {
      std::vector<double> incoming;
      for (NodeIndex u = 0; u < n; ++u)
        if (g.has_edge(u, v))
          incoming.push_back(g.edge(u, v)->mode());
      double mean = 0.0;
      for (double x : incoming)
        mean += x;
      mean = incoming.empty() ? 0.0 : mean / static_cast<double>(incoming.size());
      CHECK(std::abs(fsna::cog(fsna::fuzzy_in_degree(g, v)) - mean) <= 1e-12);
    }
  }
}

TEST_CASE("higher orness through weight shifts never lowers in-degree") {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::grid_graph(rng, 6, 0.8, 1000, false);
    const NodeIndex v = trial % 6;
    const auto k = g.incoming(v).size();
    if (k < 2)
      continue;
    std::vector<double> w(k);
    double sum = 0.0;
    for (auto& x : w)
      sum += (x = u(rng));
    for (auto& x : w)
      x /= sum;
    auto shifted = w;
    const std::size_t j = 1 + static_cast<std::size_t>(u(rng) * static_cast<double>(k - 1));
    const std::size_t i = static_cast<std::size_t>(u(rng) * static_cast<double>(j));
    const double h = shifted[j] * u(rng);
    shifted[j] -= h;
    shifted[i] += h;
    const auto spec = [](const std::vector<double>& x) {
      std::string text;
      for (double y : x)
        text += (text.empty() ? "" : ",") + fsna::format_real(y);
      return WeightSpec::parse(text);
    };
    CHECK(fsna::orness(fsna::WeightVector(shifted)) >= fsna::orness(fsna::WeightVector(w)) - 1e-15);
    CHECK(fsna::cog(fsna::fuzzy_in_degree(g, v, with(spec(shifted)))) >=
          fsna::cog(fsna::fuzzy_in_degree(g, v, with(spec(w)))) - 1e-12);
  }
}

TEST_CASE("isolated nodes score zero everywhere") {
  FuzzyDigraph g({"A", "B", "C", "Z"}, 1.0);
  g.set_edge("A", "B", Tfn(0.2, 0.4, 0.6));
  g.set_edge("B", "C", Tfn(0.3, 0.4, 0.5));
  const auto reports = fsna::build_report(g, fsna::fuzzy_indices());
  for (const auto& report : reports)
    for (const auto& row : report.rows)
      if (row.node == 3) {
        CHECK(row.value == 0.0);
        if (row.fuzzy)
          CHECK(*row.fuzzy == Tfn(0, 0, 0));
      }
}

TEST_CASE("reports rank every node once") {
  const auto g = testing::abc_network();
  const auto reports = fsna::build_report(g, {IndexKind::betweenness}, with(WeightSpec::Preset::mean, 2));
  REQUIRE(reports.size() == 1);
  const auto& rows = reports[0].rows;
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].node == 1);
  CHECK(rows[0].value == 1.0);
  CHECK(rows[1].node == 0);
  CHECK(rows[2].node == 2);
  for (std::size_t r = 0; r < 3; ++r)
    CHECK(rows[r].rank == r + 1);
  CHECK_FALSE(rows[0].fuzzy.has_value());

  std::mt19937_64 rng(57);
  const auto h = oracle::grid_graph(rng, 8, 0.5, 4, false);
  auto all = fsna::fuzzy_indices();
  for (auto k : fsna::crisp_indices())
    all.push_back(k);
  for (const auto& report : fsna::build_report(h, all)) {
    std::vector<std::size_t> ranks, nodes;
    for (const auto& row : report.rows) {
      ranks.push_back(row.rank);
      nodes.push_back(row.node);
      if (row.fuzzy)
        CHECK(row.value == fsna::cog(*row.fuzzy));
      CHECK(row.fuzzy.has_value() == fsna::is_fuzzy_valued(report.index));
    }
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(ranks[i] == i + 1);
      CHECK(nodes[i] == i);
    }
    for (std::size_t i = 0; i + 1 < 8; ++i) {
      CHECK(report.rows[i].value >= report.rows[i + 1].value - 1e-9);
      if (std::abs(report.rows[i].value - report.rows[i + 1].value) <= 1e-10)
        CHECK(report.rows[i].node < report.rows[i + 1].node);
    }
  }
}

TEST_CASE("report values match the single-node functions") {
  std::mt19937_64 rng(58);
  const auto g = oracle::grid_graph(rng, 7, 0.5, 1000, false, 3.0);
  const auto params = with(WeightSpec::Preset::max, 3);
  const auto reports = fsna::build_report(g, fsna::fuzzy_indices(), params);
  for (const auto& report : reports)
    for (const auto& row : report.rows) {
      switch (report.index) {
        case IndexKind::in_degree: CHECK(*row.fuzzy == fsna::fuzzy_in_degree(g, row.node, params)); break;
        case IndexKind::out_degree: CHECK(*row.fuzzy == fsna::fuzzy_out_degree(g, row.node, params)); break;
        case IndexKind::total_degree: CHECK(*row.fuzzy == fsna::fuzzy_total_degree(g, row.node, params)); break;
        case IndexKind::in_closeness: CHECK(*row.fuzzy == fsna::fuzzy_in_closeness(g, row.node, params)); break;
        case IndexKind::out_closeness: CHECK(*row.fuzzy == fsna::fuzzy_out_closeness(g, row.node, params)); break;
        case IndexKind::total_closeness:
          CHECK(*row.fuzzy == fsna::fuzzy_total_closeness(g, row.node, params));
          break;
        case IndexKind::betweenness: CHECK(row.value == fsna::fuzzy_betweenness(g, row.node, params)); break;
        default: break;
      }
    }
}

TEST_CASE("index names") {
  for (auto k : fsna::fuzzy_indices())
    CHECK(fsna::parse_index_kind(fsna::to_string(k)) == k);
  for (auto k : fsna::crisp_indices())
    CHECK(fsna::parse_index_kind(fsna::to_string(k)) == k);
  CHECK(fsna::parse_index_kind("in_closeness") == IndexKind::in_closeness);
  CHECK_FALSE(fsna::parse_index_kind("eigenvector").has_value());
  CHECK(fsna::fuzzy_indices().size() == 7);
}

}  // TEST_SUITE
