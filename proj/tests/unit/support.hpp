#pragma once

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "fsna/graph.hpp"
#include "fsna/tfn.hpp"

namespace testing {

inline std::string data_path(const std::string& relative) {
  return std::string(FSNA_TEST_DATA) + "/" + relative;
}

/// The A/B/C network: a weak direct tie A->C and a strong detour via B.
inline fsna::FuzzyDigraph abc_network() {
  fsna::FuzzyDigraph g({"A", "B", "C"}, 1.0);
  g.set_edge("A", "C", fsna::Tfn(0.05, 0.1, 0.15));
  g.set_edge("A", "B", fsna::Tfn(0.6, 0.7, 0.8));
  g.set_edge("B", "C", fsna::Tfn(0.7, 0.8, 0.9));
  return g;
}

/// A -> B -> D and A -> C -> D with identical ties.
inline fsna::FuzzyDigraph diamond(const fsna::Tfn& tie) {
  fsna::FuzzyDigraph g({"A", "B", "C", "D"}, 1.0);
  g.set_edge("A", "B", tie);
  g.set_edge("B", "D", tie);
  g.set_edge("A", "C", tie);
  g.set_edge("C", "D", tie);
  return g;
}

inline void check_close(const fsna::Tfn& actual, const fsna::Tfn& expected, double eps = 1e-12) {
  CHECK(std::abs(actual.left() - expected.left()) <= eps);
  CHECK(std::abs(actual.mode() - expected.mode()) <= eps);
  CHECK(std::abs(actual.right() - expected.right()) <= eps);
}

inline fsna::Tfn random_tfn(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  double a = d(rng), b = d(rng), c = d(rng);
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return fsna::Tfn(a, b, c);
}

}  // namespace testing
