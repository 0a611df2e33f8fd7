#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fsna/execution.hpp"
#include "fsna/graph.hpp"
#include "fsna/tfn.hpp"

namespace fsna {

/// Thrown by path_intensity for missing ties or repeated nodes.
class InvalidPath : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct PathEvaluation {
  std::vector<NodeIndex> nodes;
  Tfn intensity;  // the weakest tie along the path
  double rank = 0.0;  // smallest tie CoG along the path

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

struct PathSearchOptions {
  std::size_t step_cap = 4;
  double tie_eps = default_tolerance;
  std::size_t max_paths = 100000;
};

struct BestPathSet {
  std::vector<PathEvaluation> paths;
  /// Set when enumeration stopped at max_paths.
  bool truncated = false;
};

/// Weakest tie of a simple path by CoG; among ties within `tolerance` of
/// the minimum the earliest one wins.
Tfn path_intensity(const FuzzyDigraph& g, std::span<const NodeIndex> path,
                   double tolerance = default_tolerance);

/// Maximin (widest) path queries under a step cap, scored on tie CoG values.
/// Holds a dense copy of the tie strengths; the graph must outlive it.
class PathSearch {
public:
  /// Keeps a reference to g, which must outlive the search.
  explicit PathSearch(const FuzzyDigraph& g, PathSearchOptions options = {});
  PathSearch(FuzzyDigraph&&, PathSearchOptions = {}) = delete;

  const FuzzyDigraph& graph() const { return *graph_; }
  const PathSearchOptions& options() const { return options_; }

  /// Best bottleneck CoG from `source` to every node using at most step_cap
  /// ties; unreachable targets (and the source itself) get -infinity.
  std::vector<double> bottleneck_from(NodeIndex source) const;

  /// A path maximizing the bottleneck. Among paths within tie_eps of the
  /// optimum the shortest wins, then the lexicographically smallest node
  /// index sequence. Empty when `to` is unreachable within the cap.
  std::optional<PathEvaluation> best_path(NodeIndex from, NodeIndex to) const;

  /// Every simple path within the cap whose bottleneck is within tie_eps of
  /// the optimum, in lexicographic order.
  BestPathSet all_best_paths(NodeIndex from, NodeIndex to) const;
  /// Same, with the optimum already known from bottleneck_from(from)[to].
  BestPathSet all_best_paths(NodeIndex from, NodeIndex to, double optimum) const;

  /// (1,1,1) on the diagonal, (0,0,0) when unreachable, else the intensity
  /// of best_path.
  Tfn connected_intensity(NodeIndex u, NodeIndex v) const;

  /// Connected intensities from `source` to every node.
  std::vector<Tfn> intensity_row(NodeIndex source) const;

private:
  double strength(NodeIndex u, NodeIndex v) const { return strength_[u * n_ + v]; }
  double path_bottleneck(std::span<const NodeIndex> nodes) const;
  std::optional<PathEvaluation> best_path_given(NodeIndex from, NodeIndex to,
                                                double optimum) const;
  std::vector<std::size_t> hops_to(NodeIndex target, double threshold) const;

  const FuzzyDigraph* graph_;
  PathSearchOptions options_;
  std::size_t n_;
  std::vector<double> strength_;  // CoG per tie, -inf when absent
};

std::optional<PathEvaluation> best_path(const FuzzyDigraph& g, NodeIndex from, NodeIndex to,
                                        std::size_t step_cap,
                                        double tie_eps = default_tolerance);
BestPathSet all_best_paths(const FuzzyDigraph& g, NodeIndex from, NodeIndex to,
                           const PathSearchOptions& options);
Tfn connected_intensity(const FuzzyDigraph& g, NodeIndex u, NodeIndex v, std::size_t step_cap,
                        double tie_eps = default_tolerance);

/// Row-major n x n table of connected intensities.
class IntensityMatrix {
public:
  IntensityMatrix() = default;
  explicit IntensityMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::size_t size() const { return n_; }
  const Tfn& at(NodeIndex u, NodeIndex v) const { return cells_[u * n_ + v]; }
  Tfn& at(NodeIndex u, NodeIndex v) { return cells_[u * n_ + v]; }

  friend bool operator==(const IntensityMatrix&, const IntensityMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Tfn> cells_;
};

/// Rows are independent; the parallel policy fans out over sources.
IntensityMatrix intensity_matrix(const FuzzyDigraph& g, std::size_t step_cap,
                                 double tie_eps = default_tolerance,
                                 Execution policy = Execution::parallel);

}  // namespace fsna
