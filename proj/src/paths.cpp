#include "fsna/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace fsna {

namespace {

constexpr double kAbsent = -std::numeric_limits<double>::infinity();
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct Label {
  double width;
  std::size_t hops;
  NodeIndex node;
};

// Max-heap on width; among equal widths fewer hops first.
struct NarrowerThan {
  bool operator()(const Label& a, const Label& b) const {
    if (a.width != b.width)
      return a.width < b.width;
    if (a.hops != b.hops)
      return a.hops > b.hops;
    return a.node > b.node;
  }
};

}  // namespace

Tfn path_intensity(const FuzzyDigraph& g, std::span<const NodeIndex> path, double tolerance) {
  if (path.size() < 2)
    throw InvalidPath("a path needs at least two nodes");
  std::vector<bool> seen(g.size(), false);
  for (NodeIndex v : path) {
    if (v >= g.size())
      throw InvalidPath("path names node index " + std::to_string(v) + " outside the graph");
    if (seen[v])
      throw InvalidPath("path repeats node '" + g.label(v) + "'");
    seen[v] = true;
  }
  std::optional<Tfn> weakest;
  double weakest_cog = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const auto& tie = g.edge(path[k], path[k + 1]);
    if (!tie)
      throw InvalidPath("no tie " + g.label(path[k]) + "->" + g.label(path[k + 1]));
    const double c = cog(*tie);
    if (!weakest || c < weakest_cog - tolerance) {
      weakest = *tie;
      weakest_cog = c;
    }
  }
  return *weakest;
}

PathSearch::PathSearch(const FuzzyDigraph& g, PathSearchOptions options)
    : graph_(&g), options_(options), n_(g.size()), strength_(n_ * n_, kAbsent) {
  if (options_.step_cap < 1)
    throw std::invalid_argument("step cap must be at least 1");
  if (!(options_.tie_eps >= 0.0))
    throw std::invalid_argument("tie_eps must be nonnegative");
  for (NodeIndex u = 0; u < n_; ++u)
    for (NodeIndex v = 0; v < n_; ++v)
      if (const auto& tie = g.edge(u, v))
        strength_[u * n_ + v] = cog(*tie);
}

std::vector<double> PathSearch::bottleneck_from(NodeIndex source) const {
  if (source >= n_)
    throw std::out_of_range("node index out of range");
  // Bottleneck Dijkstra over (node, hops) labels. Labels settle in order of
  // decreasing width, so a node settled with h hops dominates every later
  // label with >= h hops; each node settles at most step_cap + 1 times.
  std::vector<double> best(n_, kAbsent);
  std::vector<std::size_t> settled_hops(n_, kUnreachable);
  std::priority_queue<Label, std::vector<Label>, NarrowerThan> queue;
  queue.push({std::numeric_limits<double>::infinity(), 0, source});
  while (!queue.empty()) {
    const Label top = queue.top();
    queue.pop();
    if (top.hops >= settled_hops[top.node])
      continue;
    if (settled_hops[top.node] == kUnreachable)
      best[top.node] = top.width;
    settled_hops[top.node] = top.hops;
    if (top.hops == options_.step_cap)
      continue;
    for (NodeIndex v = 0; v < n_; ++v) {
      const double s = strength(top.node, v);
      if (s == kAbsent || settled_hops[v] <= top.hops + 1)
        continue;
      queue.push({std::min(top.width, s), top.hops + 1, v});
    }
  }
  best[source] = kAbsent;
  return best;
}

std::vector<std::size_t> PathSearch::hops_to(NodeIndex target, double threshold) const {
  std::vector<std::size_t> dist(n_, kUnreachable);
  std::vector<NodeIndex> frontier{target};
  dist[target] = 0;
  for (std::size_t d = 1; !frontier.empty() && d <= options_.step_cap; ++d) {
    std::vector<NodeIndex> next;
    for (NodeIndex v : frontier)
      for (NodeIndex u = 0; u < n_; ++u)
        if (dist[u] == kUnreachable && strength(u, v) >= threshold) {
          dist[u] = d;
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return dist;
}

double PathSearch::path_bottleneck(std::span<const NodeIndex> nodes) const {
  double width = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
    width = std::min(width, strength(nodes[k], nodes[k + 1]));
  return width;
}

std::optional<PathEvaluation> PathSearch::best_path_given(NodeIndex from, NodeIndex to,
                                                          double optimum) const {
  if (optimum == kAbsent)
    return std::nullopt;
  const double threshold = optimum - options_.tie_eps;
  const auto dist = hops_to(to, threshold);
  // The optimal path uses only ties >= optimum, so from lies within the cap.
  std::vector<NodeIndex> nodes{from};
  NodeIndex at = from;
  for (std::size_t remaining = dist[from]; remaining > 0; --remaining) {
    NodeIndex next = 0;
    while (!(strength(at, next) >= threshold && dist[next] == remaining - 1))
      ++next;
    nodes.push_back(next);
    at = next;
  }
  PathEvaluation eval;
  eval.intensity = path_intensity(*graph_, nodes, options_.tie_eps);
  eval.rank = path_bottleneck(nodes);
  eval.nodes = std::move(nodes);
  return eval;
}

std::optional<PathEvaluation> PathSearch::best_path(NodeIndex from, NodeIndex to) const {
  if (from >= n_ || to >= n_)
    throw std::out_of_range("node index out of range");
  if (from == to)
    throw std::invalid_argument("best_path needs two distinct nodes");
  return best_path_given(from, to, bottleneck_from(from)[to]);
}

BestPathSet PathSearch::all_best_paths(NodeIndex from, NodeIndex to) const {
  if (from >= n_ || to >= n_)
    throw std::out_of_range("node index out of range");
  if (from == to)
    throw std::invalid_argument("all_best_paths needs two distinct nodes");
  return all_best_paths(from, to, bottleneck_from(from)[to]);
}

BestPathSet PathSearch::all_best_paths(NodeIndex from, NodeIndex to, double optimum) const {
  BestPathSet result;
  if (optimum == kAbsent)
    return result;
  const double threshold = optimum - options_.tie_eps;
  const auto dist = hops_to(to, threshold);
  const std::size_t cap = options_.step_cap;

  std::vector<NodeIndex> path{from};
  std::vector<bool> on_path(n_, false);
  on_path[from] = true;
  // Depth-first in ascending node order, so paths come out lexicographically.
  // A branch is cut when the remaining hops cannot reach `to` over ties
  // that still clear the threshold.
  const auto extend = [&](const auto& self) -> void {
    const NodeIndex at = path.back();
    const std::size_t used = path.size() - 1;
    for (NodeIndex v = 0; v < n_ && !result.truncated; ++v) {
      if (on_path[v] || !(strength(at, v) >= threshold) || dist[v] == kUnreachable ||
          used + 1 + dist[v] > cap)
        continue;
      path.push_back(v);
      if (v == to) {
        if (result.paths.size() == options_.max_paths) {
          result.truncated = true;
        } else {
          PathEvaluation eval;
          eval.intensity = path_intensity(*graph_, path, options_.tie_eps);
          eval.rank = path_bottleneck(path);
          eval.nodes = path;
          result.paths.push_back(std::move(eval));
        }
      } else {
        on_path[v] = true;
        self(self);
        on_path[v] = false;
      }
      path.pop_back();
    }
  };
  extend(extend);
  return result;
}

Tfn PathSearch::connected_intensity(NodeIndex u, NodeIndex v) const {
  if (u >= n_ || v >= n_)
    throw std::out_of_range("node index out of range");
  if (u == v)
    return Tfn(1.0, 1.0, 1.0);
  if (auto p = best_path(u, v))
    return p->intensity;
  return Tfn{};
}

std::vector<Tfn> PathSearch::intensity_row(NodeIndex source) const {
  const auto widths = bottleneck_from(source);
  std::vector<Tfn> row(n_);
  for (NodeIndex v = 0; v < n_; ++v) {
    if (v == source)
      row[v] = Tfn(1.0, 1.0, 1.0);
    else if (auto p = best_path_given(source, v, widths[v]))
      row[v] = p->intensity;
  }
  return row;
}

std::optional<PathEvaluation> best_path(const FuzzyDigraph& g, NodeIndex from, NodeIndex to,
                                        std::size_t step_cap, double tie_eps) {
  return PathSearch(g, {step_cap, tie_eps}).best_path(from, to);
}

BestPathSet all_best_paths(const FuzzyDigraph& g, NodeIndex from, NodeIndex to,
                           const PathSearchOptions& options) {
  return PathSearch(g, options).all_best_paths(from, to);
}

Tfn connected_intensity(const FuzzyDigraph& g, NodeIndex u, NodeIndex v, std::size_t step_cap,
                        double tie_eps) {
  return PathSearch(g, {step_cap, tie_eps}).connected_intensity(u, v);
}

IntensityMatrix intensity_matrix(const FuzzyDigraph& g, std::size_t step_cap, double tie_eps,
                                 Execution policy) {
  const PathSearch search(g, {step_cap, tie_eps});
  const std::size_t n = g.size();
  IntensityMatrix m(n);
  const auto fill_row = [&](NodeIndex u) {
    const auto row = search.intensity_row(u);
    for (NodeIndex v = 0; v < n; ++v)
      m.at(u, v) = row[v];
  };
  for_each_index(n, policy, fill_row);
  return m;
}

}  // namespace fsna
