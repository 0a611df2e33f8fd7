#include "fsna/centrality.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace fsna {

namespace {

FuzzyDigraph rescaled(const FuzzyDigraph& g, double scale_max) {
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  FuzzyDigraph out(std::move(labels), scale_max);
  for (NodeIndex u = 0; u < g.size(); ++u)
    for (NodeIndex v = 0; v < g.size(); ++v)
      if (const auto& tie = g.edge(u, v))
        out.set_edge(u, v, *tie);
  return out;
}

FuzzyDigraph prepared(const FuzzyDigraph& g, const IndexParameters& params, bool normalize) {
  const FuzzyDigraph scaled = params.scale_max ? rescaled(g, *params.scale_max) : g;
  return normalize ? scaled.normalized() : scaled;
}

PathSearchOptions search_options(const IndexParameters& params) {
  return {params.step_cap, params.tie_eps, params.max_paths};
}

Tfn aggregate(const std::vector<Tfn>& values, const IndexParameters& params) {
  if (values.empty())
    return Tfn{};
  return fowa(params.weights.expand(values.size()), values, params.tie_eps);
}

void check_node(const FuzzyDigraph& g, NodeIndex v) {
  if (v >= g.size())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
}

// Connected intensities between v and every other node; `arriving` selects
// paths u -> v rather than v -> u.
std::vector<Tfn> intensities_around(const PathSearch& search, NodeIndex v, bool arriving) {
  std::vector<Tfn> values;
  const auto n = search.graph().size();
  if (arriving) {
    for (NodeIndex u = 0; u < n; ++u)
      if (u != v)
        values.push_back(search.connected_intensity(u, v));
  } else {
    const auto row = search.intensity_row(v);
    for (NodeIndex u = 0; u < n; ++u)
      if (u != v)
        values.push_back(row[u]);
  }
  return values;
}

bool in_closeness_arrives(const IndexParameters& params) {
  return params.closeness_direction == ClosenessDirection::degree_convention;
}

// Fractions contributed by all pairs (source, t), accumulated per node.
std::vector<double> betweenness_from(const PathSearch& search, NodeIndex source, bool& truncated) {
  const auto n = search.graph().size();
  std::vector<double> local(n, 0.0);
  std::vector<std::size_t> through(n, 0);
  const auto widths = search.bottleneck_from(source);
  for (NodeIndex t = 0; t < n; ++t) {
    if (t == source)
      continue;
    const auto set = search.all_best_paths(source, t, widths[t]);
    truncated = truncated || set.truncated;
    if (set.paths.empty())
      continue;
    std::fill(through.begin(), through.end(), 0);
    for (const auto& path : set.paths)
      for (std::size_t k = 1; k + 1 < path.nodes.size(); ++k)
        ++through[path.nodes[k]];
    const auto total = static_cast<double>(set.paths.size());
    for (NodeIndex v = 0; v < n; ++v)
      if (through[v] != 0)
        local[v] += static_cast<double>(through[v]) / total;
  }
  return local;
}

std::vector<std::size_t> hop_distances(const FuzzyDigraph& g, NodeIndex source) {
  constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), unreachable);
  std::queue<NodeIndex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const NodeIndex u = queue.front();
    queue.pop();
    for (NodeIndex v = 0; v < g.size(); ++v)
      if (g.has_edge(u, v) && dist[v] == unreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
  }
  return dist;
}

// Brandes' accumulation on the unweighted digraph, ordered pairs.
std::vector<double> crisp_betweenness(const FuzzyDigraph& g) {
  const auto n = g.size();
  std::vector<double> score(n, 0.0);
  for (NodeIndex s = 0; s < n; ++s) {
    std::vector<NodeIndex> order;
    std::vector<std::vector<NodeIndex>> preds(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<long> dist(n, -1);
    std::queue<NodeIndex> queue;
    sigma[s] = 1.0;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const NodeIndex u = queue.front();
      queue.pop();
      order.push_back(u);
      for (NodeIndex v = 0; v < n; ++v) {
        if (!g.has_edge(u, v))
          continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeIndex w = *it;
      for (NodeIndex u : preds[w])
        delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      if (w != s)
        score[w] += delta[w];
    }
  }
  return score;
}

}  // namespace

Tfn fuzzy_in_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  check_node(g, v);
  return aggregate(prepared(g, params, params.normalized).incoming(v), params);
}

Tfn fuzzy_out_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  check_node(g, v);
  return aggregate(prepared(g, params, params.normalized).outgoing(v), params);
}

Tfn fuzzy_total_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  return add(fuzzy_out_degree(g, v, params), fuzzy_in_degree(g, v, params));
}

Tfn fuzzy_in_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  check_node(g, v);
  const auto graph = prepared(g, params, params.normalized);
  const PathSearch search(graph, search_options(params));
  return aggregate(intensities_around(search, v, in_closeness_arrives(params)), params);
}

Tfn fuzzy_out_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  check_node(g, v);
  const auto graph = prepared(g, params, params.normalized);
  const PathSearch search(graph, search_options(params));
  return aggregate(intensities_around(search, v, !in_closeness_arrives(params)), params);
}

Tfn fuzzy_total_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  return add(fuzzy_in_closeness(g, v, params), fuzzy_out_closeness(g, v, params));
}

Tfn reciprocal_closeness(const Tfn& value) {
  if (!(value.left() > 0.0))
    throw std::domain_error("reciprocal_closeness: support " + to_string(value) +
                            " must be strictly positive");
  return Tfn(1.0 / value.right(), 1.0 / value.mode(), 1.0 / value.left());
}

BetweennessResult fuzzy_betweenness_all(const FuzzyDigraph& g, const IndexParameters& params,
                                        Execution policy) {
  const auto graph = prepared(g, params, true);
  const PathSearch search(graph, search_options(params));
  const auto n = graph.size();
  std::vector<std::vector<double>> per_source(n);
  std::vector<char> truncated(n, 0);
  const auto run_source = [&](NodeIndex s) {
    bool flag = false;
    per_source[s] = betweenness_from(search, s, flag);
    truncated[s] = flag;
  };
  for_each_index(n, policy, run_source);
  // Reduce in source order so the sum does not depend on scheduling.
  BetweennessResult result;
  result.values.assign(n, 0.0);
  for (NodeIndex s = 0; s < n; ++s) {
    for (NodeIndex v = 0; v < n; ++v)
      result.values[v] += per_source[s][v];
    result.truncated = result.truncated || truncated[s];
  }
  return result;
}

double fuzzy_betweenness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params) {
  check_node(g, v);
  return fuzzy_betweenness_all(g, params, Execution::serial).values[v];
}

std::vector<CrispBaselines> crisp_baselines(const FuzzyDigraph& g) {
  const auto n = g.size();
  const double others = n > 1 ? static_cast<double>(n - 1) : 0.0;
  std::vector<CrispBaselines> out(n);
  const auto between = crisp_betweenness(g);
  for (NodeIndex v = 0; v < n; ++v) {
    auto& b = out[v];
    for (NodeIndex u = 0; u < n; ++u) {
      if (const auto& tie = g.edge(u, v)) {
        b.in_degree += 1.0;
        b.in_strength += cog(*tie);
      }
      if (const auto& tie = g.edge(v, u)) {
        b.out_degree += 1.0;
        b.out_strength += cog(*tie);
      }
    }
    b.total_degree = b.in_degree + b.out_degree;
    if (n > 1) {
      b.in_degree_normalized = b.in_degree / others;
      b.out_degree_normalized = b.out_degree / others;
      b.total_degree_normalized = b.total_degree / others;
      const auto dist = hop_distances(g, v);
      double sum = 0.0;
      bool all_reached = true;
      for (NodeIndex u = 0; u < n; ++u) {
        if (u == v)
          continue;
        if (dist[u] == std::numeric_limits<std::size_t>::max())
          all_reached = false;
        else
          sum += static_cast<double>(dist[u]);
      }
      b.closeness = all_reached ? 1.0 / (sum / others) : 0.0;
    }
    b.betweenness = between[v];
  }
  return out;
}

CrispBaselines crisp_baselines(const FuzzyDigraph& g, NodeIndex v) {
  check_node(g, v);
  return crisp_baselines(g)[v];
}

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::in_degree: return "in-degree";
    case IndexKind::out_degree: return "out-degree";
    case IndexKind::total_degree: return "total-degree";
    case IndexKind::betweenness: return "betweenness";
    case IndexKind::in_closeness: return "in-closeness";
    case IndexKind::out_closeness: return "out-closeness";
    case IndexKind::total_closeness: return "total-closeness";
    case IndexKind::crisp_in_degree: return "crisp-in-degree";
    case IndexKind::crisp_out_degree: return "crisp-out-degree";
    case IndexKind::crisp_total_degree: return "crisp-total-degree";
    case IndexKind::crisp_closeness: return "crisp-closeness";
    case IndexKind::crisp_betweenness: return "crisp-betweenness";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  std::string canonical(name);
  std::replace(canonical.begin(), canonical.end(), '_', '-');
  for (auto kind : fuzzy_indices())
    if (to_string(kind) == canonical)
      return kind;
  for (auto kind : crisp_indices())
    if (to_string(kind) == canonical)
      return kind;
  return std::nullopt;
}

std::vector<IndexKind> fuzzy_indices() {
  return {IndexKind::in_degree,    IndexKind::out_degree,    IndexKind::total_degree,
          IndexKind::betweenness,  IndexKind::in_closeness,  IndexKind::out_closeness,
          IndexKind::total_closeness};
}

std::vector<IndexKind> crisp_indices() {
  return {IndexKind::crisp_in_degree, IndexKind::crisp_out_degree, IndexKind::crisp_total_degree,
          IndexKind::crisp_closeness, IndexKind::crisp_betweenness};
}

bool is_fuzzy_valued(IndexKind kind) {
  switch (kind) {
    case IndexKind::in_degree:
    case IndexKind::out_degree:
    case IndexKind::total_degree:
    case IndexKind::in_closeness:
    case IndexKind::out_closeness:
    case IndexKind::total_closeness:
      return true;
    default:
      return false;
  }
}

std::vector<CentralityReport> build_report(const FuzzyDigraph& g,
                                           const std::vector<IndexKind>& indices,
                                           const IndexParameters& params, Execution policy) {
  const auto n = g.size();
  const auto graph = prepared(g, params, params.normalized);

  const auto needs = [&](std::initializer_list<IndexKind> kinds) {
    return std::any_of(indices.begin(), indices.end(), [&](IndexKind k) {
      return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    });
  };

  IntensityMatrix intensities;
  if (needs({IndexKind::in_closeness, IndexKind::out_closeness, IndexKind::total_closeness}))
    intensities = intensity_matrix(graph, params.step_cap, params.tie_eps, policy);
  std::optional<BetweennessResult> between;
  if (needs({IndexKind::betweenness}))
    between = fuzzy_betweenness_all(g, params, policy);
  std::vector<CrispBaselines> crisp;
  if (needs({IndexKind::crisp_in_degree, IndexKind::crisp_out_degree,
             IndexKind::crisp_total_degree, IndexKind::crisp_closeness,
             IndexKind::crisp_betweenness}))
    crisp = crisp_baselines(g);

  const auto closeness_of = [&](NodeIndex v, bool arriving) {
    std::vector<Tfn> values;
    for (NodeIndex u = 0; u < n; ++u)
      if (u != v)
        values.push_back(arriving ? intensities.at(u, v) : intensities.at(v, u));
    return aggregate(values, params);
  };
  const bool in_arrives = in_closeness_arrives(params);

  std::vector<CentralityReport> reports;
  for (IndexKind kind : indices) {
    std::vector<std::optional<Tfn>> fuzzy(n);
    std::vector<double> values(n, 0.0);
    const auto compute = [&](NodeIndex v) {
      switch (kind) {
        case IndexKind::in_degree: fuzzy[v] = aggregate(graph.incoming(v), params); break;
        case IndexKind::out_degree: fuzzy[v] = aggregate(graph.outgoing(v), params); break;
        case IndexKind::total_degree:
          fuzzy[v] = add(aggregate(graph.outgoing(v), params), aggregate(graph.incoming(v), params));
          break;
        case IndexKind::in_closeness: fuzzy[v] = closeness_of(v, in_arrives); break;
        case IndexKind::out_closeness: fuzzy[v] = closeness_of(v, !in_arrives); break;
        case IndexKind::total_closeness:
          fuzzy[v] = add(closeness_of(v, in_arrives), closeness_of(v, !in_arrives));
          break;
        case IndexKind::betweenness: values[v] = between->values[v]; break;
        case IndexKind::crisp_in_degree: values[v] = crisp[v].in_degree; break;
        case IndexKind::crisp_out_degree: values[v] = crisp[v].out_degree; break;
        case IndexKind::crisp_total_degree: values[v] = crisp[v].total_degree; break;
        case IndexKind::crisp_closeness: values[v] = crisp[v].closeness; break;
        case IndexKind::crisp_betweenness: values[v] = crisp[v].betweenness; break;
      }
      if (fuzzy[v])
        values[v] = cog(*fuzzy[v]);
    };
    for_each_index(n, policy, compute);

    CentralityReport report;
    report.index = kind;
    report.truncated = kind == IndexKind::betweenness && between->truncated;
    const auto order = rank_descending_keys(values, params.tie_eps);
    for (std::size_t r = 0; r < order.size(); ++r)
      report.rows.push_back({order[r], fuzzy[order[r]], values[order[r]], r + 1});
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace fsna
