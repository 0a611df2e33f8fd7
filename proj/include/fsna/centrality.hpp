#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsna/aggregation.hpp"
#include "fsna/execution.hpp"
#include "fsna/graph.hpp"
#include "fsna/paths.hpp"
#include "fsna/tfn.hpp"

namespace fsna {

/// Which way in/out closeness look. `degree_convention` aggregates paths
/// arriving at v for "in" and leaving v for "out", as the degree indices
/// do; `literal` swaps the two.
enum class ClosenessDirection { degree_convention, literal };

struct IndexParameters {
  WeightSpec weights = WeightSpec::Preset::mean;
  std::size_t step_cap = 4;
  double tie_eps = default_tolerance;
  bool normalized = true;
  /// Overrides the graph's declared scale when normalizing.
  std::optional<double> scale_max;
  ClosenessDirection closeness_direction = ClosenessDirection::degree_convention;
  std::size_t max_paths = 100000;
};

// Degree indices aggregate only the ties that exist: a node with k incoming
// ties uses a length-k weight vector, and no ties gives crisp 0.
Tfn fuzzy_in_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});
Tfn fuzzy_out_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});
Tfn fuzzy_total_degree(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});

/// FOWA over the connected intensities between v and each of the other
/// n - 1 nodes (crisp 0 when unreachable within the step cap).
Tfn fuzzy_in_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});
Tfn fuzzy_out_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});
Tfn fuzzy_total_closeness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});

/// Interval reciprocal (1/r, 1/m, 1/l). Throws std::domain_error unless l > 0.
Tfn reciprocal_closeness(const Tfn& value);

struct BetweennessResult {
  std::vector<double> values;
  /// Some pair hit max_paths; its fractions are computed on a partial set.
  bool truncated = false;
};

/// Sum over ordered pairs (s, t), s != v != t, of the fraction of tied best
/// paths that pass through v. Paths are compared on normalized ties.
BetweennessResult fuzzy_betweenness_all(const FuzzyDigraph& g, const IndexParameters& params = {},
                                        Execution policy = Execution::parallel);
double fuzzy_betweenness(const FuzzyDigraph& g, NodeIndex v, const IndexParameters& params = {});

/// Classical indices on the crisp skeleton: presence counts for degree, hop
/// distances for closeness and betweenness, CoG sums for strength.
struct CrispBaselines {
  double in_degree = 0.0;
  double out_degree = 0.0;
  double total_degree = 0.0;
  double in_degree_normalized = 0.0;  // d / (n - 1)
  double out_degree_normalized = 0.0;
  double total_degree_normalized = 0.0;
  double in_strength = 0.0;
  double out_strength = 0.0;
  /// 1 / mean hop distance to the other nodes; 0 if any is unreachable.
  double closeness = 0.0;
  double betweenness = 0.0;
};

std::vector<CrispBaselines> crisp_baselines(const FuzzyDigraph& g);
CrispBaselines crisp_baselines(const FuzzyDigraph& g, NodeIndex v);

enum class IndexKind {
  in_degree,
  out_degree,
  total_degree,
  betweenness,
  in_closeness,
  out_closeness,
  total_closeness,
  crisp_in_degree,
  crisp_out_degree,
  crisp_total_degree,
  crisp_closeness,
  crisp_betweenness,
};

std::string_view to_string(IndexKind kind);
/// Accepts the names produced by to_string, with '-' or '_'.
std::optional<IndexKind> parse_index_kind(std::string_view name);
/// The seven fuzzy indices.
std::vector<IndexKind> fuzzy_indices();
std::vector<IndexKind> crisp_indices();
bool is_fuzzy_valued(IndexKind kind);

struct ReportRow {
  NodeIndex node = 0;
  std::optional<Tfn> fuzzy;  // absent for crisp-valued indices
  double value = 0.0;        // cog(fuzzy) or the crisp score
  std::size_t rank = 0;      // 1-based
};

struct CentralityReport {
  IndexKind index = IndexKind::in_degree;
  /// Ordered by rank.
  std::vector<ReportRow> rows;
  bool truncated = false;
};

/// Computes the selected indices for every node and ranks them by
/// descending value (ties within tie_eps by ascending node index).
std::vector<CentralityReport> build_report(const FuzzyDigraph& g,
                                           const std::vector<IndexKind>& indices,
                                           const IndexParameters& params = {},
                                           Execution policy = Execution::parallel);

}  // namespace fsna
