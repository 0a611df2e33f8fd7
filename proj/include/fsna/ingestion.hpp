#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsna/graph.hpp"
#include "fsna/tfn.hpp"

namespace fsna {

/// Semicircular rating control. Angles are in degrees, mathematical
/// orientation (counter-clockwise, y up); viewport y grows downward and is
/// flipped before taking the angle. The scale runs from 0 at start_angle to
/// scale_max at end_angle.
struct ScaleGeometry {
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 1.0;
  double start_angle_deg = 180.0;
  double end_angle_deg = 0.0;
  double scale_max = 1.0;

  friend bool operator==(const ScaleGeometry&, const ScaleGeometry&) = default;
};

/// Throws std::domain_error for a nonpositive radius or scale, or an empty
/// or over-full angular range.
void validate(const ScaleGeometry& geometry);

struct TrajectorySample {
  double t = 0.0;  // ms since the prompt was shown
  double x = 0.0;  // viewport pixels
  double y = 0.0;

  friend bool operator==(const TrajectorySample&, const TrajectorySample&) = default;
};

struct QuestionnaireResponse {
  std::string rater;
  std::string ratee;
  double committed = 0.0;
  /// Time of the commit click; samples after it are ignored.
  std::optional<double> committed_t;
  /// Orders duplicate answers for the same pair; later wins.
  std::optional<std::int64_t> submitted_at;
  /// Geometry in effect for this prompt when it differs from the document's.
  std::optional<ScaleGeometry> geometry;
  std::vector<TrajectorySample> samples;

  friend bool operator==(const QuestionnaireResponse&, const QuestionnaireResponse&) = default;
};

/// Contents of a responses document.
struct ResponseSet {
  std::vector<std::string> roster;
  ScaleGeometry geometry;
  std::optional<double> cadence_hz;
  std::vector<QuestionnaireResponse> responses;

  friend bool operator==(const ResponseSet&, const ResponseSet&) = default;
};

struct FuzzificationConfig {
  bool dwell_weighting = true;
  double q_lo = 0.05;
  double q_hi = 0.95;
  double min_spread = 0.0;
  /// Reserved for a histogram-of-angles variant; unused by the quantile method.
  std::size_t angle_bins = 36;
};

void validate(const FuzzificationConfig& config);

/// Scale value for a pointer position, clamped to the arc's angular range
/// (outside positions snap to the nearer end). Empty at the exact center.
std::optional<double> project_to_scale(const TrajectorySample& sample,
                                       const ScaleGeometry& geometry);

struct Fuzzification {
  Tfn value;
  std::size_t discarded_samples = 0;  // at the center, or after the commit
  bool degenerate_fallback = false;   // no usable samples were left
};

/// Mode at the committed value, support from the q_lo / q_hi quantiles of
/// the projected samples (dwell-time weighted by default), widened to
/// contain the mode.
Fuzzification fuzzify_trajectory(const QuestionnaireResponse& response,
                                 const ScaleGeometry& geometry,
                                 const FuzzificationConfig& config = {});

/// Weighted quantile with linear interpolation; equal weights reproduce the
/// usual (n - 1) p interpolation rule. Zero weights are ignored.
double weighted_quantile(std::vector<double> values, std::vector<double> weights, double q);

struct RejectedRecord {
  std::size_t position = 0;  // index into ResponseSet::responses
  std::string reason;
};

struct IngestResult {
  FuzzyDigraph graph;
  std::vector<RejectedRecord> rejected;
  std::vector<std::string> warnings;
};

/// One directed tie per answered (rater, ratee) pair. Unanswered pairs and
/// crisp zero answers stay absent.
IngestResult build_network(const ResponseSet& responses, const FuzzificationConfig& config = {});

}  // namespace fsna
