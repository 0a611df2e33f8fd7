#include "fsna/ingestion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace fsna {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap_degrees(double angle) {
  double a = std::fmod(angle, 360.0);
  if (a < 0.0)
    a += 360.0;
  return a;
}

}  // namespace

void validate(const ScaleGeometry& geometry) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(geometry.center_x) || !finite(geometry.center_y) ||
      !finite(geometry.start_angle_deg) || !finite(geometry.end_angle_deg))
    throw std::domain_error("scale geometry must be finite");
  if (!(geometry.radius > 0.0) || !finite(geometry.radius))
    throw std::domain_error("scale radius must be positive");
  if (!(geometry.scale_max > 0.0) || !finite(geometry.scale_max))
    throw std::domain_error("scale_max must be positive");
  const double sweep = std::abs(geometry.end_angle_deg - geometry.start_angle_deg);
  if (sweep == 0.0 || sweep > 360.0)
    throw std::domain_error("scale angular range must be nonempty and at most 360 degrees");
}

void validate(const FuzzificationConfig& config) {
  if (!(config.q_lo >= 0.0 && config.q_lo < config.q_hi && config.q_hi <= 1.0))
    throw std::domain_error("fuzzification quantiles need 0 <= q_lo < q_hi <= 1");
  if (!(config.min_spread >= 0.0))
    throw std::domain_error("minimum spread must be nonnegative");
  if (config.angle_bins == 0)
    throw std::domain_error("angle bin count must be positive");
}

std::optional<double> project_to_scale(const TrajectorySample& sample,
                                       const ScaleGeometry& geometry) {
  const double dx = sample.x - geometry.center_x;
  const double dy = geometry.center_y - sample.y;
  if (dx == 0.0 && dy == 0.0)
    return std::nullopt;
  const double angle = std::atan2(dy, dx) * 180.0 / kPi;
  const double signed_sweep = geometry.end_angle_deg - geometry.start_angle_deg;
  const double sweep = std::abs(signed_sweep);
  const double direction = signed_sweep < 0.0 ? -1.0 : 1.0;
  // Angle travelled from the start in the scale's direction, in [0, 360).
  const double offset = wrap_degrees(direction * (angle - geometry.start_angle_deg));
  double fraction = 0.0;
  if (offset <= sweep) {
    fraction = offset / sweep;
  } else {
    const double past_end = offset - sweep;
    const double before_start = 360.0 - offset;
    fraction = past_end < before_start ? 1.0 : 0.0;
  }
  return std::clamp(fraction, 0.0, 1.0) * geometry.scale_max;
}

double weighted_quantile(std::vector<double> values, std::vector<double> weights, double q) {
  if (values.size() != weights.size())
    throw std::invalid_argument("weighted_quantile: values and weights differ in length");
  if (!(q >= 0.0 && q <= 1.0))
    throw std::domain_error("weighted_quantile: q must lie in [0, 1]");
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] >= 0.0))
      throw std::domain_error("weighted_quantile: weights must be nonnegative");
    if (weights[i] > 0.0)
      order.push_back(i);
  }
  if (order.empty())
    throw std::domain_error("weighted_quantile: no positive weight");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  if (order.size() == 1)
    return values[order.front()];

  // Node k sits at (S_k - w_k) / (S_N - w_N), S the running weight sum.
  const double total = std::accumulate(order.begin(), order.end(), 0.0,
                                       [&](double s, std::size_t i) { return s + weights[i]; });
  const double span = total - weights[order.back()];
  if (!(span > 0.0))
    return values[order.back()];
  double before = 0.0;
  double prev_pos = 0.0;
  double prev_value = values[order.front()];
  for (std::size_t k = 0; k < order.size(); ++k) {
    const double pos = before / span;
    const double value = values[order[k]];
    if (pos >= q) {
      if (k == 0 || pos == prev_pos)
        return value;
      return prev_value + (value - prev_value) * (q - prev_pos) / (pos - prev_pos);
    }
    prev_pos = pos;
    prev_value = value;
    before += weights[order[k]];
  }
  return values[order.back()];
}

Fuzzification fuzzify_trajectory(const QuestionnaireResponse& response,
                                 const ScaleGeometry& geometry,
                                 const FuzzificationConfig& config) {
  validate(geometry);
  validate(config);
  const double committed = response.committed;
  if (!(committed >= 0.0 && committed <= geometry.scale_max))
    throw std::domain_error("committed value " + format_real(committed) + " outside [0, " +
                            format_real(geometry.scale_max) + "]");

  Fuzzification out;
  std::vector<TrajectorySample> kept;
  for (const auto& s : response.samples) {
    if (response.committed_t && s.t > *response.committed_t)
      ++out.discarded_samples;
    else
      kept.push_back(s);
  }

  std::vector<double> values;
  std::vector<double> weights;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto projected = project_to_scale(kept[i], geometry);
    if (!projected) {
      ++out.discarded_samples;
      continue;
    }
    double dwell = 1.0;
    if (config.dwell_weighting) {
      if (i + 1 < kept.size())
        dwell = kept[i + 1].t - kept[i].t;
      else
        dwell = response.committed_t ? *response.committed_t - kept[i].t : 0.0;
      dwell = std::max(dwell, 0.0);
    }
    values.push_back(*projected);
    weights.push_back(dwell);
  }

  if (values.empty()) {
    out.value = Tfn::crisp(committed);
    out.degenerate_fallback = true;
    return out;
  }
  if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; }))
    std::fill(weights.begin(), weights.end(), 1.0);

  const double lo = weighted_quantile(values, weights, config.q_lo);
  const double hi = weighted_quantile(values, weights, config.q_hi);
  double left = std::min(lo, committed);
  double right = std::max(hi, committed);
  left = std::max(0.0, std::min(left, committed - config.min_spread));
  right = std::min(geometry.scale_max, std::max(right, committed + config.min_spread));
  out.value = Tfn(left, committed, right);
  return out;
}

IngestResult build_network(const ResponseSet& responses, const FuzzificationConfig& config) {
  validate(responses.geometry);
  validate(config);
  IngestResult result;
  result.graph = FuzzyDigraph(responses.roster, responses.geometry.scale_max);
  const auto& g = result.graph;

  struct Chosen {
    std::size_t position;
    Tfn value;
  };
  std::map<std::pair<NodeIndex, NodeIndex>, Chosen> chosen;

  for (std::size_t pos = 0; pos < responses.responses.size(); ++pos) {
    const auto& r = responses.responses[pos];
    const auto rater = g.find(r.rater);
    const auto ratee = g.find(r.ratee);
    if (!rater || !ratee) {
      result.rejected.push_back(
          {pos, "unknown roster member '" + (rater ? r.ratee : r.rater) + "'"});
      continue;
    }
    if (*rater == *ratee) {
      result.rejected.push_back({pos, "rater '" + r.rater + "' rated themselves"});
      continue;
    }
    const ScaleGeometry& geometry = r.geometry ? *r.geometry : responses.geometry;
    if (geometry.scale_max != responses.geometry.scale_max) {
      result.rejected.push_back({pos, "response scale_max differs from the document's"});
      continue;
    }
    Fuzzification f;
    try {
      f = fuzzify_trajectory(r, geometry, config);
    } catch (const std::exception& e) {
      result.rejected.push_back({pos, e.what()});
      continue;
    }
    if (f.degenerate_fallback)
      result.warnings.push_back("response " + std::to_string(pos) + " (" + r.rater + "->" +
                                r.ratee + ") has no usable samples; using a crisp tie");

    const auto key = std::make_pair(*rater, *ratee);
    const auto it = chosen.find(key);
    if (it == chosen.end()) {
      chosen.emplace(key, Chosen{pos, f.value});
      continue;
    }
    const auto& previous = responses.responses[it->second.position];
    const bool replaces = previous.submitted_at.value_or(INT64_MIN) <= r.submitted_at.value_or(INT64_MIN);
    result.warnings.push_back("duplicate answer for " + r.rater + "->" + r.ratee + " (responses " +
                              std::to_string(it->second.position) + " and " + std::to_string(pos) +
                              "); keeping the later one");
    if (replaces)
      it->second = Chosen{pos, f.value};
  }

  for (const auto& [key, c] : chosen) {
    if (c.value.is_crisp() && c.value.mode() == 0.0)
      continue;  // a declared null relationship
    result.graph.set_edge(key.first, key.second, c.value);
  }
  return result;
}

}  // namespace fsna
