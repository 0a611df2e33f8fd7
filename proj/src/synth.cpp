#include "fsna/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fsna {

namespace {

constexpr double kPi = 3.14159265358979323846;

// std::uniform_real_distribution is implementation-defined; this is not.
class Uniform {
public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

}  // namespace

void validate(const SynthOptions& options) {
  if (!(options.density >= 0.0 && options.density <= 1.0))
    throw std::domain_error("density must lie in [0, 1]");
  if (!(options.vagueness >= 0.0 && options.vagueness <= 1.0))
    throw std::domain_error("vagueness must lie in [0, 1]");
  if (!(options.scale_max > 0.0) || !std::isfinite(options.scale_max))
    throw std::domain_error("scale_max must be positive");
}

std::vector<std::string> synthetic_labels(std::size_t n) {
  const auto width = std::max<std::size_t>(2, std::to_string(n).size());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    auto digits = std::to_string(i);
    labels.push_back("n" + std::string(width - digits.size(), '0') + digits);
  }
  return labels;
}

FuzzyDigraph synthesize(const SynthOptions& options) {
  validate(options);
  const auto n = options.nodes;
  const double top = options.scale_max;
  FuzzyDigraph g(synthetic_labels(n), top);
  Uniform rng(options.seed);
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v = 0; v < n; ++v) {
      if (u == v)
        continue;
      // Always draw all four so the stream does not depend on density.
      const double present = rng.next();
      const double mode = (1.0 - rng.next()) * top;
      const double lo = rng.next();
      const double hi = rng.next();
      if (!(present < options.density))
        continue;
      const double left = std::max(0.0, mode - options.vagueness * lo * mode);
      const double right = std::min(top, mode + options.vagueness * hi * (top - mode));
      g.set_edge(u, v, Tfn(left, mode, right));
    }
  }
  return g;
}

ResponseSet synthesize_responses(const SynthOptions& options, std::size_t samples_per_answer) {
  validate(options);
  ResponseSet set;
  set.roster = synthetic_labels(options.nodes);
  set.geometry = ScaleGeometry{400.0, 300.0, 200.0, 180.0, 0.0, options.scale_max};
  set.cadence_hz = 50.0;
  const double step_ms = 1000.0 / *set.cadence_hz;
  const auto& geo = set.geometry;
  Uniform rng(options.seed);

  const auto point_at = [&](double value, double radius) {
    const double fraction = value / geo.scale_max;
    const double angle =
        (geo.start_angle_deg + fraction * (geo.end_angle_deg - geo.start_angle_deg)) * kPi / 180.0;
    return std::pair{geo.center_x + radius * std::cos(angle),
                     geo.center_y - radius * std::sin(angle)};
  };

  std::int64_t stamp = 0;
  for (std::size_t u = 0; u < options.nodes; ++u) {
    for (std::size_t v = 0; v < options.nodes; ++v) {
      if (u == v)
        continue;
      const double present = rng.next();
      const double committed = rng.next() * geo.scale_max;
      if (!(present < options.density)) {
        for (std::size_t k = 0; k < 2 * samples_per_answer; ++k)
          rng.next();
        continue;
      }
      QuestionnaireResponse r;
      r.rater = set.roster[u];
      r.ratee = set.roster[v];
      r.committed = committed;
      r.submitted_at = ++stamp;
      const std::size_t count = std::max<std::size_t>(samples_per_answer, 1);
      for (std::size_t k = 0; k < count; ++k) {
        // Hesitation shrinks as the pointer settles on the answer.
        const double settle = 1.0 - static_cast<double>(k) / static_cast<double>(count);
        const double jitter = (rng.next() - 0.5) * options.vagueness * geo.scale_max * settle;
        const double value = std::clamp(committed + jitter, 0.0, geo.scale_max);
        const double radius = geo.radius * (0.8 + 0.4 * rng.next());
        const auto [x, y] = point_at(k + 1 == count ? committed : value, radius);
        r.samples.push_back({static_cast<double>(k) * step_ms, x, y});
      }
      for (std::size_t k = count; k < samples_per_answer; ++k) {
        rng.next();
        rng.next();
      }
      r.committed_t = static_cast<double>(count) * step_ms;
      set.responses.push_back(std::move(r));
    }
  }
  return set;
}

}  // namespace fsna
