#include "fsna/aggregation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace fsna {

namespace {

void check_grade(double a, const char* op) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::domain_error(std::string(op) + ": membership grades must lie in [0, 1]");
}

void check_order_at_least_two(const WeightVector& w, const char* op) {
  if (w.size() < 2)
    throw std::domain_error(std::string(op) + ": needs at least two weights");
}

}  // namespace

TConormKind associated_conorm(TNormKind kind) {
  switch (kind) {
    case TNormKind::standard_min: return TConormKind::standard_max;
    case TNormKind::algebraic_product: return TConormKind::algebraic_sum;
    case TNormKind::bounded_difference: return TConormKind::bounded_sum;
    case TNormKind::drastic: return TConormKind::drastic;
  }
  throw std::invalid_argument("unknown t-norm");
}

std::string_view to_string(TNormKind kind) {
  switch (kind) {
    case TNormKind::standard_min: return "standard_min";
    case TNormKind::algebraic_product: return "algebraic_product";
    case TNormKind::bounded_difference: return "bounded_difference";
    case TNormKind::drastic: return "drastic";
  }
  return "?";
}

std::string_view to_string(TConormKind kind) {
  switch (kind) {
    case TConormKind::standard_max: return "standard_max";
    case TConormKind::algebraic_sum: return "algebraic_sum";
    case TConormKind::bounded_sum: return "bounded_sum";
    case TConormKind::drastic: return "drastic";
  }
  return "?";
}

double tnorm(TNormKind kind, double a, double b) {
  check_grade(a, "tnorm");
  check_grade(b, "tnorm");
  switch (kind) {
    case TNormKind::standard_min: return std::min(a, b);
    case TNormKind::algebraic_product: return a * b;
    case TNormKind::bounded_difference:
      // lo - (1 - hi) keeps T(a, 1) == a and symmetry exact.
      return std::max(0.0, std::min(a, b) - (1.0 - std::max(a, b)));
    case TNormKind::drastic: return (a < 1.0 && b < 1.0) ? 0.0 : std::min(a, b);
  }
  throw std::invalid_argument("unknown t-norm");
}

double tconorm(TConormKind kind, double a, double b) {
  check_grade(a, "tconorm");
  check_grade(b, "tconorm");
  switch (kind) {
    case TConormKind::standard_max: return std::max(a, b);
    case TConormKind::algebraic_sum: return a + b - a * b;
    case TConormKind::bounded_sum: return std::min(1.0, a + b);
    case TConormKind::drastic: return (a > 0.0 && b > 0.0) ? 1.0 : std::max(a, b);
  }
  throw std::invalid_argument("unknown t-conorm");
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::domain_error("weight vector must have at least one entry");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0))
      throw std::domain_error("weights must lie in [0, 1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("weights must sum to 1, got " + format_real(sum));
}

WeightVector WeightVector::max_preset(std::size_t n) {
  std::vector<double> w(n, 0.0);
  if (n > 0)
    w.front() = 1.0;
  return WeightVector(std::move(w));
}

WeightVector WeightVector::min_preset(std::size_t n) {
  std::vector<double> w(n, 0.0);
  if (n > 0)
    w.back() = 1.0;
  return WeightVector(std::move(w));
}

WeightVector WeightVector::mean_preset(std::size_t n) {
  return WeightVector(std::vector<double>(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n)));
}

WeightSpec WeightSpec::parse(std::string_view text) {
  if (text == "max")
    return Preset::max;
  if (text == "min")
    return Preset::min;
  if (text == "mean")
    return Preset::mean;
  std::vector<double> weights;
  while (true) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ')
      field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ')
      field.remove_suffix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("weights: expected max, min, mean or a list of decimals");
    weights.push_back(value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return WeightVector(std::move(weights));
}

WeightVector WeightSpec::expand(std::size_t n) const {
  if (explicit_) {
    if (explicit_->size() != n)
      throw std::domain_error("weight vector has " + std::to_string(explicit_->size()) +
                              " entries but " + std::to_string(n) + " operands are aggregated");
    return *explicit_;
  }
  switch (preset_) {
    case Preset::max: return WeightVector::max_preset(n);
    case Preset::min: return WeightVector::min_preset(n);
    case Preset::mean: return WeightVector::mean_preset(n);
  }
  throw std::invalid_argument("unknown weight preset");
}

std::string WeightSpec::to_string() const {
  if (!explicit_) {
    switch (preset_) {
      case Preset::max: return "max";
      case Preset::min: return "min";
      case Preset::mean: return "mean";
    }
  }
  std::string out;
  for (double w : explicit_->values()) {
    if (!out.empty())
      out += ',';
    out += format_real(w);
  }
  return out;
}

double owa(const WeightVector& w, std::span<const double> values) {
  if (values.size() != w.size())
    throw std::domain_error("owa: " + std::to_string(values.size()) + " values for " +
                            std::to_string(w.size()) + " weights");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>{});
  double result = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    result += w[i] * sorted[i];
  return result;
}

Tfn fowa(const WeightVector& w, std::span<const Tfn> values, double tolerance) {
  if (values.size() != w.size())
    throw std::domain_error("fowa: " + std::to_string(values.size()) + " values for " +
                            std::to_string(w.size()) + " weights");
  const auto order = rank_descending(values, tolerance);
  Tfn sum;
  for (std::size_t i = 0; i < order.size(); ++i)
    sum = add(sum, scale(w[i], values[order[i]]));
  return sum;
}

double weight_distance(const WeightVector& w, const WeightVector& other) {
  if (w.size() != other.size())
    throw std::domain_error("weight_distance: vectors differ in length");
  check_order_at_least_two(w, "weight_distance");
  // L1 distance between cumulative weights. Against w_min or w_max every
  // cumulative difference has one sign and this equals sum_i (n-i)|w_i - w'_i| / (n-1).
  long double cumulative = 0.0L;
  long double cumulative_other = 0.0L;
  long double d = 0.0L;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    cumulative += w[i];
    cumulative_other += other[i];
    d += std::abs(cumulative - cumulative_other);
  }
  return static_cast<double>(d / static_cast<long double>(w.size() - 1));
}

double orness(const WeightVector& w) {
  check_order_at_least_two(w, "orness");
  const auto n = static_cast<long double>(w.size());
  long double sum = 0.0L;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    sum += (n - static_cast<long double>(i + 1)) * w[i];
  return static_cast<double>(sum / (n - 1.0L));
}

double andness(const WeightVector& w) { return 1.0 - orness(w); }

double mediality(const WeightVector& w) {
  check_order_at_least_two(w, "mediality");
  return 1.0 - weight_distance(w, WeightVector::mean_preset(w.size()));
}

ProximityProfile proximity_profile(const WeightVector& w) {
  const double o = orness(w);
  return {o, 1.0 - o, mediality(w)};
}

}  // namespace fsna
