#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsna/tfn.hpp"

namespace fsna {

// t-norms and t-conorms at the same position form an associated pair.
enum class TNormKind { standard_min, algebraic_product, bounded_difference, drastic };
enum class TConormKind { standard_max, algebraic_sum, bounded_sum, drastic };

TConormKind associated_conorm(TNormKind kind);
std::string_view to_string(TNormKind kind);
std::string_view to_string(TConormKind kind);

/// Fuzzy intersection of two grades in [0, 1].
double tnorm(TNormKind kind, double a, double b);
/// Fuzzy union of two grades in [0, 1].
double tconorm(TConormKind kind, double a, double b);

/// OWA weights: nonnegative, summing to one within 1e-9, at least one entry.
class WeightVector {
public:
  explicit WeightVector(std::vector<double> weights);

  static WeightVector max_preset(std::size_t n);   // (1, 0, ..., 0)
  static WeightVector min_preset(std::size_t n);   // (0, ..., 0, 1)
  static WeightVector mean_preset(std::size_t n);  // (1/n, ..., 1/n)

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<double> weights_;
};

/// Either a named preset expanded once the operand count is known, or an
/// explicit vector whose length must then match.
class WeightSpec {
public:
  enum class Preset { max, min, mean };

  WeightSpec() = default;
  WeightSpec(Preset preset) : preset_(preset) {}
  WeightSpec(WeightVector explicit_weights) : explicit_(std::move(explicit_weights)) {}

  /// Accepts "max", "min", "mean" or a comma separated list of decimals.
  static WeightSpec parse(std::string_view text);

  /// Throws std::domain_error when an explicit vector has the wrong length.
  WeightVector expand(std::size_t n) const;

  bool is_preset() const { return !explicit_.has_value(); }
  std::string to_string() const;

private:
  Preset preset_ = Preset::mean;
  std::optional<WeightVector> explicit_;
};

/// Ordered weighted average: values sorted descending, dotted with w.
double owa(const WeightVector& w, std::span<const double> values);

/// Fuzzy OWA over triangles: operands ranked by descending rank value (ties
/// within `tolerance` keep input order), then sum of w_i * x_(i).
Tfn fowa(const WeightVector& w, std::span<const Tfn> values,
         double tolerance = default_tolerance);

/// Metric on weight vectors: (1/(n-1)) * sum_{i<n} |W_i - W'_i| over the
/// cumulative sums W_i = w_1 + ... + w_i. Bounded by 1, with
/// d(w, w_min) = orness(w) and d(w, w_min) + d(w, w_max) = 1.
double weight_distance(const WeightVector& w, const WeightVector& other);

double orness(const WeightVector& w);
double andness(const WeightVector& w);
double mediality(const WeightVector& w);

struct ProximityProfile {
  double orness;
  double andness;
  double mediality;
};

ProximityProfile proximity_profile(const WeightVector& w);

}  // namespace fsna
