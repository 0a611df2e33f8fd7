#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fsna {

/// Default absolute tolerance for comparing rank values.
inline constexpr double default_tolerance = 1e-9;

/// Triangular fuzzy number (left, mode, right) with left <= mode <= right.
/// A zero-spread triangle stands for a crisp scalar.
class Tfn {
public:
  constexpr Tfn() = default;

  /// Throws std::domain_error unless all endpoints are finite and ordered.
  Tfn(double left, double mode, double right);

  static Tfn crisp(double value) { return Tfn(value, value, value); }

  constexpr double left() const { return left_; }
  constexpr double mode() const { return mode_; }
  constexpr double right() const { return right_; }

  double left_spread() const { return mode_ - left_; }
  double right_spread() const { return right_ - mode_; }
  double total_spread() const { return right_ - left_; }
  bool is_crisp() const { return left_ == right_; }

  friend bool operator==(const Tfn&, const Tfn&) = default;

private:
  double left_ = 0.0;
  double mode_ = 0.0;
  double right_ = 0.0;
};

/// Piecewise-linear membership grade in [0, 1].
double membership_at(const Tfn& a, double x);

/// Center of gravity of the membership function. For a triangle this is the
/// mean of the three vertices; a crisp number returns its mode.
double cog(const Tfn& a);

Tfn add(const Tfn& a, const Tfn& b);

/// Nonnegative scalar multiple. Throws std::domain_error for c < 0.
Tfn scale(double c, const Tfn& a);

/// Divides every endpoint by scale_max. The support must lie in [0, scale_max].
Tfn normalize(const Tfn& a, double scale_max);

/// "l;m;r" with shortest round-trip decimal formatting.
std::string to_string(const Tfn& a);

/// Parses "l;m;r". Throws std::invalid_argument on syntax errors and
/// std::domain_error when the triple violates left <= mode <= right.
Tfn parse_tfn(std::string_view text);

/// Shortest decimal representation that round-trips through strtod.
std::string format_real(double value);

/// Strategy mapping a fuzzy number to the scalar used for ordering.
class RankingMethod {
public:
  virtual ~RankingMethod() = default;
  virtual double rank_value(const Tfn& a) const = 0;
  virtual std::string_view name() const = 0;
};

class CenterOfGravity final : public RankingMethod {
public:
  double rank_value(const Tfn& a) const override { return cog(a); }
  std::string_view name() const override { return "cog"; }
};

const RankingMethod& default_ranking();

/// Indices of `values` sorted by descending rank value. Values whose rank
/// lies within `tolerance` of the first member of their run count as tied
/// and keep their input order.
std::vector<std::size_t> rank_descending(std::span<const Tfn> values,
                                         double tolerance = default_tolerance,
                                         const RankingMethod& method = default_ranking());

/// Same grouping rule applied to precomputed scalar keys.
std::vector<std::size_t> rank_descending_keys(std::span<const double> keys,
                                              double tolerance = default_tolerance);

}  // namespace fsna
