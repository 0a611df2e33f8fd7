#include "fsna/tfn.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <system_error>

namespace fsna {

Tfn::Tfn(double left, double mode, double right) : left_(left), mode_(mode), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(mode) || !std::isfinite(right))
    throw std::domain_error("fuzzy number endpoints must be finite");
  if (!(left <= mode && mode <= right))
    throw std::domain_error("fuzzy number requires left <= mode <= right, got " +
                            format_real(left) + ";" + format_real(mode) + ";" +
                            format_real(right));
}

double membership_at(const Tfn& a, double x) {
  if (!std::isfinite(x))
    throw std::domain_error("membership_at: argument must be finite");
  if (x < a.left() || x > a.right())
    return 0.0;
  if (x == a.mode())
    return 1.0;
  if (x < a.mode())
    return (x - a.left()) / (a.mode() - a.left());
  return (x - a.right()) / (a.mode() - a.right());
}

double cog(const Tfn& a) {
  if (a.is_crisp())
    return a.mode();
  return (a.left() + a.mode() + a.right()) / 3.0;
}

Tfn add(const Tfn& a, const Tfn& b) {
  return Tfn(a.left() + b.left(), a.mode() + b.mode(), a.right() + b.right());
}

Tfn scale(double c, const Tfn& a) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::domain_error("scale: factor must be a finite nonnegative number");
  return Tfn(c * a.left(), c * a.mode(), c * a.right());
}

Tfn normalize(const Tfn& a, double scale_max) {
  if (!(scale_max > 0.0) || !std::isfinite(scale_max))
    throw std::domain_error("normalize: scale_max must be positive");
  if (a.left() < 0.0 || a.right() > scale_max)
    throw std::domain_error("normalize: support " + to_string(a) + " exceeds [0, " +
                            format_real(scale_max) + "]");
  return Tfn(a.left() / scale_max, a.mode() / scale_max, a.right() / scale_max);
}

std::string format_real(double value) {
  if (value == 0.0)
    value = 0.0;  // drop the sign of -0
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{})
    throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, end);
}

std::string to_string(const Tfn& a) {
  return format_real(a.left()) + ";" + format_real(a.mode()) + ";" + format_real(a.right());
}

namespace {

double parse_component(std::string_view text, std::string_view whole) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed fuzzy number '" + std::string(whole) +
                                "': expected l;m;r with '.' decimals");
  return value;
}

}  // namespace

Tfn parse_tfn(std::string_view text) {
  const auto first = text.find(';');
  const auto second = first == std::string_view::npos ? first : text.find(';', first + 1);
  if (second == std::string_view::npos || text.find(';', second + 1) != std::string_view::npos)
    throw std::invalid_argument("malformed fuzzy number '" + std::string(text) +
                                "': expected exactly three ';'-separated fields");
  const double l = parse_component(text.substr(0, first), text);
  const double m = parse_component(text.substr(first + 1, second - first - 1), text);
  const double r = parse_component(text.substr(second + 1), text);
  return Tfn(l, m, r);
}

const RankingMethod& default_ranking() {
  static const CenterOfGravity method;
  return method;
}

std::vector<std::size_t> rank_descending_keys(std::span<const double> keys, double tolerance) {
  if (!(tolerance >= 0.0))
    throw std::domain_error("rank_descending: tolerance must be nonnegative");
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return keys[i] > keys[j]; });
  // Runs within tolerance of their leading key are ties: restore input order.
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && keys[order[end]] >= keys[order[begin]] - tolerance)
      ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
              order.begin() + static_cast<std::ptrdiff_t>(end));
    begin = end;
  }
  return order;
}

std::vector<std::size_t> rank_descending(std::span<const Tfn> values, double tolerance,
                                         const RankingMethod& method) {
  std::vector<double> keys(values.size());
  std::transform(values.begin(), values.end(), keys.begin(),
                 [&](const Tfn& a) { return method.rank_value(a); });
  return rank_descending_keys(keys, tolerance);
}

}  // namespace fsna
