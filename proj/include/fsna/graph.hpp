#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fsna/tfn.hpp"

namespace fsna {

using NodeIndex = std::size_t;

/// Directed fuzzy social network: labelled nodes and an n x n table of
/// optional triangular ties. No self ties; every tie's support lies in
/// [0, scale_max].
class FuzzyDigraph {
public:
  FuzzyDigraph() = default;
  FuzzyDigraph(std::vector<std::string> labels, double scale_max);

  std::size_t size() const { return labels_.size(); }
  double scale_max() const { return scale_max_; }

  const std::string& label(NodeIndex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const { return labels_; }

  std::optional<NodeIndex> find(std::string_view label) const;
  /// Throws std::out_of_range for an unknown label.
  NodeIndex index_of(std::string_view label) const;

  const std::optional<Tfn>& edge(NodeIndex from, NodeIndex to) const {
    return adjacency_[from * size() + to];
  }
  bool has_edge(NodeIndex from, NodeIndex to) const { return edge(from, to).has_value(); }

  /// Throws std::domain_error for self ties or supports outside [0, scale_max].
  void set_edge(NodeIndex from, NodeIndex to, const Tfn& tie);
  void set_edge(std::string_view from, std::string_view to, const Tfn& tie);
  void remove_edge(NodeIndex from, NodeIndex to);

  std::size_t edge_count() const;

  /// Ties arriving at v, in ascending source order.
  std::vector<Tfn> incoming(NodeIndex v) const;
  /// Ties leaving v, in ascending target order.
  std::vector<Tfn> outgoing(NodeIndex v) const;

  /// Same structure with every tie divided by scale_max; scale_max becomes 1.
  FuzzyDigraph normalized() const;
  FuzzyDigraph transposed() const;

  friend bool operator==(const FuzzyDigraph& a, const FuzzyDigraph& b) {
    return a.labels_ == b.labels_ && a.scale_max_ == b.scale_max_ &&
           a.adjacency_ == b.adjacency_;
  }

private:
  void check_index(NodeIndex v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
  double scale_max_ = 1.0;
  std::vector<std::optional<Tfn>> adjacency_;
};

}  // namespace fsna
