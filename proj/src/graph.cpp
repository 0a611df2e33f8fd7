#include "fsna/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace fsna {

FuzzyDigraph::FuzzyDigraph(std::vector<std::string> labels, double scale_max)
    : labels_(std::move(labels)), scale_max_(scale_max),
      adjacency_(labels_.size() * labels_.size()) {
  if (!(scale_max > 0.0) || !std::isfinite(scale_max))
    throw std::domain_error("scale_max must be a positive finite number");
  for (NodeIndex v = 0; v < labels_.size(); ++v) {
    const auto& name = labels_[v];
    if (name.empty())
      throw std::invalid_argument("node labels must be nonempty");
    if (name.find_first_of("\t\r\n;") != std::string::npos)
      throw std::invalid_argument("node label '" + name + "' contains a tab, newline or ';'");
    if (name.front() == ' ' || name.back() == ' ')
      throw std::invalid_argument("node label '" + name + "' has surrounding spaces");
    if (!index_.emplace(name, v).second)
      throw std::invalid_argument("duplicate node label '" + name + "'");
  }
}

std::optional<NodeIndex> FuzzyDigraph::find(std::string_view label) const {
  const auto it = index_.find(std::string(label));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

NodeIndex FuzzyDigraph::index_of(std::string_view label) const {
  if (auto v = find(label))
    return *v;
  throw std::out_of_range("unknown node '" + std::string(label) + "'");
}

void FuzzyDigraph::check_index(NodeIndex v) const {
  if (v >= size())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
}

void FuzzyDigraph::set_edge(NodeIndex from, NodeIndex to, const Tfn& tie) {
  check_index(from);
  check_index(to);
  if (from == to)
    throw std::domain_error("self tie on node '" + labels_[from] + "' is not allowed");
  if (tie.left() < 0.0 || tie.right() > scale_max_)
    throw std::domain_error("tie " + labels_[from] + "->" + labels_[to] + " = " + to_string(tie) +
                            " leaves [0, " + format_real(scale_max_) + "]");
  adjacency_[from * size() + to] = tie;
}

void FuzzyDigraph::set_edge(std::string_view from, std::string_view to, const Tfn& tie) {
  set_edge(index_of(from), index_of(to), tie);
}

void FuzzyDigraph::remove_edge(NodeIndex from, NodeIndex to) {
  check_index(from);
  check_index(to);
  adjacency_[from * size() + to].reset();
}

std::size_t FuzzyDigraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& e : adjacency_)
    count += e.has_value();
  return count;
}

std::vector<Tfn> FuzzyDigraph::incoming(NodeIndex v) const {
  check_index(v);
  std::vector<Tfn> ties;
  for (NodeIndex u = 0; u < size(); ++u)
    if (const auto& e = edge(u, v))
      ties.push_back(*e);
  return ties;
}

std::vector<Tfn> FuzzyDigraph::outgoing(NodeIndex v) const {
  check_index(v);
  std::vector<Tfn> ties;
  for (NodeIndex u = 0; u < size(); ++u)
    if (const auto& e = edge(v, u))
      ties.push_back(*e);
  return ties;
}

FuzzyDigraph FuzzyDigraph::normalized() const {
  FuzzyDigraph out(labels_, 1.0);
  for (std::size_t k = 0; k < adjacency_.size(); ++k)
    if (adjacency_[k])
      out.adjacency_[k] = normalize(*adjacency_[k], scale_max_);
  return out;
}

FuzzyDigraph FuzzyDigraph::transposed() const {
  FuzzyDigraph out(labels_, scale_max_);
  const auto n = size();
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      out.adjacency_[v * n + u] = adjacency_[u * n + v];
  return out;
}

}  // namespace fsna
