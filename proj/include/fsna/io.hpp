#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fsna/centrality.hpp"
#include "fsna/graph.hpp"
#include "fsna/ingestion.hpp"

namespace fsna {

inline constexpr int kNetworkFormatVersion = 1;
inline constexpr int kResponsesFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

struct Diagnostic {
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string where;     // record path such as "responses[2].samples[0]"
  std::string message;
};

/// Every problem found while loading a document, not just the first.
class FormatError : public std::runtime_error {
public:
  explicit FormatError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

// Network documents are UTF-8 text of tab-separated records. Blank lines,
// '#' comments and trailing whitespace are ignored on input:
//
//   format    fsna-network
//   version   1
//   encoding  utf-8
//   scale_max 1
//   layout    edge-list | matrix
//   node      <label>            (one per node, in order)
//   edge      <from> <to> l;m;r  (edge-list layout)
//   row       <label> <cell>...  (matrix layout; empty cell = no tie)
enum class NetworkLayout { edge_list, matrix };

std::string format_network(const FuzzyDigraph& g, NetworkLayout layout = NetworkLayout::edge_list);
FuzzyDigraph parse_network(std::string_view text);

/// JSON document with roster, scale geometry and per-response trajectories.
std::string format_responses(const ResponseSet& responses);
ResponseSet parse_responses(std::string_view text);

/// Parameters echoed into report headers.
struct ReportContext {
  IndexParameters params;
  std::string source;  // input network name, informational
};

/// Tab-separated table: '#' header lines with the parameters, then
/// node, index, left, core, right, cog, rank. Crisp indices leave the
/// fuzzy columns empty.
std::string format_report_table(const FuzzyDigraph& g, const CentralityReport& report,
                                const ReportContext& context);
/// The same rows as a JSON document.
std::string format_report_json(const FuzzyDigraph& g, const CentralityReport& report,
                               const ReportContext& context);

struct ReportTableRow {
  std::string node;
  std::string index;
  std::optional<Tfn> fuzzy;
  double value = 0.0;
  std::size_t rank = 0;
};

std::vector<ReportTableRow> parse_report_table(std::string_view text);

/// Graphviz digraph; ties labelled "l;m;r (cog)", absent ties omitted.
std::string format_dot(const FuzzyDigraph& g);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace fsna
