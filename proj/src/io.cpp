#include "fsna/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fsna {

using Json = nlohmann::ordered_json;

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::string text = std::to_string(diagnostics.size()) + " problem(s) in document";
  for (const auto& d : diagnostics) {
    text += "\n  ";
    if (d.line != 0)
      text += "line " + std::to_string(d.line) + ": ";
    if (!d.where.empty())
      text += d.where + ": ";
    text += d.message;
  }
  return text;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto tab = line.find('\t');
    fields.push_back(trim(line.substr(0, tab)));
    if (tab == std::string_view::npos)
      break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value))
    return std::nullopt;
  return value;
}

std::optional<long> parse_integer(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> records(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    // Strip trailing spaces and CR but keep tabs: they delimit empty cells.
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\r'))
      raw.remove_suffix(1);
    const auto content = trim(raw);
    if (content.empty() || content.front() == '#')
      continue;
    while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t'))
      raw.remove_prefix(1);
    out.push_back({number, split_tabs(raw)});
  }
  return out;
}

void check_header_version(const Json& doc, std::string_view expected_format, int supported,
                          std::vector<Diagnostic>& diags) {
  if (!doc.contains("format") || !doc["format"].is_string() ||
      doc["format"].get<std::string>() != expected_format)
    diags.push_back({0, "format", "expected \"" + std::string(expected_format) + "\""});
  if (!doc.contains("version") || !doc["version"].is_number_integer()) {
    diags.push_back({0, "version", "missing integer format version"});
  } else if (doc["version"].get<long>() != supported) {
    diags.push_back({0, "version",
                     "unsupported format version " + std::to_string(doc["version"].get<long>()) +
                         " (this build reads version " + std::to_string(supported) + ")"});
  }
  if (doc.contains("encoding") &&
      (!doc["encoding"].is_string() || lower(doc["encoding"].get<std::string>()) != "utf-8"))
    diags.push_back({0, "encoding", "only utf-8 documents are supported"});
}

Json geometry_to_json(const ScaleGeometry& g) {
  Json j;
  j["center"] = Json::array({g.center_x, g.center_y});
  j["radius"] = g.radius;
  j["start_angle_deg"] = g.start_angle_deg;
  j["end_angle_deg"] = g.end_angle_deg;
  j["scale_max"] = g.scale_max;
  return j;
}

std::optional<double> number_at(const Json& j, const char* key, const std::string& where,
                                std::vector<Diagnostic>& diags, bool required = true) {
  if (!j.contains(key)) {
    if (required)
      diags.push_back({0, where + "." + key, "missing"});
    return std::nullopt;
  }
  const auto& v = j[key];
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    diags.push_back({0, where + "." + key, "expected a finite number"});
    return std::nullopt;
  }
  return v.get<double>();
}

std::optional<ScaleGeometry> geometry_from_json(const Json& j, const std::string& where,
                                                std::vector<Diagnostic>& diags) {
  if (!j.is_object()) {
    diags.push_back({0, where, "expected an object"});
    return std::nullopt;
  }
  const auto before = diags.size();
  ScaleGeometry g;
  if (!j.contains("center") || !j["center"].is_array() || j["center"].size() != 2 ||
      !j["center"][0].is_number() || !j["center"][1].is_number()) {
    diags.push_back({0, where + ".center", "expected [x, y]"});
  } else {
    g.center_x = j["center"][0].get<double>();
    g.center_y = j["center"][1].get<double>();
  }
  if (auto v = number_at(j, "radius", where, diags)) g.radius = *v;
  if (auto v = number_at(j, "start_angle_deg", where, diags)) g.start_angle_deg = *v;
  if (auto v = number_at(j, "end_angle_deg", where, diags)) g.end_angle_deg = *v;
  if (auto v = number_at(j, "scale_max", where, diags)) g.scale_max = *v;
  if (diags.size() != before)
    return std::nullopt;
  try {
    validate(g);
  } catch (const std::exception& e) {
    diags.push_back({0, where, e.what()});
    return std::nullopt;
  }
  return g;
}

std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FormatError::FormatError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string format_network(const FuzzyDigraph& g, NetworkLayout layout) {
  std::ostringstream out;
  out << "# fuzzy social network\n"
      << "format\tfsna-network\n"
      << "version\t" << kNetworkFormatVersion << "\n"
      << "encoding\tutf-8\n"
      << "scale_max\t" << format_real(g.scale_max()) << "\n"
      << "layout\t" << (layout == NetworkLayout::edge_list ? "edge-list" : "matrix") << "\n";
  for (const auto& label : g.labels())
    out << "node\t" << label << "\n";
  const auto n = g.size();
  for (NodeIndex u = 0; u < n; ++u) {
    if (layout == NetworkLayout::edge_list) {
      for (NodeIndex v = 0; v < n; ++v)
        if (const auto& tie = g.edge(u, v))
          out << "edge\t" << g.label(u) << "\t" << g.label(v) << "\t" << to_string(*tie) << "\n";
    } else {
      out << "row\t" << g.label(u);
      for (NodeIndex v = 0; v < n; ++v) {
        out << "\t";
        if (const auto& tie = g.edge(u, v))
          out << to_string(*tie);
      }
      out << "\n";
    }
  }
  return out.str();
}

FuzzyDigraph parse_network(std::string_view text) {
  std::vector<Diagnostic> diags;
  const auto lines = records(text);

  std::optional<double> scale_max;
  std::optional<NetworkLayout> layout;
  bool saw_format = false;
  bool saw_version = false;
  std::vector<std::string> labels;
  std::map<std::string, NodeIndex, std::less<>> index;
  std::vector<const Line*> edges;
  std::vector<const Line*> rows;

  for (const auto& line : lines) {
    const auto& f = line.fields;
    const auto key = f.front();
    const auto expect_fields = [&](std::size_t count) {
      if (f.size() == count)
        return true;
      diags.push_back({line.number, std::string(key),
                       "expected " + std::to_string(count - 1) + " value(s), got " +
                           std::to_string(f.size() - 1)});
      return false;
    };
    if (key == "format") {
      saw_format = true;
      if (expect_fields(2) && f[1] != "fsna-network")
        diags.push_back({line.number, "format", "not an fsna-network document"});
    } else if (key == "version") {
      saw_version = true;
      if (!expect_fields(2))
        continue;
      const auto v = parse_integer(f[1]);
      if (!v)
        diags.push_back({line.number, "version", "expected an integer"});
      else if (*v != kNetworkFormatVersion)
        diags.push_back({line.number, "version",
                         "unsupported format version " + std::to_string(*v) +
                             " (this build reads version " + std::to_string(kNetworkFormatVersion) +
                             ")"});
    } else if (key == "encoding") {
      if (expect_fields(2) && lower(f[1]) != "utf-8")
        diags.push_back({line.number, "encoding", "only utf-8 documents are supported"});
    } else if (key == "scale_max") {
      if (!expect_fields(2))
        continue;
      scale_max = parse_double(f[1]);
      if (!scale_max || *scale_max <= 0.0) {
        diags.push_back({line.number, "scale_max", "expected a positive number"});
        scale_max.reset();
      }
    } else if (key == "layout") {
      if (!expect_fields(2))
        continue;
      if (f[1] == "edge-list")
        layout = NetworkLayout::edge_list;
      else if (f[1] == "matrix")
        layout = NetworkLayout::matrix;
      else
        diags.push_back({line.number, "layout", "expected edge-list or matrix"});
    } else if (key == "node") {
      if (!expect_fields(2))
        continue;
      const std::string label(f[1]);
      if (label.empty() || label.find(';') != std::string::npos)
        diags.push_back({line.number, "node", "labels must be nonempty and free of ';'"});
      else if (!index.emplace(label, labels.size()).second)
        diags.push_back({line.number, "node", "duplicate node label '" + label + "'"});
      else
        labels.push_back(label);
    } else if (key == "edge") {
      if (expect_fields(4))
        edges.push_back(&line);
    } else if (key == "row") {
      if (f.size() < 2)
        diags.push_back({line.number, "row", "missing row label"});
      else
        rows.push_back(&line);
    } else {
      diags.push_back({line.number, std::string(key), "unknown record type"});
    }
  }
  if (!saw_format)
    diags.push_back({0, "format", "missing 'format fsna-network' record"});
  if (!saw_version)
    diags.push_back({0, "version", "missing format version"});
  if (!scale_max)
    diags.push_back({0, "scale_max", "missing or invalid scale_max"});
  if (!layout)
    diags.push_back({0, "layout", "missing layout"});
  if (layout == NetworkLayout::edge_list && !rows.empty())
    diags.push_back({rows.front()->number, "row", "matrix rows in an edge-list document"});
  if (layout == NetworkLayout::matrix && !edges.empty())
    diags.push_back({edges.front()->number, "edge", "edge records in a matrix document"});

  const auto n = labels.size();
  std::vector<std::optional<Tfn>> ties(n * n);
  const auto place = [&](std::size_t line, std::string_view from, std::string_view to,
                         std::string_view cell) {
    const auto u = index.find(from);
    const auto v = index.find(to);
    if (u == index.end() || v == index.end()) {
      diags.push_back({line, "edge",
                       "unknown node '" + std::string(u == index.end() ? from : to) + "'"});
      return;
    }
    Tfn tie;
    try {
      tie = parse_tfn(cell);
    } catch (const std::exception& e) {
      diags.push_back({line, "edge", e.what()});
      return;
    }
    if (u->second == v->second) {
      diags.push_back({line, "edge", "self tie on '" + std::string(from) + "'"});
      return;
    }
    if (scale_max && (tie.left() < 0.0 || tie.right() > *scale_max)) {
      diags.push_back({line, "edge",
                       "tie " + to_string(tie) + " leaves [0, " + format_real(*scale_max) + "]"});
      return;
    }
    auto& slot = ties[u->second * n + v->second];
    if (slot) {
      diags.push_back({line, "edge",
                       "duplicate tie " + std::string(from) + "->" + std::string(to)});
      return;
    }
    slot = tie;
  };

  for (const Line* line : edges)
    place(line->number, line->fields[1], line->fields[2], line->fields[3]);

  if (layout == NetworkLayout::matrix) {
    std::set<std::string, std::less<>> seen_rows;
    for (const Line* line : rows) {
      const auto label = line->fields[1];
      if (!index.count(label)) {
        diags.push_back({line->number, "row", "unknown node '" + std::string(label) + "'"});
        continue;
      }
      if (!seen_rows.emplace(label).second) {
        diags.push_back({line->number, "row", "duplicate row '" + std::string(label) + "'"});
        continue;
      }
      const auto cells = line->fields.size() - 2;
      if (cells > n) {
        diags.push_back({line->number, "row",
                         "expected " + std::to_string(n) + " cells, got " + std::to_string(cells)});
        continue;
      }
      // Trailing empty cells may have been dropped with trailing whitespace.
      for (std::size_t k = 0; k < cells; ++k)
        if (!line->fields[k + 2].empty())
          place(line->number, label, labels[k], line->fields[k + 2]);
    }
    if (seen_rows.size() != n && diags.empty())
      diags.push_back({0, "row", "expected one row per node (" + std::to_string(n) + "), got " +
                                     std::to_string(seen_rows.size())});
  }

  if (!diags.empty())
    throw FormatError(std::move(diags));
  FuzzyDigraph g(std::move(labels), *scale_max);
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = 0; v < n; ++v)
      if (ties[u * n + v])
        g.set_edge(u, v, *ties[u * n + v]);
  return g;
}

std::string format_responses(const ResponseSet& set) {
  Json doc;
  doc["format"] = "fsna-responses";
  doc["version"] = kResponsesFormatVersion;
  doc["encoding"] = "utf-8";
  doc["roster"] = set.roster;
  doc["scale"] = geometry_to_json(set.geometry);
  if (set.cadence_hz)
    doc["cadence_hz"] = *set.cadence_hz;
  Json responses = Json::array();
  for (const auto& r : set.responses) {
    Json j;
    j["rater"] = r.rater;
    j["ratee"] = r.ratee;
    j["committed"] = r.committed;
    if (r.committed_t)
      j["committed_t"] = *r.committed_t;
    if (r.submitted_at)
      j["submitted_at"] = *r.submitted_at;
    if (r.geometry)
      j["scale"] = geometry_to_json(*r.geometry);
    Json samples = Json::array();
    for (const auto& s : r.samples)
      samples.push_back(Json::array({s.t, s.x, s.y}));
    j["samples"] = std::move(samples);
    responses.push_back(std::move(j));
  }
  doc["responses"] = std::move(responses);
  return doc.dump(2) + "\n";
}

ResponseSet parse_responses(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError({{line_of_byte(text, e.byte), "", e.what()}});
  }
  std::vector<Diagnostic> diags;
  if (!doc.is_object())
    throw FormatError({{1, "", "expected a JSON object"}});
  check_header_version(doc, "fsna-responses", kResponsesFormatVersion, diags);

  ResponseSet set;
  if (!doc.contains("roster") || !doc["roster"].is_array()) {
    diags.push_back({0, "roster", "expected an array of labels"});
  } else {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc["roster"].size(); ++i) {
      const auto& item = doc["roster"][i];
      const std::string where = "roster[" + std::to_string(i) + "]";
      if (!item.is_string() || item.get<std::string>().empty()) {
        diags.push_back({0, where, "expected a nonempty string"});
        continue;
      }
      const auto label = item.get<std::string>();
      if (label.find_first_of("\t\r\n;") != std::string::npos)
        diags.push_back({0, where, "label contains a tab, newline or ';'"});
      else if (!seen.insert(label).second)
        diags.push_back({0, where, "duplicate roster label '" + label + "'"});
      set.roster.push_back(label);
    }
  }
  if (!doc.contains("scale"))
    diags.push_back({0, "scale", "missing scale geometry"});
  else if (auto g = geometry_from_json(doc["scale"], "scale", diags))
    set.geometry = *g;
  if (doc.contains("cadence_hz")) {
    if (auto v = number_at(doc, "cadence_hz", "", diags); v && *v > 0.0)
      set.cadence_hz = v;
    else
      diags.push_back({0, "cadence_hz", "expected a positive number"});
  }

  if (!doc.contains("responses") || !doc["responses"].is_array()) {
    diags.push_back({0, "responses", "expected an array"});
  } else {
    for (std::size_t i = 0; i < doc["responses"].size(); ++i) {
      const auto& j = doc["responses"][i];
      const std::string where = "responses[" + std::to_string(i) + "]";
      if (!j.is_object()) {
        diags.push_back({0, where, "expected an object"});
        continue;
      }
      QuestionnaireResponse r;
      for (const char* key : {"rater", "ratee"}) {
        if (!j.contains(key) || !j[key].is_string())
          diags.push_back({0, where + "." + key, "expected a string"});
      }
      if (j.contains("rater") && j["rater"].is_string())
        r.rater = j["rater"].get<std::string>();
      if (j.contains("ratee") && j["ratee"].is_string())
        r.ratee = j["ratee"].get<std::string>();
      if (!r.rater.empty() && r.rater == r.ratee)
        diags.push_back({0, where, "rater and ratee are the same"});
      if (j.contains("scale"))
        r.geometry = geometry_from_json(j["scale"], where + ".scale", diags);
      const double scale_max = r.geometry ? r.geometry->scale_max : set.geometry.scale_max;
      if (auto v = number_at(j, "committed", where, diags)) {
        r.committed = *v;
        if (*v < 0.0 || *v > scale_max)
          diags.push_back({0, where + ".committed",
                           "value " + format_real(*v) + " outside [0, " + format_real(scale_max) + "]"});
      }
      r.committed_t = number_at(j, "committed_t", where, diags, false);
      if (j.contains("submitted_at")) {
        if (j["submitted_at"].is_number_integer())
          r.submitted_at = j["submitted_at"].get<std::int64_t>();
        else
          diags.push_back({0, where + ".submitted_at", "expected an integer"});
      }
      if (!j.contains("samples") || !j["samples"].is_array() || j["samples"].empty()) {
        diags.push_back({0, where + ".samples", "expected at least one [t, x, y] sample"});
      } else {
        double last_t = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < j["samples"].size(); ++k) {
          const auto& s = j["samples"][k];
          const std::string sw = where + ".samples[" + std::to_string(k) + "]";
          if (!s.is_array() || s.size() != 3 ||
              !std::all_of(s.begin(), s.end(), [](const Json& v) {
                return v.is_number() && std::isfinite(v.get<double>());
              })) {
            diags.push_back({0, sw, "expected [t, x, y] with finite numbers"});
            continue;
          }
          TrajectorySample sample{s[0].get<double>(), s[1].get<double>(), s[2].get<double>()};
          if (sample.t < last_t)
            diags.push_back({0, sw, "timestamps must be nondecreasing"});
          last_t = sample.t;
          r.samples.push_back(sample);
        }
      }
      set.responses.push_back(std::move(r));
    }
  }
  if (!diags.empty())
    throw FormatError(std::move(diags));
  return set;
}

std::string format_report_table(const FuzzyDigraph& g, const CentralityReport& report,
                                const ReportContext& context) {
  const auto& p = context.params;
  std::ostringstream out;
  out << "# fsna-report\t" << kReportFormatVersion << "\n"
      << "# index\t" << to_string(report.index) << "\n";
  if (!context.source.empty())
    out << "# source\t" << context.source << "\n";
  out << "# weights\t" << p.weights.to_string() << "\n"
      << "# step_cap\t" << p.step_cap << "\n"
      << "# tie_eps\t" << format_real(p.tie_eps) << "\n"
      << "# normalized\t" << (p.normalized ? "true" : "false") << "\n"
      << "# scale_max\t" << format_real(p.scale_max.value_or(g.scale_max())) << "\n"
      << "# closeness_direction\t"
      << (p.closeness_direction == ClosenessDirection::degree_convention ? "degree-convention"
                                                                          : "literal")
      << "\n"
      << "# truncated\t" << (report.truncated ? "true" : "false") << "\n"
      << "node\tindex\tleft\tcore\tright\tcog\trank\n";
  for (const auto& row : report.rows) {
    out << g.label(row.node) << "\t" << to_string(report.index) << "\t";
    if (row.fuzzy)
      out << format_real(row.fuzzy->left()) << "\t" << format_real(row.fuzzy->mode()) << "\t"
          << format_real(row.fuzzy->right());
    else
      out << "\t\t";
    out << "\t" << format_real(row.value) << "\t" << row.rank << "\n";
  }
  return out.str();
}

std::string format_report_json(const FuzzyDigraph& g, const CentralityReport& report,
                               const ReportContext& context) {
  const auto& p = context.params;
  Json doc;
  doc["format"] = "fsna-report";
  doc["version"] = kReportFormatVersion;
  doc["index"] = std::string(to_string(report.index));
  if (!context.source.empty())
    doc["source"] = context.source;
  Json params;
  params["weights"] = p.weights.to_string();
  params["step_cap"] = p.step_cap;
  params["tie_eps"] = p.tie_eps;
  params["normalized"] = p.normalized;
  params["scale_max"] = p.scale_max.value_or(g.scale_max());
  params["closeness_direction"] =
      p.closeness_direction == ClosenessDirection::degree_convention ? "degree-convention"
                                                                     : "literal";
  doc["parameters"] = std::move(params);
  doc["truncated"] = report.truncated;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json j;
    j["node"] = g.label(row.node);
    if (row.fuzzy) {
      j["left"] = row.fuzzy->left();
      j["core"] = row.fuzzy->mode();
      j["right"] = row.fuzzy->right();
    }
    j["cog"] = row.value;
    j["rank"] = row.rank;
    rows.push_back(std::move(j));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::vector<ReportTableRow> parse_report_table(std::string_view text) {
  std::vector<Diagnostic> diags;
  std::vector<ReportTableRow> rows;
  bool header = false;
  for (const auto& line : records(text)) {
    const auto& f = line.fields;
    if (!header) {
      if (f.size() == 7 && f[0] == "node" && f[6] == "rank")
        header = true;
      else
        diags.push_back({line.number, "", "expected the column header line"});
      continue;
    }
    if (f.size() != 7) {
      diags.push_back({line.number, "", "expected 7 columns"});
      continue;
    }
    ReportTableRow row;
    row.node = std::string(f[0]);
    row.index = std::string(f[1]);
    if (!f[2].empty() || !f[3].empty() || !f[4].empty()) {
      const auto l = parse_double(f[2]);
      const auto m = parse_double(f[3]);
      const auto r = parse_double(f[4]);
      if (!l || !m || !r || !(*l <= *m && *m <= *r)) {
        diags.push_back({line.number, "left/core/right", "invalid fuzzy value"});
        continue;
      }
      row.fuzzy = Tfn(*l, *m, *r);
    }
    const auto value = parse_double(f[5]);
    const auto rank = parse_integer(f[6]);
    if (!value || !rank || *rank < 1) {
      diags.push_back({line.number, "cog/rank", "invalid number"});
      continue;
    }
    row.value = *value;
    row.rank = static_cast<std::size_t>(*rank);
    rows.push_back(std::move(row));
  }
  if (!header)
    diags.push_back({0, "", "missing column header"});
  if (!diags.empty())
    throw FormatError(std::move(diags));
  return rows;
}

std::string format_dot(const FuzzyDigraph& g) {
  std::ostringstream out;
  out << "digraph fsn {\n";
  for (const auto& label : g.labels())
    out << "  " << dot_quote(label) << ";\n";
  for (NodeIndex u = 0; u < g.size(); ++u)
    for (NodeIndex v = 0; v < g.size(); ++v)
      if (const auto& tie = g.edge(u, v))
        out << "  " << dot_quote(g.label(u)) << " -> " << dot_quote(g.label(v)) << " [label="
            << dot_quote(to_string(*tie) + " (" + format_real(cog(*tie)) + ")") << "];\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

}  // namespace fsna
