#include "rvc/records.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "rvc/error.hpp"

namespace rvc {
namespace {

using json = nlohmann::ordered_json;

const char* mode_name(RainbowMode mode) {
  return mode.kind == PathKind::rainbow ? "rainbow" : "revised";
}

void human_header(std::ostringstream& out, const RunReport& report) {
  out << "# command: " << report.command << '\n';
  if (!report.input_digest.empty()) out << "# input: " << report.input_digest << '\n';
  for (const auto& [key, value] : report.parameters) out << "# " << key << ": " << value << '\n';
}

json report_json(const RunReport& report) {
  json j;
  j["command"] = report.command;
  if (!report.input_digest.empty()) j["input_digest"] = report.input_digest;
  json params = json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = params;
  return j;
}

template <class Range>
void write_list(std::ostringstream& out, const Range& values) {
  for (const auto& v : values) out << ' ' << v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) h = (h ^ ch) * 0x100000001b3ULL;
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_coloring(const Coloring& c, const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json j;
    j["report"] = report_json(report);
    j["coloring"] = {{"vertices", c.vertex_count()},
                     {"colors", c.colors},
                     {"reported_count", c.reported_count},
                     {"provenance", c.provenance}};
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "vertices " << c.vertex_count() << "\ncolors";
  write_list(out, c.colors);
  out << "\ncount " << c.reported_count << "\nprovenance " << c.provenance << '\n';
  return out.str();
}

std::string format_ear_decomposition(const EarDecomposition& d, const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json ears = json::array();
    for (const Ear& e : d.ears) {
      std::vector<Vertex> interior(e.interior().begin(), e.interior().end());
      ears.push_back({{"a", e.a()}, {"interior", interior}, {"b", e.b()}, {"length", e.length()}});
    }
    json j;
    j["report"] = report_json(report);
    j["ear_decomposition"] = {{"initial_cycle", d.initial_cycle},
                              {"ears", ears},
                              {"t", d.long_count},
                              {"heuristic", d.heuristic}};
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "initial_cycle";
  write_list(out, d.initial_cycle);
  out << '\n';
  for (const Ear& e : d.ears) {
    out << "ear a " << e.a() << " interior";
    write_list(out, e.interior());
    out << " b " << e.b() << " length " << e.length() << '\n';
  }
  out << "t " << d.long_count << '\n';
  if (d.heuristic) out << "heuristic true\n";
  return out.str();
}

std::string format_blocks(const BlockDecomposition& b, const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::structured) {
    json j;
    j["report"] = report_json(report);
    j["block_decomposition"] = {{"blocks", b.blocks}, {"cut_vertices", b.cut_vertices}, {"t", b.cut_count()}};
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "blocks " << b.blocks.size() << '\n';
  for (const auto& block : b.blocks) {
    out << "block";
    write_list(out, block);
    out << '\n';
  }
  out << "cut_vertices";
  write_list(out, b.cut_vertices);
  out << "\nt " << b.cut_count() << '\n';
  return out.str();
}

std::string format_certificate(const Certificate& cert, const RunReport& report, OutputFormat format) {
  const char* status = cert.verified() ? "verified" : "counterexample";
  if (format == OutputFormat::structured) {
    json j;
    j["report"] = report_json(report);
    json c = {{"status", status}, {"mode", mode_name(cert.mode)}};
    if (cert.failing_pair) c["failing_pair"] = {cert.failing_pair->first, cert.failing_pair->second};
    if (!cert.witnesses.empty()) {
      json w = json::array();
      for (const auto& [pair, path] : cert.witnesses) w.push_back({{"pair", {pair.first, pair.second}}, {"path", path}});
      c["witnesses"] = w;
    }
    j["certificate"] = c;
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "status " << status << "\nmode " << mode_name(cert.mode) << '\n';
  if (cert.failing_pair) out << "failing_pair " << cert.failing_pair->first << ' ' << cert.failing_pair->second << '\n';
  for (const auto& [pair, path] : cert.witnesses) {
    out << "witness " << pair.first << ' ' << pair.second << " :";
    write_list(out, path);
    out << '\n';
  }
  return out.str();
}

std::string format_oracle(const OracleResult& result, RainbowMode mode, bool with_timing, const RunReport& report,
                          OutputFormat format) {
  if (format == OutputFormat::structured) {
    json j;
    j["report"] = report_json(report);
    json o = {{"mode", mode_name(mode)},
              {"value", result.value},
              {"witness", result.witness.colors},
              {"nodes_expanded", result.nodes}};
    if (with_timing) o["elapsed_ms"] = result.elapsed_ms;
    j["oracle"] = o;
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "mode " << mode_name(mode) << "\nvalue " << result.value << "\ncolors";
  write_list(out, result.witness.colors);
  out << "\nnodes " << result.nodes << '\n';
  if (with_timing) out << "elapsed_ms " << result.elapsed_ms << '\n';
  return out.str();
}

std::string format_cycle_table(const std::vector<CycleTableRow>& rows, const RunReport& report,
                               OutputFormat format) {
  if (format == OutputFormat::structured) {
    json list = json::array();
    for (const auto& r : rows) {
      json row = {{"n", r.n}, {"constructed", r.constructed}, {"verified", r.construction_verified}};
      row["exact"] = r.exact ? json(*r.exact) : json(nullptr);
      row["closed_form"] = r.closed_form;
      row["agrees"] = r.agrees();
      list.push_back(row);
    }
    json j;
    j["report"] = report_json(report);
    j["table"] = list;
    return dump(j);
  }
  std::ostringstream out;
  human_header(out, report);
  out << "n constructed verified exact closed_form agrees\n";
  for (const auto& r : rows) {
    out << r.n << ' ' << r.constructed << ' ' << (r.construction_verified ? "yes" : "no") << ' '
        << (r.exact ? std::to_string(*r.exact) : "-") << ' ' << r.closed_form << ' ' << (r.agrees() ? "yes" : "no")
        << '\n';
  }
  return out.str();
}

std::vector<Color> parse_coloring(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed coloring record: ") + e.what());
    }
    const json* colors = nullptr;
    if (j.contains("coloring") && j["coloring"].contains("colors")) colors = &j["coloring"]["colors"];
    else if (j.contains("colors")) colors = &j["colors"];
    if (!colors || !colors->is_array()) throw ParseError(0, "coloring record has no 'colors' array");
    std::vector<Color> out;
    for (const auto& c : *colors) {
      if (!c.is_number_integer() || c.get<long long>() < 0) throw ParseError(0, "color ids must be non-negative integers");
      out.push_back(c.get<Color>());
    }
    return out;
  }

  // Line format: either a `colors ...` line of a record or a bare id list.
  std::vector<Color> bare, keyed;
  bool has_keyed = false;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string word;
    if (!(words >> word)) continue;
    const bool keyed_line = word == "colors";
    if (!keyed_line && (word[0] < '0' || word[0] > '9') && word[0] != '-') continue;  // other record fields
    if (keyed_line) has_keyed = true;
    std::vector<Color>& target = keyed_line ? keyed : bare;
    if (!keyed_line) words.seekg(0);
    while (words >> word) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
      if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line_no, "expected a color id, got '" + word + "'");
      if (value < 0) throw ParseError(line_no, "negative color id");
      target.push_back(static_cast<Color>(value));
    }
  }
  return has_keyed ? keyed : bare;
}

}  // namespace rvc
