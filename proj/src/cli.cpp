// Copyright 2026 The gensat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gensat/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "gensat/bounds.hpp"
#include "gensat/constructions.hpp"
#include "gensat/count.hpp"
#include "gensat/errors.hpp"
#include "gensat/graph6.hpp"
#include "gensat/saturation.hpp"
#include "gensat/search.hpp"
#include "gensat/star_optimizer.hpp"
#include "gensat/version.hpp"
#include "json.hpp"

namespace gensat {
namespace {

using json = nlohmann::ordered_json;

json wide(Wide v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  const auto end = s.find_last_not_of(ws);
  s.erase(end == std::string::npos ? 0 : end + 1);
  return s;
}

// Inline graph6 or @path (first non-empty line of the file).
Graph read_graph(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("io_error", "cannot read " + arg.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (!line.empty()) return decode_graph6(line);
    }
    throw DomainError("io_error", "no graph6 line in " + arg.substr(1));
  }
  return decode_graph6(arg);
}

// Each --params value is k=v or a comma list of them; later keys win.
std::map<std::string, std::string> parse_params(
    const std::vector<std::string>& texts) {
  std::map<std::string, std::string> out;
  for (const std::string& text : texts) {
    std::stringstream ss(text);
    std::string item;
    std::size_t offset = 0;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (item.empty() || eq == std::string::npos || eq == 0) {
        throw ParseError("expected key=value in --params", offset);
      }
      out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
      offset += item.size() + 1;
    }
  }
  return out;
}

std::map<std::string, int> int_params(
    const std::map<std::string, std::string>& params) {
  std::map<std::string, int> out;
  for (const auto& [k, v] : params) {
    try {
      std::size_t used = 0;
      out[k] = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ParseError("parameter " + k + " must be an integer", 0);
    }
  }
  return out;
}

json graph_summary(const Graph& g) {
  json j;
  j["graph6"] = encode_graph6(g);
  j["order"] = g.order();
  j["size"] = g.size();
  j["degrees"] = g.degrees();
  return j;
}

json claim(const std::string& what, bool holds) {
  return json{{"claim", what}, {"holds", holds}};
}

json construct_claims(const ConstructionResult& c,
                      const std::map<std::string, int>& p) {
  json claims = json::array();
  const Graph& g = c.graph;
  auto sat = [&](const Pattern& f) {
    claims.push_back(claim(f.spec() + "-saturated", saturated(g, f)));
  };
  auto get = [&](const char* k) { return p.at(k); };
  if (!c.part.empty()) {
    claims.push_back(claim("proper " + std::to_string(c.parts) + "-partition",
                           is_proper_partition(g, c.part, c.parts)));
  }
  if (c.family == "split" || c.family == "gtn") {
    sat(Pattern::clique(get("t")));
  } else if (c.family == "kr") {
    sat(Pattern::star(get("t")));
  } else if (c.family == "partite_saturated") {
    sat(Pattern::star(get("t")));
  } else if (c.family == "regular_multipartite") {
    claims.push_back(claim(std::to_string(get("k")) + "-regular",
                           g.min_degree() == get("k") && g.max_degree() == get("k")));
  } else if (c.family == "g49" || c.family == "g4n") {
    sat(Pattern::clique(4));
  } else if (c.family == "w_t") {
    claims.push_back(claim("K" + std::to_string(get("t")) + "-free",
                           !contains_copy(g, Pattern::clique(get("t")))));
    sat(Pattern::clique(get("t")));
  } else if (c.family == "fig1") {
    claims.push_back(claim("K4-free", !contains_copy(g, Pattern::clique(4))));
    sat(Pattern::star(5));
  } else if (c.family == "fig2") {
    sat(Pattern::star(5));
  } else if (c.family == "t_star") {
    claims.push_back(claim("tree", is_tree(g)));
  } else if (c.family == "cycle_pendants") {
    const Pattern ts = Pattern::tree(t_star());
    claims.push_back(claim("T*-free", !contains_copy(g, ts)));
    claims.push_back(claim("T*-saturated", saturated(g, ts)));
  }
  return claims;
}

json bound_json(const BoundReport& b) {
  json j;
  j["name"] = b.name;
  json params = json::object();
  for (const auto& [k, v] : b.parameters) params[k] = v;
  j["parameters"] = params;
  j["exact"] = b.exact;
  j["value"] = b.value;
  if (b.satisfied) j["satisfied"] = *b.satisfied;
  for (const auto& [k, v] : b.fields) j[k] = v;
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json report_json(const SearchReport& r) {
  json j;
  j["n"] = r.n;
  j["target"] = r.target;
  j["counted"] = r.counted;
  j["minimum"] = wide(r.minimum);
  j["witnesses"] = r.witnesses;
  j["witness_total"] = r.witness_total;
  j["graphs_examined"] = r.graphs_examined;
  j["saturated_found"] = r.saturated_found;
  return j;
}

json optional_graph(const std::optional<Graph>& g) {
  if (!g) return nullptr;
  return encode_graph6(*g);
}

struct Formula {
  std::string name;
  Wide value = 0;
  // Exact for every n in range; otherwise informational only.
  bool binding = true;
};

std::optional<Formula> formula_for(int n, const Pattern& f, const Pattern& h) {
  const bool h_edge = (h.kind() == PatternKind::kStar && h.parameter() == 1) ||
                      (h.kind() == PatternKind::kClique && h.parameter() == 2) ||
                      (h.kind() == PatternKind::kPath && h.parameter() == 2);
  if (f.kind() == PatternKind::kStar && h.kind() == PatternKind::kStar) {
    const int t = f.parameter();
    const int r = h.parameter();
    if (r >= t) return Formula{"star_star_trivial", 0, true};
    if (t >= 2 && n >= 2 * t - 1) {
      return Formula{"star_star", satnum_star_star(n, r, t).satnum, true};
    }
    return std::nullopt;
  }
  if (f.kind() == PatternKind::kClique && f.parameter() >= 2 &&
      n >= f.parameter()) {
    const int t = f.parameter();
    if (h_edge) return Formula{"ehm", ehm_value(n, t), true};
    if (h.kind() == PatternKind::kClique && h.parameter() >= 3 &&
        h.parameter() < t) {
      return Formula{"cl", cl_value(n, h.parameter(), t), false};
    }
  }
  return std::nullopt;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  int workers = 0;
};

SearchOptions search_options(int workers, int cap, int split) {
  SearchOptions o;
  o.workers = workers;
  o.max_order = cap;
  o.split_order = split;
  return o;
}

json schema_json() {
  json s;
  s["schema_version"] = kSchemaVersion;
  s["command_report"] = {{"command", "string"},
                         {"parameters", "object"},
                         {"result", "object"},
                         {"wall_time_ms", "number"},
                         {"version", "string"}};
  s["error_report"] = {{"command", "string"},
                       {"error", {{"code", "string"}, {"message", "string"}}},
                       {"version", "string"}};
  json c;
  c["construct"] = {{"family", "string"},     {"parameters", "object"},
                    {"graph6", "string"},     {"order", "integer"},
                    {"size", "integer"},      {"degrees", "integer[]"},
                    {"partition", "integer[]?"}, {"recipe", "string?"},
                    {"claims", "{claim, holds}[]"}};
  c["count"] = {{"graph6", "string"}, {"pattern", "string?"},
                {"count", "integer?"}, {"alpha", "integer?"},
                {"independent_sets", "integer?"}};
  c["check-sat"] = {{"graph", "string"},     {"pattern", "string|string[]"},
                    {"saturated", "boolean"}, {"free", "boolean"},
                    {"witness", "object"},    {"validated", "boolean"}};
  c["satnum star-star"] = {{"satnum", "integer"}, {"m0", "integer?"},
                           {"tie", "boolean?"},   {"values", "(integer|null)[]?"},
                           {"note", "string?"}};
  c["satnum exact"] = {{"n", "integer"},          {"target", "string"},
                       {"counted", "string"},     {"minimum", "integer"},
                       {"witnesses", "string[]"}, {"witness_total", "integer"},
                       {"graphs_examined", "integer"},
                       {"saturated_found", "integer"}};
  c["m0"] = {{"m0", "integer"},     {"tie", "boolean"},
             {"satnum", "integer"}, {"xbar", "number?"},
             {"xbar_integral", "boolean?"}, {"ceil_xbar", "integer?"},
             {"values", "(integer|null)[]"}};
  c["tie-ts"] = {{"ts", "integer[]"}, {"note", "string"}};
  c["bounds"] = {{"name", "string"},  {"parameters", "object"},
                 {"exact", "string"}, {"value", "number"},
                 {"satisfied", "boolean?"}, {"note", "string?"}};
  c["scan tstar"] = {{"first_order", "integer"},
                     {"entries", "{n, candidates, found, witness}[]"},
                     {"none_found", "boolean"},
                     {"control_order", "integer"},
                     {"control_witness", "string|null"}};
  c["exists"] = {{"n", "integer"},          {"target", "string"},
                 {"property", "string"},    {"found", "boolean"},
                 {"witness", "string|null"}, {"graphs_examined", "integer"}};
  c["certify"] = {{"grid", "string"},
                  {"entries", "{line, n, F, H, oracle, formula, match, expected?, expected_match?}[]"},
                  {"mismatches", "integer"}};
  c["version"] = {{"version", "string"}, {"schema_version", "integer"}};
  s["commands"] = c;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  int default_workers = 0;
  if (const char* env = std::getenv("GENSAT_WORKERS")) {
    default_workers = std::max(0, std::atoi(env));
  }

  CLI::App app{"Generalized saturation numbers: constructions, counts, "
               "certificates, exact search.",
               "gensat"};
  app.set_help_all_flag("--help-all", "Expand all help");
  bool schema = false;
  app.add_flag("--schema", schema, "Print the JSON schema of command reports");
  app.require_subcommand(0, 1);

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph family");
  std::string family;
  std::vector<std::string> construct_params;
  construct_cmd->add_option("family", family, "Family name")->required();
  construct_cmd->add_option("--params", construct_params, "k=v,k=v,... (repeatable)");

  // count
  auto* count_cmd = app.add_subcommand("count", "Count copies of a pattern");
  std::string count_graph;
  std::string count_pattern_text;
  bool want_alpha = false;
  int indep_k = -1;
  count_cmd->add_option("--graph", count_graph, "graph6 or @file")->required();
  count_cmd->add_option("--pattern", count_pattern_text, "K5, S4, P6, C7, T:<g6>, G:<g6>");
  count_cmd->add_flag("--alpha", want_alpha, "Report the independence number");
  count_cmd->add_option("--independent-sets", indep_k, "Count independent k-sets");

  // check-sat
  auto* check_cmd = app.add_subcommand("check-sat", "Saturation certificate");
  std::string check_graph;
  std::vector<std::string> check_forbid;
  bool check_full = false;
  check_cmd->add_option("--graph", check_graph, "graph6 or @file")->required();
  check_cmd->add_option("--forbid", check_forbid, "Forbidden pattern (repeatable)")
      ->required();
  check_cmd->add_flag("--full", check_full,
                      "Search the whole graph after each added edge");

  // satnum
  auto* satnum_cmd = app.add_subcommand("satnum", "Generalized saturation numbers");
  satnum_cmd->require_subcommand(1);
  int n = 0;
  int r = 0;
  int t = 0;
  auto* ss_cmd = satnum_cmd->add_subcommand("star-star", "sat_{S_r}(n, S_t) in closed form");
  ss_cmd->add_option("--n", n)->required();
  ss_cmd->add_option("--r", r)->required();
  ss_cmd->add_option("--t", t)->required();
  auto* exact_cmd = satnum_cmd->add_subcommand("exact", "Exhaustive sat_H(n, F)");
  std::string forbid_text;
  std::string count_text;
  std::string property_text;
  int max_degree = -1;
  int workers = default_workers;
  int cap = 10;
  int split = -1;
  bool connected = false;
  bool no_prune = false;
  exact_cmd->add_option("--n", n)->required();
  exact_cmd->add_option("--forbid", forbid_text, "F")->required();
  exact_cmd->add_option("--count", count_text, "H")->required();
  exact_cmd->add_option("--max-degree", max_degree);
  exact_cmd->add_option("--property", property_text,
                        "Kq-free, bipartite, partite:r, max-clique:q");
  exact_cmd->add_option("--workers", workers);
  exact_cmd->add_option("--cap", cap, "Largest order allowed");
  exact_cmd->add_option("--split-order", split);
  exact_cmd->add_flag("--connected", connected);
  exact_cmd->add_flag("--no-prune", no_prune, "Disable F-free pruning");

  // m0
  auto* m0_cmd = app.add_subcommand("m0", "Minimising clique size m0(n, r, t)");
  m0_cmd->add_option("--n", n)->required();
  m0_cmd->add_option("--r", r)->required();
  m0_cmd->add_option("--t", t)->required();

  // tie-ts
  auto* tie_cmd = app.add_subcommand("tie-ts", "t values with ties at r = 2");
  int i_max = 0;
  tie_cmd->add_option("--max", i_max)->required();

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds");
  std::string bound_name;
  std::vector<std::string> bound_params;
  bounds_cmd->add_option("name", bound_name)->required();
  bounds_cmd->add_option("--params", bound_params, "k=v,k=v,... (repeatable)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scans");
  scan_cmd->require_subcommand(1);
  auto* tstar_cmd = scan_cmd->add_subcommand("tstar", "Triangle-free T*-saturated graphs");
  int max_n = 10;
  tstar_cmd->add_option("--max-n", max_n);
  tstar_cmd->add_option("--workers", workers);

  // exists
  auto* exists_cmd = app.add_subcommand("exists", "Saturated graph with a property");
  exists_cmd->add_option("--n", n)->required();
  exists_cmd->add_option("--forbid", forbid_text)->required();
  exists_cmd->add_option("--property", property_text)->required();
  exists_cmd->add_option("--workers", workers);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Oracle versus formula over a grid");
  std::string grid_path;
  std::string archive_path;
  certify_cmd->add_option("--grid", grid_path, "Lines 'n F H [value]'")->required();
  certify_cmd->add_option("--archive", archive_path, "Write the archive JSON here");
  certify_cmd->add_option("--workers", workers);

  auto* version_cmd = app.add_subcommand("version", "Print the version");

  std::string command_name;
  json error_report;
  auto fail = [&](const std::string& code, const std::string& message, int status) {
    json j;
    j["command"] = command_name;
    j["error"] = {{"code", code}, {"message", message}};
    j["version"] = kVersion;
    out << j.dump() << '\n';
    err << "gensat: " << message << '\n';
    return status;
  };

  // Best-effort name for usage errors raised before dispatch.
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    command_name = args[0];
    if ((args[0] == "satnum" || args[0] == "scan") && args.size() > 1 &&
        !args[1].empty() && args[1][0] != '-') {
      command_name += " " + args[1];
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int status = fail("usage", e.what(), kExitUsage);
    err << app.help();
    return status;
  }

  if (schema) {
    out << schema_json().dump() << '\n';
    return kExitOk;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return fail("usage", "a command is required", kExitUsage);
  }

  json params = json::object();
  json result;
  int status = kExitOk;
  try {
    if (construct_cmd->parsed()) {
      command_name = "construct";
      const auto p = int_params(parse_params(construct_params));
      json numbers = json::object();
      for (const auto& [k, v] : p) numbers[k] = v;
      params["family"] = family;
      params["params"] = numbers;
      const ConstructionResult c = construct(family, p);
      result["family"] = c.family;
      result["parameters"] = numbers;
      const json summary = graph_summary(c.graph);
      for (const auto& [k, v] : summary.items()) result[k] = v;
      if (!c.part.empty()) {
        result["partition"] = c.part;
        result["parts"] = c.parts;
      }
      if (!c.recipe.empty()) result["recipe"] = c.recipe;
      result["claims"] = construct_claims(c, p);
    } else if (count_cmd->parsed()) {
      command_name = "count";
      params["graph"] = count_graph;
      const Graph g = read_graph(count_graph);
      result["graph6"] = encode_graph6(g);
      if (!count_pattern_text.empty()) {
        params["pattern"] = count_pattern_text;
        const Pattern p = Pattern::parse(count_pattern_text);
        result["pattern"] = p.spec();
        result["count"] = count_pattern(g, p);
      }
      if (want_alpha) result["alpha"] = independence_number(g);
      if (indep_k >= 0) {
        params["independent_sets"] = indep_k;
        result["independent_sets"] = count_independent_sets(g, indep_k);
      }
      if (count_pattern_text.empty() && !want_alpha && indep_k < 0) {
        return fail("usage", "count needs --pattern, --alpha or --independent-sets",
                    kExitUsage);
      }
    } else if (check_cmd->parsed()) {
      command_name = "check-sat";
      params["graph"] = check_graph;
      params["forbid"] = check_forbid;
      params["full"] = check_full;
      const Graph g = read_graph(check_graph);
      Family fs;
      for (const auto& f : check_forbid) fs.push_back(Pattern::parse(f));
      SaturationOptions opts;
      opts.anchored = !check_full;
      const SaturationCertificate cert = is_family_saturated(g, fs, opts);
      result = json::parse(certificate_json(g, fs, cert));
      const std::string problem = validate_certificate(g, fs, cert);
      result["validated"] = problem.empty();
      if (!problem.empty()) result["validation_problem"] = problem;
    } else if (ss_cmd->parsed()) {
      command_name = "satnum star-star";
      params = {{"n", n}, {"r", r}, {"t", t}};
      const StarStarResult s = satnum_star_star(n, r, t);
      result["satnum"] = wide(s.satnum);
      if (s.scan) {
        result["m0"] = s.scan->m0;
        result["tie"] = s.scan->tie;
        json values = json::array();
        for (const auto& v : s.scan->values) values.push_back(v ? wide(*v) : json(nullptr));
        result["values"] = values;
      }
      if (!s.note.empty()) result["note"] = s.note;
    } else if (exact_cmd->parsed()) {
      command_name = "satnum exact";
      params = {{"n", n}, {"forbid", forbid_text}, {"count", count_text}};
      SearchConstraints c = parse_property(property_text);
      if (!property_text.empty()) params["property"] = property_text;
      if (max_degree >= 0) {
        c.max_degree = max_degree;
        params["max_degree"] = max_degree;
      }
      c.connected_only = connected;
      if (connected) params["connected"] = true;
      if (no_prune) params["prune"] = false;
      const SearchReport rep =
          satnum_exact(n, Pattern::parse(forbid_text), Pattern::parse(count_text), c,
                       search_options(workers, cap, split), !no_prune);
      result = report_json(rep);
    } else if (m0_cmd->parsed()) {
      command_name = "m0";
      params = {{"n", n}, {"r", r}, {"t", t}};
      const M0Result m = m0(n, r, t);
      result["m0"] = m.m0;
      result["tie"] = m.tie;
      result["satnum"] = wide(m.satnum);
      if (r >= 2) {
        const XbarInfo x = xbar_info(r, t);
        result["xbar"] = x.value;
        result["xbar_integral"] = x.integral;
        result["ceil_xbar"] = x.ceiling;
      }
      json values = json::array();
      for (const auto& v : m.values) values.push_back(v ? wide(*v) : json(nullptr));
      result["values"] = values;
    } else if (tie_cmd->parsed()) {
      command_name = "tie-ts";
      params = {{"max", i_max}};
      json ts = json::array();
      for (Wide v : tie_ts(i_max)) ts.push_back(wide(v));
      result["ts"] = ts;
      result["note"] = "t(0) = 2 lies outside the star analysis, which needs t >= 3";
    } else if (bounds_cmd->parsed()) {
      command_name = "bounds";
      const auto p = parse_params(bound_params);
      params["name"] = bound_name;
      for (const auto& [k, v] : p) params[k] = v;
      result = bound_json(evaluate_bound(bound_name, p));
    } else if (tstar_cmd->parsed()) {
      command_name = "scan tstar";
      params = {{"max_n", max_n}};
      const TstarScanReport rep = tstar_scan(max_n, search_options(workers, 10, -1));
      result["first_order"] = rep.first_order;
      json entries = json::array();
      for (const auto& e : rep.entries) {
        entries.push_back({{"n", e.n},
                           {"candidates", e.candidates},
                           {"found", e.witness.has_value()},
                           {"witness", optional_graph(e.witness)}});
      }
      result["entries"] = entries;
      result["none_found"] = rep.none_found;
      result["control_order"] = rep.control_order;
      result["control_witness"] = optional_graph(rep.control_witness);
    } else if (exists_cmd->parsed()) {
      command_name = "exists";
      params = {{"n", n}, {"forbid", forbid_text}, {"property", property_text}};
      const ExistenceReport rep = exists_saturated_with(
          n, Pattern::parse(forbid_text), property_text, search_options(workers, 10, -1));
      result["n"] = rep.n;
      result["target"] = rep.target;
      result["property"] = rep.property;
      result["found"] = rep.witness.has_value();
      result["witness"] = optional_graph(rep.witness);
      result["graphs_examined"] = rep.graphs_examined;
    } else if (certify_cmd->parsed()) {
      command_name = "certify";
      params = {{"grid", grid_path}};
      std::ifstream in(grid_path);
      if (!in) throw DomainError("io_error", "cannot read grid file " + grid_path);
      json entries = json::array();
      int mismatches = 0;
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n_text;
        std::string f_text;
        std::string h_text;
        std::string expected_text;
        std::string extra;
        fields >> n_text >> f_text >> h_text >> expected_text;
        if (h_text.empty() || (fields >> extra)) {
          throw ParseError("grid line " + std::to_string(line_no) +
                               ": expected 'n F H [value]'", 0);
        }
        // Optional pinned value: an integer or "none".
        std::optional<std::optional<Wide>> expected;
        if (!expected_text.empty()) {
          if (expected_text == "none") {
            expected = std::optional<Wide>{};
          } else {
            try {
              std::size_t used = 0;
              const long long v = std::stoll(expected_text, &used);
              if (used != expected_text.size()) throw std::invalid_argument(expected_text);
              expected = std::optional<Wide>{v};
            } catch (const std::exception&) {
              throw ParseError("grid line " + std::to_string(line_no) +
                                   ": expected value must be an integer or 'none'", 0);
            }
          }
        }
        int gn = 0;
        try {
          std::size_t used = 0;
          gn = std::stoi(n_text, &used);
          if (used != n_text.size()) throw std::invalid_argument(n_text);
        } catch (const std::exception&) {
          throw ParseError("grid line " + std::to_string(line_no) +
                               ": order must be an integer", 0);
        }
        std::optional<Pattern> fp;
        std::optional<Pattern> hp;
        try {
          fp = Pattern::parse(f_text);
          hp = Pattern::parse(h_text);
        } catch (const DomainError& e) {
          throw ParseError("grid line " + std::to_string(line_no) + ": " + e.what(), 0);
        }
        const Pattern& f = *fp;
        const Pattern& h = *hp;
        json entry;
        entry["line"] = line_no;
        entry["n"] = gn;
        entry["F"] = f.spec();
        entry["H"] = h.spec();
        std::optional<Wide> oracle;
        try {
          const SearchReport rep =
              satnum_exact(gn, f, h, {}, search_options(workers, 10, -1));
          oracle = rep.minimum;
          entry["oracle"] = wide(rep.minimum);
          entry["witnesses"] = rep.witnesses;
        } catch (const DomainError& e) {
          if (e.code() != "none_exist") throw;
          entry["oracle"] = nullptr;
          entry["oracle_note"] = e.what();
        }
        const std::optional<Formula> formula = formula_for(gn, f, h);
        if (formula) {
          entry["formula"] = {{"name", formula->name},
                              {"value", wide(formula->value)},
                              {"binding", formula->binding}};
          const bool match = oracle && *oracle == formula->value;
          entry["match"] = match;
          if (!match && formula->binding) {
            ++mismatches;
            err << "gensat: mismatch at grid line " << line_no << " (" << gn << ' '
                << f.spec() << ' ' << h.spec() << "): oracle "
                << (oracle ? to_string(*oracle) : std::string("none")) << ", "
                << formula->name << ' ' << to_string(formula->value) << '\n';
          }
        } else {
          entry["formula"] = nullptr;
          entry["match"] = nullptr;
        }
        if (expected) {
          entry["expected"] = *expected ? json(wide(**expected)) : json(nullptr);
          const bool ok = *expected == oracle;
          entry["expected_match"] = ok;
          if (!ok) {
            ++mismatches;
            err << "gensat: mismatch at grid line " << line_no << " (" << gn << ' '
                << f.spec() << ' ' << h.spec() << "): oracle "
                << (oracle ? to_string(*oracle) : std::string("none")) << ", expected "
                << (*expected ? to_string(**expected) : std::string("none")) << '\n';
          }
        }
        entries.push_back(entry);
      }
      result["grid"] = grid_path;
      result["entries"] = entries;
      result["mismatches"] = mismatches;
      if (!archive_path.empty()) {
        std::ofstream arch(archive_path);
        if (!arch) throw DomainError("io_error", "cannot write " + archive_path);
        arch << result.dump(2) << '\n';
        params["archive"] = archive_path;
      }
      if (mismatches > 0) status = kExitMismatch;
    } else if (version_cmd->parsed()) {
      command_name = "version";
      result = {{"version", kVersion}, {"schema_version", kSchemaVersion}};
    }
  } catch (const DomainError& e) {
    return fail(e.code(), e.what(), kExitDomain);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kExitDomain);
  }

  const auto stop = std::chrono::steady_clock::now();
  json report;
  report["command"] = command_name;
  report["parameters"] = params;
  report["result"] = result;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();
  report["version"] = kVersion;
  out << report.dump() << '\n';
  return status;
}

}  // namespace gensat
