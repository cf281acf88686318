#include "dagconvex/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dagconvex/convexity.hpp"
#include "dagconvex/enumeration.hpp"
#include "dagconvex/error.hpp"
#include "dagconvex/families.hpp"
#include "dagconvex/io.hpp"
#include "dagconvex/report.hpp"

namespace dagconvex {

namespace {

struct Options {
  // shared
  std::optional<int> max_n;
  std::uint64_t seed = 0;
  std::string output_path;
  bool json = false;
  bool csv = false;

  // input selection
  std::string input_path;
  std::string family_spec;

  // gen
  std::string gen_family;
  int gen_param = 0;
  double gen_p = 0.5;

  // stats
  std::string set_class = "both";

  // check-convex / hull
  std::string set_list;

  // trend
  std::string trend_family;
  std::vector<int> trend_params;
};

OutputFormat output_format(const Options& o) {
  if (o.json && o.csv) throw Error(ErrorCode::InvalidParameter, "--json and --csv are mutually exclusive");
  if (o.json) return OutputFormat::Json;
  if (o.csv) return OutputFormat::Csv;
  return OutputFormat::Table;
}

EnumerationCaps caps_for(const Options& o) {
  EnumerationCaps caps;
  if (o.max_n) {
    caps.brute_force = std::max(caps.brute_force, *o.max_n);
    caps.extension = std::max(caps.extension, *o.max_n);
  }
  return caps;
}

void warn_if_overridden(const Options& o, int order, int default_cap, std::ostream& err) {
  if (o.max_n && order > default_cap) {
    err << "warning: order " << order << " exceeds the default cap " << default_cap
        << "; proceeding because of --max-n " << *o.max_n << '\n';
  }
}

struct Input {
  Digraph graph;
  std::optional<FamilySpec> spec;
  std::string description;
};

Input load_input(const Options& o) {
  if (o.input_path.empty() == o.family_spec.empty()) {
    throw Error(ErrorCode::InvalidParameter, "give exactly one of FILE or --family SPEC");
  }
  if (!o.input_path.empty()) return {load_digraph(o.input_path), std::nullopt, o.input_path};
  FamilySpec spec = parse_family_spec(o.family_spec, o.seed);
  return {generate(spec).graph, spec, spec.to_string()};
}

EnumerationReport enumerate_class(const Digraph& d, SetClass c, const Options& o, std::ostream& err) {
  EnumerationCaps caps = caps_for(o);
  if (c == SetClass::ConnectedConvex && is_connected(d)) {
    warn_if_overridden(o, d.order(), kExtensionMaxOrder, err);
    return enumerate_cc_extension(d, std::nullopt, {}, caps.extension);
  }
  warn_if_overridden(o, d.order(), kBruteForceMaxOrder, err);
  return enumerate_brute(d, c, {}, caps.brute_force);
}

int cmd_gen(const Options& o, std::ostream& out) {
  FamilySpec spec;
  if (o.gen_family == "random") {
    spec = {Family::Random, o.gen_param, o.gen_p, o.seed};
  } else {
    spec = parse_family_spec(o.gen_family + ":" + std::to_string(o.gen_param));
  }
  FamilyInstance inst = generate(spec);
  std::vector<std::string> header{"family: " + spec.to_string(),
                                  "order: " + std::to_string(inst.graph.order())};
  if (spec.family == Family::Dt || spec.family == Family::Gi) {
    std::string labels = "labels:";
    for (Vertex v = 0; v < inst.graph.order(); ++v) labels += " " + std::to_string(v) + "=" + inst.labels.name(v);
    header.push_back(labels);
  }
  write_edge_list(out, inst.graph, header);
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = load_input(o);
  std::vector<SetClass> classes;
  if (o.set_class == "both") {
    classes = {SetClass::Convex, SetClass::ConnectedConvex};
  } else {
    classes = {parse_set_class(o.set_class)};
  }
  std::vector<EnumerationReport> reports;
  for (SetClass c : classes) reports.push_back(enumerate_class(in.graph, c, o, err));

  switch (output_format(o)) {
    case OutputFormat::Json: {
      if (reports.size() == 1) {
        out << dump_json(report_to_json(reports[0]));
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << dump_json(arr);
      }
      break;
    }
    case OutputFormat::Csv:
      for (const auto& r : reports) {
        out << "# class: " << to_string(r.set_class) << '\n';
        write_report_csv(out, r);
      }
      break;
    case OutputFormat::Table:
      out << "input: " << in.description << '\n';
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out << '\n';
        write_report_table(out, reports[i]);
      }
      break;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Input in = load_input(o);
  const Digraph& d = in.graph;
  if (!is_connected(d)) throw Error(ErrorCode::DisconnectedInput, "verify needs a connected digraph");
  EnumerationCaps caps = caps_for(o);
  warn_if_overridden(o, d.order(), kExtensionMaxOrder, err);

  bool all_pass = true;
  auto verdict = [&](const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_pass = all_pass && pass;
  };

  out << "input: " << in.description << " (n=" << d.order() << ", m=" << d.arcs().size() << ")\n";

  EnumerationReport cc = enumerate_cc_extension(d, std::nullopt, {}, caps.extension);
  SizeBoundTable bound = size_bound_table(cc);
  write_size_bound_table(out, bound);
  verdict("size-lower-bound", bound.pass, "every size k has at least n-k+1 connected convex sets");

  if (d.order() >= 2) {
    std::vector<Vertex> ends = find_non_cut_endpoints(d);
    auto [sources, sinks] = sources_and_sinks(d);
    bool each_ok = true;
    for (Vertex v : ends) {
      each_ok = each_ok && (sources.contains(v) || sinks.contains(v)) && !is_cut_vertex(d, v);
    }
    std::string list;
    for (Vertex v : ends) list += (list.empty() ? "" : ",") + std::to_string(v);
    verdict("non-cut-endpoints", each_ok && ends.size() >= 2,
            std::to_string(ends.size()) + " non-cut sources/sinks {" + list + "}");
  } else {
    out << "SKIP non-cut-endpoints: order 1\n";
  }

  if (in.spec && in.spec->family == Family::Dt) {
    // Sets of the form Q ∪ {z} ∪ Q'; the remaining subsets of Y ∪ {z} ∪ Y'
    // are the 2r singletons of Y and Y'.
    DtInstance dt = gen_dt(in.spec->param);
    VertexSet inner = dt.layout.inner_set();
    VertexSet without_z = inner;
    without_z.erase(dt.layout.z());
    std::uint64_t total = count_cc_within(d, inner);
    std::uint64_t with_z = total - count_cc_within(d, without_z);
    std::uint64_t expected = std::uint64_t{1} << (2 * dt.layout.r);
    verdict("dt-inner-count", with_z == expected,
            std::to_string(with_z) + " connected convex sets inside Y+z+Y' contain z, expected 2^(2r) = " +
                std::to_string(expected) + " (" + std::to_string(total) + " inside in total)");
  }
  if (in.spec && in.spec->family == Family::Gi) {
    GiCounts closed = closed_form_gi_counts(in.spec->param);
    verdict("gi-cc-closed-form", cc.count == closed.connected_convex,
            std::to_string(cc.count) + " connected convex sets, closed form " +
                std::to_string(closed.connected_convex));
  }
  if (in.spec && in.spec->family == Family::Path) {
    PathCounts closed = closed_form_path_counts(in.spec->param);
    verdict("path-exact-histogram", cc.histogram == closed.histogram,
            "histogram equals n-k+1 at every k, total " + std::to_string(cc.count));
  }

  out << (all_pass ? "all checks passed" : "some checks FAILED") << '\n';
  if (!all_pass) {
    err << "failing instance:\n";
    write_edge_list(err, d, {"input: " + in.description});
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_check_convex(const Options& o, std::ostream& out) {
  Digraph d = load_digraph(o.input_path);
  VertexSet x = parse_vertex_list(d.order(), o.set_list);
  auto witness = find_convexity_violation(d, x);
  out << "set: {" << x.to_string() << "}\n";
  out << "connected: " << (is_underlying_connected(d, x) ? "yes" : "no") << '\n';
  out << "convex: " << (witness ? "no" : "yes") << '\n';
  if (witness) {
    out << "witness:";
    for (std::size_t i = 0; i < witness->path.size(); ++i) out << (i == 0 ? " " : " -> ") << witness->path[i];
    out << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_hull(const Options& o, std::ostream& out) {
  Digraph d = load_digraph(o.input_path);
  VertexSet x = parse_vertex_list(d.order(), o.set_list);
  out << convex_hull(d, x).to_string() << '\n';
  return kExitOk;
}

int cmd_trend(const Options& o, std::ostream& out, std::ostream& err) {
  FamilySpec probe = parse_family_spec(o.trend_family + ":1");
  EnumerationCaps caps = caps_for(o);
  for (int param : o.trend_params) {
    FamilySpec spec = probe;
    spec.param = param;
    warn_if_overridden(o, generate(spec).graph.order(), kExtensionMaxOrder, err);
  }
  auto rows = trend(probe.family, o.trend_params, caps);
  write_trend(out, probe.family, rows, output_format(o));
  return kExitOk;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.input_path, "Edge-list or DOT file");
  cmd->add_option("--family", o.family_spec, "Generated input, e.g. dt:4, gi:2, path:5, random:8:0.3[:seed]");
}

void add_format_flags(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_flag("--csv", o.csv, "CSV output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Convex and connected convex sets of acyclic digraphs", "dagconvex"};
  app.require_subcommand(1);
  app.add_option("--max-n", o.max_n, "Raise the enumeration order caps (prints a warning when used)")
      ->envname("DAGCONVEX_MAX_N")
      ->check(CLI::Range(1, 64));
  app.add_option("--seed", o.seed, "Seed for random families (default 0)");
  app.add_option("-o,--output", o.output_path, "Write output to FILE instead of stdout");

  auto* gen = app.add_subcommand("gen", "Write a generated digraph as an edge list");
  gen->add_option("family", o.gen_family, "dt | gi | path | random")->required();
  gen->add_option("param", o.gen_param, "t, i or n")->required();
  gen->add_option("--p", o.gen_p, "Arc probability for random");

  auto* stats = app.add_subcommand("stats", "Count sets and report sizes");
  add_input_options(stats, o);
  stats->add_option("--class", o.set_class, "co | cc | both")->check(CLI::IsMember({"co", "cc", "both"}));
  add_format_flags(stats, o);

  auto* verify = app.add_subcommand("verify", "Check the size lower bound and related properties");
  add_input_options(verify, o);

  auto* check = app.add_subcommand("check-convex", "Test one vertex set for convexity");
  check->add_option("file", o.input_path, "Edge-list or DOT file")->required();
  check->add_option("--set", o.set_list, "Comma-separated vertices")->required();

  auto* hull = app.add_subcommand("hull", "Print the convex hull of a vertex set");
  hull->add_option("file", o.input_path, "Edge-list or DOT file")->required();
  hull->add_option("--set", o.set_list, "Comma-separated vertices")->required();

  auto* trend_cmd = app.add_subcommand("trend", "Average-size trend over a family");
  trend_cmd->add_option("family", o.trend_family, "dt | gi | path")
      ->required()
      ->check(CLI::IsMember({"dt", "gi", "path"}));
  trend_cmd->add_option("--params", o.trend_params, "Comma-separated parameters")->required()->delimiter(',');
  add_format_flags(trend_cmd, o);

  for (auto* sub : {gen, stats, verify, check, hull, trend_cmd}) sub->fallthrough();

  std::vector<const char*> argv{"dagconvex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::ostringstream buffer;
  int status = kExitError;
  try {
    if (*gen) {
      status = cmd_gen(o, buffer);
    } else if (*stats) {
      status = cmd_stats(o, buffer, err);
    } else if (*verify) {
      status = cmd_verify(o, buffer, err);
    } else if (*check) {
      status = cmd_check_convex(o, buffer);
    } else if (*hull) {
      status = cmd_hull(o, buffer);
    } else if (*trend_cmd) {
      status = cmd_trend(o, buffer, err);
    }
  } catch (const Error& e) {
    out << buffer.str();
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (o.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "error: " << to_string(ErrorCode::Io) << ": cannot write " << o.output_path << '\n';
      return kExitError;
    }
  }
  return status;
}

}  // namespace dagconvex
