#include "drgkit_tools/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "drgkit/drgkit.hpp"
#include "drgkit_tools/report.hpp"
#include "drgkit_tools/reproduce.hpp"

namespace drgkit::tools {

namespace {

constexpr std::size_t kSlowThreshold = 100;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string family;
  std::vector<long> params;

  void add_options(CLI::App* cmd, bool positional) {
    if (positional) cmd->add_option("graph", path, "Graph file (JSON or edge list)");
    cmd->add_option("--family", family, "Construct a family instead of loading a file");
    cmd->add_option("--params", params, "Family parameters, comma separated")->delimiter(',');
  }

  Graph load() const {
    if (!path.empty() && !family.empty()) throw UsageError("give either a graph file or --family, not both");
    if (!family.empty()) return construct(FamilySpec{family_from_name(family), params});
    if (path.empty()) throw UsageError("missing graph file or --family");
    if (!params.empty()) throw UsageError("--params needs --family");
    return load_graph(path);
  }
};

bool is_usage_kind(const std::string& kind) {
  return kind == "unknown family" || kind == "arity" || kind == "parameter range" || kind == "unknown table";
}

void write_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("io", "cannot write " + out_path);
  f << text;
  if (!f) throw Error("io", "write failed for " + out_path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"drgkit: Terwilliger algebras of distance-regular graphs", "drgkit"};
  app.require_subcommand(1);

  std::string out_path;
  bool float_fallback = false;

  std::string family;
  std::vector<long> params;
  auto* construct_cmd = app.add_subcommand("construct", "Build a graph from a family and write it as JSON");
  construct_cmd->add_option("--family", family, "Family name")->required();
  construct_cmd->add_option("--params", params, "Family parameters, comma separated")->delimiter(',');
  construct_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");

  GraphSource analyze_src;
  std::size_t base_vertex = 0;
  bool all_vertices = false;
  bool slow = false;
  std::size_t threads = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Write a JSON analysis report");
  analyze_src.add_options(analyze_cmd, true);
  auto* base_opt = analyze_cmd->add_option("--base-vertex", base_vertex, "Base vertex (default 0)");
  analyze_cmd->add_flag("--all-vertices", all_vertices, "One record per vertex")->excludes(base_opt);
  analyze_cmd->add_flag("--slow", slow, "Allow --all-vertices on graphs with more than 100 vertices");
  analyze_cmd->add_flag("--float-fallback", float_fallback, "Accept uncertified floating-point spectra");
  analyze_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  analyze_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");

  GraphSource pvt_src;
  auto* pvt_cmd = app.add_subcommand("pvt", "Decide pseudo-vertex-transitivity");
  pvt_src.add_options(pvt_cmd, true);
  pvt_cmd->add_flag("--float-fallback", float_fallback, "Accept uncertified floating-point spectra");

  std::string tiso_a;
  std::string tiso_b;
  auto* tiso_cmd = app.add_subcommand("tiso", "Decide T-isomorphism of two strongly regular graphs");
  tiso_cmd->add_option("first", tiso_a, "First graph file")->required();
  tiso_cmd->add_option("second", tiso_b, "Second graph file")->required();
  tiso_cmd->add_flag("--float-fallback", float_fallback, "Accept uncertified floating-point spectra");

  std::string table;
  auto* repro_cmd = app.add_subcommand("reproduce", "Regenerate a published table and compare");
  std::vector<std::string> choices = table_names();
  choices.push_back("all");
  repro_cmd->add_option("--table", table, "Table name")->required()->check(CLI::IsMember(choices));
  repro_cmd->add_flag("--slow", slow, "Include the 128-vertex half-cube");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*construct_cmd) {
      const Graph g = construct(FamilySpec{family_from_name(family), params});
      write_text(graph_to_json(g), out_path, out);
      std::ostream& info = out_path.empty() ? err : out;
      info << g.label() << ": n=" << g.order();
      if (auto k = g.regular_degree()) {
        info << ", regular of degree " << *k << "\n";
      } else {
        info << ", not regular\n";
      }
      return kSuccess;
    }
    if (*analyze_cmd) {
      const Graph g = analyze_src.load();
      if (all_vertices && g.order() > kSlowThreshold && !slow)
        throw UsageError("--all-vertices on " + std::to_string(g.order()) + " vertices needs --slow");
      AnalyzeOptions opts;
      opts.all_vertices = all_vertices;
      opts.base_vertex = base_vertex;
      opts.float_fallback = float_fallback;
      opts.threads = threads;
      const Analysis a = analyze(g, opts);
      write_text(report_json(a, opts).dump(2) + "\n", out_path, out);
      return kSuccess;
    }
    if (*pvt_cmd) {
      const Graph g = pvt_src.load();
      PvtOptions opts;
      opts.spectrum.allow_float = float_fallback;
      const PvtVerdict v = check_pvt(g, opts);
      out << g.label() << ": " << verdict_name(v.verdict) << " (" << method_name(v.method) << ")\n";
      if (v.witness) out << "witness: " << v.witness->x << ", " << v.witness->y << ": " << v.witness->detail << "\n";
      for (const auto& n : v.notes) out << "note: " << n << "\n";
      return kSuccess;
    }
    if (*tiso_cmd) {
      PvtOptions opts;
      opts.spectrum.allow_float = float_fallback;
      const TIsoResult r = t_isomorphic_srg(load_graph(tiso_a), load_graph(tiso_b), opts);
      out << (r.isomorphic ? "T-isomorphic" : "not T-isomorphic") << "\n";
      if (r.witness) out << "witness: " << *r.witness << "\n";
      for (const auto& n : r.notes) out << "note: " << n << "\n";
      return kSuccess;
    }
    if (*repro_cmd) {
      ReproduceOptions opts;
      opts.slow = slow;
      std::vector<std::string> names = table == "all" ? table_names() : std::vector<std::string>{table};
      bool ok = true;
      for (const auto& name : names) {
        const TableResult t = reproduce_table(name, opts);
        print_table(out, t);
        ok = ok && t.ok();
      }
      return ok ? kSuccess : kMismatch;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_kind(e.kind()) ? kUsage : kAnalysisFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kAnalysisFailure;
  }
  return kUsage;
}

}  // namespace drgkit::tools
