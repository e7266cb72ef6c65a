#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "ratiocert/certifier/certificate.hpp"
#include "ratiocert/certifier/evidence.hpp"
#include "ratiocert/certifier/families.hpp"
#include "ratiocert/certifier/ratio.hpp"
#include "ratiocert/constructions/p33.hpp"
#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/matrix_io.hpp"
#include "ratiocert/graph_core/endomorphism.hpp"
#include "ratiocert/graph_core/graph.hpp"
#include "ratiocert/graph_core/spectrum.hpp"

namespace ratiocert::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kUsage;
    case ErrorKind::kBudgetExceeded:
    case ErrorKind::kRankTooLarge: return kBudget;
    default: return kChecksFailed;
  }
}

int exit_code_for(const Certificate& c) {
  if (c.status == "certified") return kOk;
  if (c.error == to_string(ErrorKind::kBudgetExceeded) || c.error == to_string(ErrorKind::kRankTooLarge)) return kBudget;
  return kChecksFailed;
}

/// RATIOCERT_BUDGET, when set, replaces the default search budget.
std::uint64_t search_budget(std::uint64_t fallback) {
  const char* env = std::getenv("RATIOCERT_BUDGET");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long b = std::stoull(env, &used);
    if (used == std::string(env).size() && b > 0) return b;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, std::string("RATIOCERT_BUDGET must be a positive integer, got '") + env + "'");
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open graph file '" + path + "'");
  return read_graph_text(in);
}

struct FamilyArgs {
  FamilyRequest request;

  void attach(CLI::App* sub) {
    sub->add_option("family", request.family, "p33, witt, q_kneser, kneser or line_complete")->required();
    sub->add_option("--q", request.q, "field size (q_kneser)");
    sub->add_option("--v", request.v, "ambient dimension or ground set size");
    sub->add_option("--k", request.k, "subspace dimension or subset size");
    sub->add_option("--n", request.n, "order of the complete graph (line_complete)");
  }
  FamilyRequest normalized() const {
    FamilyRequest r = request;
    std::replace(r.family.begin(), r.family.end(), '-', '_');
    return r;
  }
};

void print_summary(std::ostream& out, const Certificate& c) {
  out << "family   " << c.family;
  for (const auto& [k, v] : c.parameters) out << " " << k << "=" << v;
  out << "\nstatus   " << c.status << "\n";
  if (!c.error.empty()) out << "error    " << c.error << ": " << c.error_message << "\n";
  if (c.spectrum) {
    out << "spectrum";
    for (auto [l, m] : c.spectrum->pairs) out << " " << l << "^" << m;
    out << "\n";
  }
  if (c.ratio) out << "bound    " << c.ratio->bound.to_string() << (c.ratio->tight ? " (tight)" : "") << "\n";
  out << "method   " << c.method;
  if (!c.seed_strategy.empty()) out << " [" << c.seed_strategy << "]";
  out << "\nsets     " << c.max_independent_sets.size() << "\n";
  for (const auto& ic : c.identity_checks) {
    out << (ic.pass ? "  PASS " : "  FAIL ") << ic.name;
    if (!ic.detail.empty()) out << "  (" << ic.detail << ")";
    out << "\n";
  }
  for (const auto& n : c.notes) out << "  note: " << n << "\n";
  for (const auto& [stage, ms] : c.timings) out << "  time " << stage << ": " << ms << " ms\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ratio-bound certificates for maximum independent sets", "ratiocert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RATIOCERT_VERSION);

  FamilyArgs build_args;
  std::string out_dir;
  auto* build = app.add_subcommand("build", "Write the graph and the matrix M of a family");
  build_args.attach(build);
  build->add_option("--out", out_dir, "output directory")->required();

  std::string spectrum_file;
  auto* spectrum = app.add_subcommand("spectrum", "Integer spectrum of a regular graph file");
  spectrum->add_option("graph", spectrum_file, "graph in text format")->required();

  FamilyArgs certify_args;
  std::string json_path;
  std::string seeds_text;
  unsigned jobs = 1;
  bool timings = false;
  std::size_t rank_cap = 24;
  auto* certify = app.add_subcommand("certify", "Run the full certification pipeline");
  certify_args.attach(certify);
  certify->add_option("--json", json_path, "write the certificate to this file ('-' for stdout)");
  certify->add_option("--seeds", seeds_text, "singletons or pairs:A<c>");
  certify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  certify->add_flag("--timings", timings, "record stage timings in the certificate");
  certify->add_option("--rank-cap", rank_cap, "largest rank(C) to enumerate");

  FamilyArgs enumerate_args;
  auto* enumerate = app.add_subcommand("enumerate", "List the maximum independent sets of a family");
  enumerate_args.attach(enumerate);
  enumerate->add_option("--seeds", seeds_text, "singletons or pairs:A<c>");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  enumerate->add_option("--rank-cap", rank_cap, "largest rank(C) to enumerate");

  std::string core_family;
  auto* core = app.add_subcommand("core-evidence", "Intersection checks on the sets S_ij of P(3^3)");
  core->add_option("family", core_family, "p33")->required()->check(CLI::IsMember({"p33"}));

  std::string endo_file;
  std::string endo_mode = "all";
  auto* endo = app.add_subcommand("endo", "Endomorphism search on a graph file");
  endo->add_option("graph", endo_file, "graph in text format")->required();
  endo->add_option("--mode", endo_mode, "all or proper")->check(CLI::IsMember({"all", "proper"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      const BuiltFamily f = build_family(build_args.normalized());
      std::filesystem::create_directories(out_dir);
      const auto graph_path = std::filesystem::path(out_dir) / "graph.txt";
      const auto m_path = std::filesystem::path(out_dir) / "M.csv";
      std::ofstream g(graph_path);
      write_graph_text(g, f.graph);
      std::ofstream m(m_path);
      write_matrix_csv(m, f.M);
      if (!g || !m) throw Error(ErrorKind::kParse, "cannot write to '" + out_dir + "'");
      out << "wrote " << graph_path.string() << " (" << f.graph.order() << " vertices, " << f.graph.edge_count()
          << " edges)\n";
      out << "wrote " << m_path.string() << " (" << f.M.rows() << " x " << f.M.cols() << ")\n";
      return kOk;
    }

    if (*spectrum) {
      const Graph g = load_graph(spectrum_file);
      const SpectrumReport s = integer_spectrum(g);
      for (auto [l, m] : s.pairs) out << l << "^" << m << "\n";
      out << "least " << s.least << "\n";
      const auto k = static_cast<std::int64_t>(*g.valency());
      if (s.least < 0 && k > 0) out << "ratio bound " << ratio_bound(g.order(), k, s.least).bound.to_string() << "\n";
      return kOk;
    }

    if (*certify || *enumerate) {
      CertifyOptions opts;
      if (!seeds_text.empty()) opts.seeds = SeedStrategy::parse(seeds_text);
      opts.jobs = jobs;
      opts.rank_cap = rank_cap;
      opts.node_budget = search_budget(opts.node_budget);
      opts.timings = timings;
      opts.enumerate_only = static_cast<bool>(*enumerate);
      const FamilyRequest request = (*certify ? certify_args : enumerate_args).normalized();
      const Certificate c = certify_family(request, opts);
      if (*enumerate) {
        if (!c.error.empty()) err << c.error << ": " << c.error_message << "\n";
        out << c.max_independent_sets.size() << " maximum independent sets";
        if (!c.max_independent_sets.empty()) out << " of size " << c.max_independent_sets.front().size();
        out << " (" << c.method << ")\n";
        for (const auto& s : c.max_independent_sets) {
          for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
          out << "\n";
        }
        return exit_code_for(c);
      }
      const std::string json = certificate_to_json(c);
      if (json_path == "-") {
        out << json;
      } else {
        if (!json_path.empty()) {
          std::ofstream f(json_path);
          f << json;
          if (!f) throw Error(ErrorKind::kParse, "cannot write '" + json_path + "'");
        }
        print_summary(out, c);
      }
      return exit_code_for(c);
    }

    if (*core) {
      const P33 p = build_p33();
      try {
        const CoreEvidenceReport r = p33_core_evidence(p);
        out << "pairwise intersections: 70 (equal), 10 (overlapping), 20 (disjoint): PASS\n";
        out << "S_12 & S_13 & S_45 & S_46 = {" << r.quadruple_member << "}: PASS\n";
        out << "|S_12 & S_1i| for i = 3..9:";
        for (auto s : r.slice_sizes) out << " " << s;
        out << ", disjoint, covering S_12: PASS\n";
        out << "sets sharing 10 partitions form " << r.induced_map_description << ": PASS\n";
        return kOk;
      } catch (const Error& e) {
        out << "core evidence: FAIL (" << e.what() << ")\n";
        return kChecksFailed;
      }
    }

    if (*endo) {
      const Graph g = load_graph(endo_file);
      const auto mode = endo_mode == "all" ? EndomorphismMode::kEnumerateAll : EndomorphismMode::kFindProper;
      const EndomorphismReport r = endomorphism_search(g, mode, search_budget(100'000'000));
      out << "automorphisms " << r.automorphisms << (mode == EndomorphismMode::kFindProper ? " (until stop)" : "") << "\n";
      out << "proper endomorphisms " << r.proper_endomorphisms << "\n";
      if (r.proper_witness) {
        out << "witness";
        for (auto x : *r.proper_witness) out << " " << g.label(x);
        out << "\n";
      }
      out << "core " << (r.is_core() ? "yes" : "no") << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kChecksFailed;
  }
  return kUsage;
}

}  // namespace ratiocert::cli
