#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lieq/cache.hpp"
#include "lieq/pairspec.hpp"
#include "lieq/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t seed = 2024;
  int trials = 8;
  std::string cache_dir;
  bool verify_full = false;
  std::string format = "text";
  std::string fixtures = "fixtures";
};

lieq::ReportFormat fmt_of(const RunConfig& cfg) {
  return cfg.format == "records" ? lieq::ReportFormat::Records : lieq::ReportFormat::Text;
}

std::string config_line(const RunConfig& cfg) {
  std::ostringstream out;
  out << "config: seed " << cfg.seed << ", trials " << cfg.trials << ", verify "
      << (cfg.verify_full ? "full" : "fast") << "\n";
  return out.str();
}

int cmd_build(const RunConfig& cfg, const std::string& series, int rank) {
  auto type = lieq::parse_cartan_type(series + std::to_string(rank));
  if (!type) {
    std::cerr << "error: invalid Cartan type " << series << rank << "\n";
    return kExitUsage;
  }
  auto r = lieq::cached_compact_form(*type, cfg.cache_dir);
  if (r.cache_corrupt)
    std::cerr << "warning: cache entry for " << type->label()
              << " failed re-verification; rebuilt\n";
  lieq::JacobiReport jac = cfg.verify_full ? lieq::verify_jacobi(r.g, true) : r.jacobi;
  std::cout << "type " << type->label() << "\n";
  std::cout << "dim " << r.g.dim << "\n";
  std::cout << "jacobi: " << (jac.exhaustive ? "exhaustive" : "sampled")
            << (jac.pass ? " pass" : " FAIL") << " (" << jac.checked << " triples)\n";
  std::cout << "source: " << (r.from_cache ? "cache" : "built") << "\n";
  return jac.pass ? kExitOk : kExitMismatch;
}

lieq::PairSpecFile load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open pair file: " + path);
  return lieq::parse_pair_spec(in);
}

int cmd_check(const RunConfig& cfg, const std::string& pairfile, const std::string& which) {
  auto f = load_spec(pairfile);
  lieq::CompactLieAlgebra g = f.ambient_type
                                  ? lieq::cached_compact_form(*f.ambient_type, cfg.cache_dir).g
                                  : lieq::build_ambient(f);
  auto p = lieq::build_pair(f, g);
  auto fmt = fmt_of(cfg);

  bool needs_full = which != "lemma5";
  if (needs_full && p.torus_only) {
    std::cerr << "refusal: pair '" << f.name
              << "' is torus-restricted (torus-only guard); the check '" << which
              << "' needs the full subalgebra.";
    if (!f.case_id.empty()) std::cerr << " Use `lieq case " << f.case_id << "` instead.";
    std::cerr << "\n";
    return kExitUsage;
  }

  std::cout << config_line(cfg);
  std::string witness_note;

  if (which == "symmetric") {
    bool sym = lieq::symmetric_pair_test(p);
    std::cout << "symmetric: " << (sym ? "yes" : "no") << "\n";
    return kExitOk;
  }
  if (which == "lemma5") {
    int dim_h = p.torus_only ? (f.dim_h_meta >= 0 ? f.dim_h_meta : -1) : p.dim_h;
    if (dim_h < 0) {
      std::cerr << "error: torus-restricted pair without dim-h metadata\n";
      return kExitUsage;
    }
    int rank_g = g.root_backed() ? g.roots->rank() : g.so_n / 2;
    auto r = lieq::lemma5_numeric(g.dim, dim_h, rank_g);
    std::cout << "dims: g " << r.dim_g << ", h " << r.dim_h << ", m " << r.dim_m << ", rank "
              << r.rank_g << "\n";
    std::cout << "inequality (3) 2 dim h + rk g > dim m: " << (r.ineq3 ? "yes" : "no") << "\n";
    for (const auto& wraw : f.witnesses) {
      // torus witnesses are root-space coordinates; lift them into the algebra
      lieq::AlgebraElement w =
          static_cast<int>(wraw.size()) == g.dim ? wraw : g.cartan_element(wraw);
      int c = static_cast<int>(lieq::centralizer(g, w).size());
      std::cout << "witness centralizer dim " << c << " vs bound " << (g.dim - 2 * dim_h) << ": "
                << (c >= g.dim - 2 * dim_h ? "satisfies (1)" : "violates (1)") << "\n";
    }
    return kExitOk;
  }
  if (which == "riemannian") {
    auto split = lieq::isotypic_split(p);
    std::cout << "isotypic summands:";
    for (const auto& s : split.summands) std::cout << ' ' << s.size();
    std::cout << "\ncommutant dim: " << split.commutant_dim << "\n";
    std::cout << "split verdict: "
              << (split.verdict == lieq::SplitVerdict::Irreducible        ? "irreducible"
                  : split.verdict == lieq::SplitVerdict::ReducibleWithWitness ? "reducible"
                                                                              : "indeterminate")
              << "\n";
    for (const auto& w : f.witnesses) {
      auto v = lieq::riemannian_equigeodesic_vector(p, split, p.pr_m(w));
      std::cout << lieq::render_verdict("riemannian-equigeodesic", v, fmt);
    }
    return kExitOk;
  }
  if (which == "finsler-vector") {
    if (f.witnesses.empty()) {
      std::cerr << "error: finsler-vector needs at least one witness in the pair file\n";
      return kExitUsage;
    }
    for (const auto& w : f.witnesses) {
      auto v = lieq::finsler_equigeodesic_vector(p, p.pr_m(w));
      std::cout << lieq::render_verdict("finsler-vector", v, fmt);
    }
    return kExitOk;
  }
  if (which == "finsler-space") {
    auto v = lieq::finsler_space_check(p, cfg.trials, cfg.seed);
    std::cout << lieq::render_verdict("finsler-space", v, fmt);
    return kExitOk;
  }
  if (which == "classify") {
    auto c = lieq::classify_finsler(p, cfg.trials, cfg.seed);
    std::cout << "decomposed: " << (c.decomposed ? "yes" : "no") << "\n";
    std::cout << "factor labels:";
    for (auto l : c.labels) std::cout << ' ' << lieq::factor_label_str(l);
    std::cout << "\nfinsler equigeodesic: " << (c.finsler_equigeodesic ? "yes" : "no") << "\n";
    std::cout << lieq::render_verdict("space-check", c.space_check, fmt);
    return kExitOk;
  }
  std::cerr << "error: unknown check '" << which << "'\n";
  return kExitUsage;
}

int diff_golden(const RunConfig& cfg, const std::string& name, const std::string& rendered) {
  std::string path = cfg.fixtures + "/golden/" + name + ".txt";
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "warning: golden file " << path << " missing; diff skipped\n";
    return kExitOk;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str() == rendered) {
    std::cout << "golden diff: clean\n";
    return kExitOk;
  }
  std::cerr << "golden diff: MISMATCH against " << path << "\n";
  return kExitMismatch;
}

int cmd_case(const RunConfig& cfg, const std::string& id) {
  std::string fixture = cfg.fixtures + "/case" + id + ".pair";
  if (id == "appendix") fixture = cfg.fixtures + "/appendix-e7.pair";
  if (!std::filesystem::exists(fixture)) {
    std::cerr << "error: missing fixture " << fixture << "\n";
    return kExitUsage;
  }
  auto r = lieq::run_case(id);
  std::string text = lieq::render_case(r, lieq::ReportFormat::Text);
  std::cout << (fmt_of(cfg) == lieq::ReportFormat::Text
                    ? text
                    : lieq::render_case(r, lieq::ReportFormat::Records));
  int gd = diff_golden(cfg, "case" + id, text);
  if (!r.pass()) return kExitMismatch;
  return gd;
}

int cmd_table2(const RunConfig& cfg) {
  auto t2 = lieq::filter_table2(lieq::table1_entries(2000));
  std::string text = lieq::render_table2(t2, lieq::ReportFormat::Text);
  std::cout << (fmt_of(cfg) == lieq::ReportFormat::Text
                    ? text
                    : lieq::render_table2(t2, lieq::ReportFormat::Records));
  int gd = diff_golden(cfg, "table2", text);
  if (t2.rows.size() != 9 || !t2.tail_certified) return kExitMismatch;
  return gd;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* env = std::getenv("LIEQ_CACHE_DIR")) cfg.cache_dir = env;

  CLI::App app{"exact-arithmetic engine for equigeodesic criteria on homogeneous spaces"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "random seed for sampled checks");
  app.add_option("--trials", cfg.trials, "trial count for sampled checks");
  app.add_option("--cache-dir", cfg.cache_dir, "structure-constant cache directory");
  app.add_flag("--verify-full", cfg.verify_full, "exhaustive Jacobi verification");
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"text", "records"}));
  app.add_option("--fixtures", cfg.fixtures, "fixture directory");

  std::string series, pairfile, which, case_id;
  int rank = 0;
  auto* build = app.add_subcommand("build", "build a compact simple Lie algebra");
  build->add_option("series", series, "Cartan series letter")->required();
  build->add_option("rank", rank, "rank")->required();
  auto* check = app.add_subcommand("check", "run a criterion on a pair file");
  check->add_option("pairfile", pairfile, "pair-spec file")->required();
  check
      ->add_option("which", which,
                   "one of riemannian, finsler-vector, finsler-space, symmetric, lemma5, classify")
      ->required();
  auto* kase = app.add_subcommand("case", "replay a classification case against golden output");
  kase->add_option("id", case_id, "case id (1-9 or appendix)")->required();
  app.add_subcommand("table2", "regenerate the candidate table and diff against golden output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(cfg, series, rank);
    if (check->parsed()) return cmd_check(cfg, pairfile, which);
    if (kase->parsed()) return cmd_case(cfg, case_id);
    return cmd_table2(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
