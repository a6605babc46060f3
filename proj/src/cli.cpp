#include "lozenge/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "lozenge/engines.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/json_io.hpp"
#include "lozenge/render.hpp"
#include "lozenge/theorems.hpp"

namespace lozenge {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

struct Flags {
  std::string spec;
  std::string spec_a;
  std::string spec_b;
  Engine engine = Engine::axis;
  int thm = 1;
  std::string suite = "all";
  std::uint64_t seed = 7;
  int max_L = 10;
  int count = 0;
  unsigned jobs = 1;
  bool timing = false;
  bool at_one = false;
  double unit = 24.0;
  std::optional<std::size_t> tiling;
  std::size_t brute_limit = 120;
  std::string c;
  std::string c_prime;
  int x = 1;
  int y = 1;
  int n_max = 6;
  std::uint64_t term_budget = 5'000'000;
  bool as_float = false;
  std::size_t sample = 0;
  int corpus_max_L = 8;
};

ShuffleInstance pair_instance(const RegionSpec& a, const RegionSpec& b) {
  if (a.x != b.x || a.y != b.y || a.B != b.B) {
    throw Error(ErrorKind::GeometryMismatch, "both specs must share x, y and B");
  }
  return ShuffleInstance{a.x, a.y, a.U, a.D, b.U, b.D, a.B};
}

int cmd_count(const Flags& f, std::ostream& out) {
  const ValidatedSpec spec = validate_spec(load_region_spec(f.spec));
  out << count(spec, f.engine, f.jobs).get_str() << '\n';
  return kOk;
}

int cmd_qcount(const Flags& f, std::ostream& out) {
  const ValidatedSpec spec = validate_spec(load_region_spec(f.spec));
  const QPoly p = qcount(spec, f.engine, f.jobs);
  out << (f.at_one ? qp_eval_one(p).get_str() : p.to_string()) << '\n';
  return kOk;
}

/// Prints the closed-form right-hand side and compares it with the engines.
int cmd_ratio(const Flags& f, std::ostream& out, std::ostream& err) {
  const ShuffleInstance inst = pair_instance(load_region_spec(f.spec_a), load_region_spec(f.spec_b));
  const ValidatedSpec a = validate_spec(inst.lhs_spec());
  const ValidatedSpec b = validate_spec(inst.rhs_spec());
  bool agrees = false;
  switch (f.thm) {
    case 1:
    case 2: {
      validate_shuffle(inst, f.thm == 1);
      const Ratio rhs = f.thm == 1 ? shuffle_rhs(inst) : gen_shuffle_rhs(inst);
      out << to_string(rhs) << '\n';
      agrees = count(a, f.engine, f.jobs) * rhs.get_den() == count(b, f.engine, f.jobs) * rhs.get_num();
      break;
    }
    case 3: {
      const QRatio rhs = q_shuffle_rhs(inst);
      out << rhs.to_string() << '\n';
      agrees = qratio_eq(QRatio(qcount(a, f.engine, f.jobs), qcount(b, f.engine, f.jobs)), rhs);
      break;
    }
    default:
      throw Error(ErrorKind::InvalidInput, "--thm must be 1, 2 or 3");
  }
  if (!agrees) {
    err << "closed form disagrees with the " << (f.engine == Engine::axis ? "axis" : "brute") << " engine\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const std::optional<Suite> suite = parse_suite(f.suite);
  if (!suite) throw Error(ErrorKind::InvalidInput, "unknown suite '" + f.suite + "'");
  SuiteOptions options;
  options.seed = f.seed;
  options.max_L = f.max_L;
  options.jobs = f.jobs;
  options.count = f.count;
  const SuiteResult result = run_suite(*suite, options);
  for (const CheckReport& r : result.reports) out << to_json_line(r, f.timing) << '\n';
  for (const CheckReport& r : result.controls) {
    nlohmann::json j = nlohmann::json::parse(to_json_line(r, f.timing));
    j["control"] = true;
    out << j.dump() << '\n';
  }
  out << suite_summary(result).dump() << '\n';
  return result.failed() == 0 ? kOk : kCheckFailed;
}

int cmd_asym(const Flags& f, std::ostream& out) {
  const AsymTable t =
      asym_table(load_cluster_spec(f.c), load_cluster_spec(f.c_prime), f.x, f.y, f.n_max, f.term_budget, f.jobs);
  out << "N,ratio,ratio_over_limit,deviation" << (f.as_float ? ",deviation_float" : "") << '\n';
  const auto row = [&](const std::string& n, const Ratio& ratio, const Ratio& over, const Ratio& dev) {
    out << n << ',' << to_string(ratio) << ',' << to_string(over) << ',' << to_string(dev);
    if (f.as_float) out << ',' << std::setprecision(12) << dev.get_d();
    out << '\n';
  };
  for (const AsymRow& r : t.rows) row(std::to_string(r.N), r.ratio, r.ratio_over_limit, r.deviation);
  row("inf", t.limit, Ratio(1), Ratio(0));
  return kOk;
}

int cmd_render(const Flags& f, std::ostream& out) {
  const ValidatedSpec spec = validate_spec(load_region_spec(f.spec));
  RenderOptions options;
  options.unit = f.unit;
  if (f.tiling) {
    out << render_tiling_svg(spec, *f.tiling, options, BruteOptions{f.brute_limit});
  } else {
    out << render_region_svg(spec, options);
  }
  return kOk;
}

int cmd_corpus(const Flags& f, std::ostream& out) {
  CorpusOptions options;
  options.max_L = f.corpus_max_L;
  for (const RegionSpec& s : sample_corpus(small_corpus(options), f.seed, f.sample)) {
    out << to_json(s).dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lozenge tiling counts of dented hexagons"};
  app.require_subcommand(1, 1);
  Flags f;
  const std::map<std::string, Engine> engines{{"axis", Engine::axis}, {"brute", Engine::brute}};
  const auto engine_opt = [&](CLI::App* c) {
    c->add_option("--engine", f.engine, "axis | brute")->transform(CLI::CheckedTransformer(engines));
    c->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* count_cmd = app.add_subcommand("count", "number of tilings");
  count_cmd->add_option("--spec", f.spec, "JSON region spec")->required();
  engine_opt(count_cmd);

  CLI::App* qcount_cmd = app.add_subcommand("qcount", "q-weighted tiling generating function");
  qcount_cmd->add_option("--spec", f.spec, "JSON region spec")->required();
  qcount_cmd->add_flag("--at-one", f.at_one, "evaluate at q = 1");
  engine_opt(qcount_cmd);

  CLI::App* ratio_cmd = app.add_subcommand("ratio", "closed-form tiling ratio of two shuffled regions");
  ratio_cmd->add_option("--thm", f.thm, "1 | 2 | 3")->check(CLI::Range(1, 3));
  ratio_cmd->add_option("--spec-a", f.spec_a, "numerator region")->required();
  ratio_cmd->add_option("--spec-b", f.spec_b, "denominator region")->required();
  engine_opt(ratio_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", f.suite, "thm1|thm2|thm3|kuo|schur|barrier|asym|all");
  verify_cmd->add_option("--seed", f.seed);
  verify_cmd->add_option("--max-L", f.max_L)->check(CLI::Range(2, 64));
  verify_cmd->add_option("--count", f.count, "instances per random suite (0: defaults)");
  verify_cmd->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--timing", f.timing, "add elapsed_ms to each report");

  CLI::App* asym_cmd = app.add_subcommand("asym", "finite-N ratios against the cluster limit (CSV)");
  asym_cmd->add_option("--clusters", f.c, "JSON cluster spec C")->required();
  asym_cmd->add_option("--clusters-prime", f.c_prime, "JSON cluster spec C'")->required();
  asym_cmd->add_option("--x", f.x);
  asym_cmd->add_option("--y", f.y);
  asym_cmd->add_option("--nmax", f.n_max)->check(CLI::Range(1, 1000));
  asym_cmd->add_option("--term-budget", f.term_budget);
  asym_cmd->add_option("--jobs", f.jobs)->check(CLI::PositiveNumber);
  asym_cmd->add_flag("--float", f.as_float, "append a floating-point deviation column");

  CLI::App* render_cmd = app.add_subcommand("render", "SVG of a region or one of its tilings");
  render_cmd->add_option("--spec", f.spec, "JSON region spec")->required();
  render_cmd->add_option("--tiling", f.tiling, "tiling index in enumeration order");
  render_cmd->add_option("--unit", f.unit, "pixels per lattice unit")->check(CLI::PositiveNumber);
  render_cmd->add_option("--max-triangles", f.brute_limit, "brute-force limit for --tiling");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "small-instance corpus as JSON lines");
  corpus_cmd->add_option("--seed", f.seed);
  corpus_cmd->add_option("--sample", f.sample, "random subset size (0: all)");
  corpus_cmd->add_option("--max-L", f.corpus_max_L)->check(CLI::Range(1, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kInputError;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(f, out);
    if (qcount_cmd->parsed()) return cmd_qcount(f, out);
    if (ratio_cmd->parsed()) return cmd_ratio(f, out, err);
    if (verify_cmd->parsed()) return cmd_verify(f, out);
    if (asym_cmd->parsed()) return cmd_asym(f, out);
    if (render_cmd->parsed()) return cmd_render(f, out);
    if (corpus_cmd->parsed()) return cmd_corpus(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace lozenge
