#include "dynsamp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "dynsamp/io.hpp"
#include "dynsamp/spark.hpp"

namespace dynsamp {

namespace {

struct CommonOpts {
  double rank_tol = kDefaultRankTol;
  double group_tol = kDefaultGroupTol;
  std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--rank-tol", opts.rank_tol, "Relative singular-value threshold for rank tests");
  cmd->add_option("--group-tol", opts.group_tol, "Absolute tolerance for eigenvalue grouping");
  cmd->add_option("-o,--output", opts.output, "Write the JSON result to this file");
}

void emit(const Json& j, const CommonOpts& opts, std::ostream& out) {
  if (opts.output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(opts.output);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.output);
    f << j.dump(2) << "\n";
  }
}

/// Dual source: a file path or an inline JSON literal.
struct JsonSource {
  std::string file;
  std::string inline_text;

  bool present() const { return !file.empty() || !inline_text.empty(); }
  Json load() const {
    if (!file.empty() && !inline_text.empty())
      throw std::invalid_argument("give either a file or an inline JSON source, not both");
    if (!file.empty()) return load_json_file(file);
    return Json::parse(inline_text);
  }
};

void add_kernel_source(CLI::App* cmd, JsonSource& src) {
  auto* f = cmd->add_option("--kernel", src.file, "Kernel JSON file");
  cmd->add_option("--kernel-json", src.inline_text, "Inline kernel JSON")->excludes(f);
}

void add_plan_source(CLI::App* cmd, JsonSource& src) {
  auto* f = cmd->add_option("--plan", src.file, "Plan JSON file");
  cmd->add_option("--plan-json", src.inline_text, "Inline plan JSON")->excludes(f);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw std::invalid_argument(std::string(what) + " must be a JSON array");
  return j.get<std::vector<int>>();
}

int cmd_check(const JsonSource& kernel_src, const JsonSource& plan_src, const CommonOpts& opts,
              std::ostream& out) {
  const Kernel kernel = kernel_from_json(kernel_src.load());
  const ParsedPlan parsed = any_plan_from_json(plan_src.load());

  const FrameReport direct = frame_test_direct(kernel, parsed.plan, opts.rank_tol, opts.group_tol);
  const FrameReport projection =
      frame_test_projection(kernel, parsed.plan, opts.rank_tol, opts.group_tol);
  const bool never = never_frame_test(kernel, parsed.plan.omega, opts.rank_tol, opts.group_tol);

  Json j;
  j["schema"] = kSchema;
  j["type"] = "check_report";
  j["direct"] = frame_report_to_json(direct);
  j["projection"] = frame_report_to_json(projection);
  j["never_frame"] = never;

  bool disagree = direct.is_frame() != projection.is_frame();
  if (parsed.periodic) {
    const FrameReport periodic =
        periodic_frame_test(kernel, *parsed.periodic, opts.rank_tol, opts.group_tol);
    j["periodic"] = frame_report_to_json(periodic);
    disagree = disagree || periodic.is_frame() != direct.is_frame();
  }

  int exit_code;
  if (disagree) {
    j["verdict"] = "ambiguous";
    exit_code = kExitAmbiguous;
  } else if (direct.is_frame()) {
    j["verdict"] = "frame";
    exit_code = kExitFrame;
  } else if (never) {
    j["verdict"] = "never-frame";
    exit_code = kExitNeverFrame;
  } else {
    j["verdict"] = "not-frame";
    exit_code = kExitNotFrame;
  }
  j["exit_code"] = exit_code;
  emit(j, opts, out);
  return exit_code;
}

int cmd_spark(const std::vector<int>& factors, const std::string& rows_text, long long cap,
              const CommonOpts& opts, std::ostream& out) {
  const FiniteGroup g = make_group(factors);
  const Json rows_json = Json::parse(rows_text);
  if (!rows_json.is_array() || rows_json.empty())
    throw std::invalid_argument("--rows must be a nonempty JSON array");
  std::vector<int> rows;
  for (const auto& e : rows_json) {
    if (e.is_number_integer())
      rows.push_back(e.get<int>());
    else
      rows.push_back(g.flat(GroupIndex(e.get<std::vector<int>>())));
  }
  const RowSelection sel = make_row_selection(g, rows);
  std::vector<int> all_cols(g.order());
  for (int i = 0; i < g.order(); ++i) all_cols[i] = i;
  const CMatrix sub = submatrix(fourier_matrix(g), sel.rows, all_cols);
  const SparkResult result = spark_with_witness(sub, opts.rank_tol, cap);

  Json j;
  j["schema"] = kSchema;
  j["type"] = "spark_report";
  j["factors"] = factors;
  Json rows_out = Json::array();
  for (int r : sel.rows) rows_out.push_back(g.unflat(r).residues);
  j["rows"] = std::move(rows_out);
  j["spark"] = result.spark;
  j["full_spark"] = result.full_spark;
  j["witness"] = result.full_spark ? Json(nullptr) : Json(result.witness);
  emit(j, opts, out);
  return 0;
}

struct ConstructOpts {
  std::string recipe;
  int d = 0, L = 0, m = 0;
  int i1 = 0, i2 = 0, j1 = 0, j2 = 0;
  bool column_variant = false;
  std::string w_text;
  std::optional<int> depth;
  JsonSource kernel_src;
};

int cmd_construct(const ConstructOpts& c, const CommonOpts& opts, std::ostream& out) {
  Json j;
  if (c.recipe == "periodic-W") {
    const PeriodicPlan plan =
        periodic_W_set(c.d, c.m, parse_int_list(c.w_text, "--W"), opts.rank_tol);
    j = periodic_plan_to_json(plan);
  } else if (c.recipe.starts_with("sym-") && c.recipe.ends_with("-periodic")) {
    const std::string name = c.recipe.substr(4, c.recipe.size() - 4 - 9);
    const Sym2DParams params{c.i1, c.i2, c.j1, c.j2, c.column_variant};
    j = periodic_plan2d_to_json(sym2d_periodic_set(c.d, c.m, symmetry_from_string(name), params));
  } else {
    PlanBlueprint bp;
    if (c.recipe == "consecutive") {
      bp = consecutive_set(c.d, c.L);
    } else if (c.recipe == "gcd-pair") {
      bp = gcd_pair_set(c.d, c.i1, c.i2);
    } else if (c.recipe.starts_with("sym-")) {
      const Sym2DParams params{c.i1, c.i2, c.j1, c.j2, c.column_variant};
      bp = sym2d_set(c.d, symmetry_from_string(c.recipe.substr(4)), params);
    } else {
      throw std::invalid_argument("unknown recipe: " + c.recipe);
    }
    SamplingPlan plan;
    std::string depth_policy;
    if (c.depth) {
      plan = bp.with_uniform_depth(*c.depth);
      depth_policy = "explicit";
    } else if (c.kernel_src.present()) {
      plan = bp.bind(kernel_from_json(c.kernel_src.load()), opts.group_tol);
      depth_policy = "bound-to-kernel";
    } else if (bp.claimed_depth) {
      plan = bp.with_uniform_depth(*bp.claimed_depth);
      depth_policy = "claimed";
    } else {
      // Without a kernel the distinct-eigenvalue count is unknown; d-1 is a
      // universal upper bound and extra depth never changes the verdict.
      plan = bp.with_uniform_depth(bp.group.order() - 1);
      depth_policy = "worst-case";
    }
    j = plan_to_json(plan);
    j["recipe"] = {{"kind", bp.kind},
                   {"claimed_depth", bp.claimed_depth ? Json(*bp.claimed_depth) : Json(nullptr)},
                   {"depth_policy", depth_policy}};
  }
  emit(j, opts, out);
  return 0;
}

int cmd_simulate(const JsonSource& kernel_src, const JsonSource& plan_src,
                 const JsonSource& f_src, std::uint64_t seed, double noise, double exact_tol,
                 const CommonOpts& opts, std::ostream& out) {
  const Kernel kernel = kernel_from_json(kernel_src.load());
  const ParsedPlan parsed = any_plan_from_json(plan_src.load());

  CVector f(kernel.group.order());
  if (f_src.present()) {
    const Json fj = f_src.load();
    const auto re = fj.at("re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (fj.contains("im")) im = fj["im"].get<std::vector<double>>();
    if (static_cast<int>(re.size()) != kernel.group.order() || im.size() != re.size())
      throw std::invalid_argument("initial state length must equal the group order");
    for (int i = 0; i < kernel.group.order(); ++i) f(i) = Complex(re[i], im[i]);
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int i = 0; i < kernel.group.order(); ++i) f(i) = Complex(dist(rng), dist(rng));
  }

  const auto samples = simulate_samples(kernel, f, parsed.plan, noise, seed + 1);
  const ReconstructionResult result =
      reconstruct(kernel, parsed.plan, samples, exact_tol, opts.rank_tol);

  Json j = reconstruction_to_json(result);
  j["relative_error"] = (result.estimate - f).norm() / std::max(f.norm(), 1e-300);
  j["noise_std"] = noise;
  j["sample_count"] = samples.size();
  emit(j, opts, out);
  return 0;
}

int cmd_search(const JsonSource& kernel_src, int max_size, const CommonOpts& opts,
               std::ostream& out) {
  const Kernel kernel = kernel_from_json(kernel_src.load());
  const auto sets = search_minimal(kernel, max_size, opts.rank_tol, opts.group_tol);
  Json j;
  j["schema"] = kSchema;
  j["type"] = "search_report";
  j["min_sensor_bound"] = min_sensor_bound(kernel, opts.group_tol);
  j["max_size"] = max_size;
  j["count"] = sets.size();
  Json arr = Json::array();
  for (const auto& omega : sets) {
    Json one = Json::array();
    for (int i : omega) one.push_back(kernel.group.unflat(i).residues);
    arr.push_back(std::move(one));
  }
  j["sets"] = std::move(arr);
  emit(j, opts, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dynsamp: spatiotemporal sampling plans for circular convolution systems"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto* check = app.add_subcommand("check", "Decide whether a plan yields a frame");
  JsonSource check_kernel, check_plan;
  add_kernel_source(check, check_kernel);
  add_plan_source(check, check_plan);
  add_common(check, opts);

  auto* spark_cmd = app.add_subcommand("spark", "Spark of a character-matrix row selection");
  std::vector<int> spark_factors;
  std::string spark_rows;
  int spark_d = 0;
  long long spark_cap = kDefaultSparkCap;
  spark_cmd->add_option("--d", spark_d, "Cyclic group order (1D shorthand)");
  spark_cmd->add_option("--factors", spark_factors, "Group factors (e.g. --factors 4,4)")
      ->delimiter(',');
  spark_cmd->add_option("--rows", spark_rows, "Row indices as JSON (flat ints or index pairs)")
      ->required();
  spark_cmd->add_option("--cap", spark_cap, "Subset enumeration cap");
  add_common(spark_cmd, opts);

  auto* construct = app.add_subcommand("construct", "Build a universal sampling plan");
  ConstructOpts cons;
  construct->add_option("--recipe", cons.recipe, "Recipe name")->required();
  construct->add_option("--d", cons.d, "Group order per axis")->required();
  construct->add_option("--L", cons.L, "Row count for the consecutive recipe");
  construct->add_option("--m", cons.m, "Period (divisor of d)");
  construct->add_option("--i1", cons.i1, "");
  construct->add_option("--i2", cons.i2, "");
  construct->add_option("--j1", cons.j1, "");
  construct->add_option("--j2", cons.j2, "");
  construct->add_flag("--column-variant", cons.column_variant,
                      "Use the column variant of the diagonal/octagonal recipe");
  construct->add_option("--W", cons.w_text, "W as a JSON array (periodic-W recipe)");
  int cons_depth = -1;
  construct->add_option("--depth", cons_depth, "Override the uniform depth");
  add_kernel_source(construct, cons.kernel_src);
  add_common(construct, opts);

  auto* simulate = app.add_subcommand("simulate", "Evolve, sample and reconstruct");
  JsonSource sim_kernel, sim_plan, sim_f;
  std::uint64_t sim_seed = 0;
  double sim_noise = 0.0, sim_exact_tol = 1e-8;
  add_kernel_source(simulate, sim_kernel);
  add_plan_source(simulate, sim_plan);
  simulate->add_option("--f", sim_f.file, "Initial state JSON file ({re:[],im:[]})");
  simulate->add_option("--f-json", sim_f.inline_text, "Inline initial state JSON");
  simulate->add_option("--seed", sim_seed, "Seed for the random state and noise");
  simulate->add_option("--noise", sim_noise, "Complex Gaussian noise standard deviation");
  simulate->add_option("--exact-tol", sim_exact_tol, "Residual threshold for the exact flag");
  add_common(simulate, opts);

  auto* search = app.add_subcommand("search", "Enumerate minimal admissible sensor sets");
  JsonSource search_kernel;
  int search_max = 0;
  add_kernel_source(search, search_kernel);
  search->add_option("--max-size", search_max, "Largest sensor-set size to enumerate")
      ->required();
  add_common(search, opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help() << "\n";
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (check->parsed()) {
      if (!check_kernel.present() || !check_plan.present())
        throw std::invalid_argument("check requires a kernel and a plan source");
      return cmd_check(check_kernel, check_plan, opts, out);
    }
    if (spark_cmd->parsed()) {
      if (spark_d > 0) spark_factors = {spark_d};
      if (spark_factors.empty())
        throw std::invalid_argument("spark requires --d or --factors");
      return cmd_spark(spark_factors, spark_rows, spark_cap, opts, out);
    }
    if (construct->parsed()) {
      if (cons_depth >= 0) cons.depth = cons_depth;
      return cmd_construct(cons, opts, out);
    }
    if (simulate->parsed()) {
      if (!sim_kernel.present() || !sim_plan.present())
        throw std::invalid_argument("simulate requires a kernel and a plan source");
      return cmd_simulate(sim_kernel, sim_plan, sim_f, sim_seed, sim_noise, sim_exact_tol, opts,
                          out);
    }
    if (search->parsed()) {
      if (!search_kernel.present())
        throw std::invalid_argument("search requires a kernel source");
      return cmd_search(search_kernel, search_max, opts, out);
    }
    err << "error: no subcommand given\n";
    return kExitInputError;
  } catch (const RecipeError& e) {
    Json j{{"schema", kSchema}, {"type", "error"},      {"error", e.what()},
           {"param", e.param()}, {"divisor", e.divisor()}};
    out << j.dump(2) << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    Json j{{"schema", kSchema}, {"type", "error"}, {"error", e.what()}};
    out << j.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace dynsamp
