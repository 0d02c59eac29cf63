#include "lgd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include "lgd/analysis.hpp"
#include "lgd/coupling.hpp"
#include "lgd/dynamics.hpp"
#include "lgd/errors.hpp"
#include "lgd/exact.hpp"
#include "lgd/graph.hpp"
#include "output.hpp"

namespace lgd::cli {

namespace {

constexpr const char* kSubcommands[] = {"sample", "exact", "couple", "analyze"};

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParameterError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::vector<double> parse_number_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParameterError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw ParameterError(std::string(flag) + " needs at least one value");
  return out;
}

// ---------------------------------------------------------------------------
// Options shared by the subcommands that run the chain

struct InstanceOptions {
  std::string graph_file;
  std::string family;
  std::string gen_args;
  std::optional<std::uint32_t> q;
  std::string alpha;
  std::string gamma = "auto";
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
};

void add_instance_options(CLI::App& cmd, InstanceOptions& o, bool needs_colors) {
  auto* graph = cmd.add_option("--graph", o.graph_file, "Edge-list file (\"u v\" per line)");
  auto* gen = cmd.add_option("--gen", o.family,
                             "Generator: cycle, path, complete, star, grid2d, erdos_renyi");
  graph->excludes(gen);
  cmd.add_option("--gen-args", o.gen_args, "Generator parameters K=V,... (n, rows, cols, p, seed)");
  if (needs_colors) {
    auto* q = cmd.add_option("--q", o.q, "Number of colors");
    auto* alpha = cmd.add_option("--alpha", o.alpha, "Colors per unit of max degree (q = ceil(alpha*D))");
    q->excludes(alpha);
    cmd.add_option("--gamma", o.gamma, "Marking probability, or 'auto' for the bound maximizer")
        ->capture_default_str();
  }
  cmd.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  cmd.add_option("--out", o.out, "Output path (stdout when omitted)");
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

Graph load_graph(const InstanceOptions& o) {
  if (!o.graph_file.empty()) return parse_edge_list(read_file(o.graph_file)).graph;
  if (o.family.empty()) throw ParameterError("one of --graph or --gen is required");
  auto params = parse_gen_args(o.gen_args);
  std::uint64_t seed = o.seed;
  if (auto it = params.find("seed"); it != params.end()) {
    try {
      seed = std::stoull(it->second);
    } catch (const std::exception&) {
      throw ParameterError("generator seed is not an integer: '" + it->second + "'");
    }
  }
  return generate(parse_family(o.family), params, seed);
}

std::uint32_t resolve_q(const Graph& g, const InstanceOptions& o) {
  if (o.q) {
    if (*o.q < 1) throw ParameterError("--q must be at least 1");
    return *o.q;
  }
  if (o.alpha.empty()) throw ParameterError("one of --q or --alpha is required");
  const double alpha = parse_number_list(o.alpha, "--alpha").at(0);
  if (!(alpha > 0.0)) throw ParameterError("--alpha must be positive");
  if (g.max_degree() == 0) throw ParameterError("--alpha needs a graph with at least one edge");
  return static_cast<std::uint32_t>(std::ceil(alpha * static_cast<double>(g.max_degree()) - 1e-9));
}

struct GammaChoice {
  double gamma = 0.5;
  std::optional<double> delta;  // contraction margin when positive
  bool automatic = false;
};

GammaChoice resolve_gamma(const Graph& g, std::uint32_t q, const std::string& text) {
  GammaChoice out;
  const auto degree = static_cast<double>(g.max_degree());
  if (text == "auto") {
    out.automatic = true;
    if (degree == 0) return out;  // no neighbors: every marked proposal is accepted
    const double alpha = q / degree;
    auto opt = analysis::optimize_gamma(alpha);
    if (!opt.feasible) {
      throw InfeasibleError("no contractive gamma for alpha = " + format_number(alpha) +
                            " (needs alpha > 2)");
    }
    out.gamma = opt.gamma;
    out.delta = opt.delta;
    return out;
  }
  out.gamma = parse_number_list(text, "--gamma").at(0);
  if (!(out.gamma > 0.0 && out.gamma < 1.0)) throw ParameterError("--gamma must lie in (0, 1)");
  if (degree > 0 && 2.0 * out.gamma * degree / q < 1.0) {
    const double d = analysis::delta_wrapup(q / degree, out.gamma);
    if (d > 0.0) out.delta = d;
  }
  return out;
}

Json graph_json(const Graph& g) {
  Json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  j["max_degree"] = g.max_degree();
  return j;
}

Json instance_json(const char* command, const Graph& g, std::uint32_t q, const GammaChoice& gamma,
                   std::uint64_t seed) {
  Json j;
  j["command"] = command;
  j["graph"] = graph_json(g);
  j["q"] = q;
  j["alpha"] = g.max_degree() ? json_number(q / static_cast<double>(g.max_degree())) : Json();
  j["gamma"] = json_number(gamma.gamma);
  j["gamma_auto"] = gamma.automatic;
  j["seed"] = seed;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  InstanceOptions instance;
  std::optional<std::uint64_t> rounds;
  double eps = 0.01;
  std::string init = "zero";
  std::string trace;
};

int cmd_sample(const SampleOptions& o, std::ostream& out) {
  const Graph g = load_graph(o.instance);
  const std::uint32_t q = resolve_q(g, o.instance);
  const GammaChoice gamma = resolve_gamma(g, q, o.instance.gamma);
  ChainConfig cfg{q, gamma.gamma, o.instance.seed};
  cfg.validate();

  const InitialColoring init = parse_initial_coloring(o.init);
  const Coloring x0 = initial_coloring(g, q, init, o.instance.seed);
  std::vector<RoundSummary> trace;
  auto* trace_ptr = o.trace.empty() ? nullptr : &trace;
  Coloring x;
  std::uint64_t rounds = 0;
  std::uint64_t absorption_rounds = 0;
  if (o.rounds) {
    rounds = *o.rounds;
    x = run_chain(g, cfg, x0, rounds, trace_ptr);
  } else if (gamma.delta) {
    // Run until absorbed into the proper colorings, then for the mixing bound.
    const std::uint64_t bound =
        analysis::mixing_bound(*gamma.delta, static_cast<double>(g.node_count()), o.eps);
    const std::uint64_t cap = std::max<std::uint64_t>(100 * bound, 100000);
    x = x0;
    while (!is_proper(g, x) && absorption_rounds < cap) {
      x = run_chain(g, cfg, x, 1, trace_ptr, absorption_rounds);
      ++absorption_rounds;
    }
    x = run_chain(g, cfg, x, bound, trace_ptr, absorption_rounds);
    rounds = absorption_rounds + bound;
  } else {
    throw ParameterError("--rounds is required when no contraction bound is available");
  }

  if (!o.trace.empty()) {
    CsvWriter csv({"round", "marked", "accepted", "conflicts", "proper"});
    for (const auto& r : trace) {
      csv.cell(r.round).cell(std::uint64_t{r.marked}).cell(std::uint64_t{r.accepted});
      csv.cell(std::uint64_t{r.conflicts}).cell(r.proper);
      csv.end_row();
    }
    emit(o.trace, csv.str(), out);
  }

  if (o.instance.format == "csv") {
    CsvWriter csv({"node", "color"});
    for (NodeId v = 0; v < x.size(); ++v) {
      csv.cell(std::uint64_t{v}).cell(std::uint64_t{x[v]});
      csv.end_row();
    }
    emit(o.instance.out, csv.str(), out);
  } else {
    Json j = instance_json("sample", g, q, gamma, o.instance.seed);
    j["rounds"] = rounds;
    j["absorption_rounds"] = o.rounds ? Json() : Json(absorption_rounds);
    j["initial"] = o.init;
    j["delta"] = gamma.delta ? json_number(*gamma.delta) : Json();
    const std::size_t conflicts = count_conflicts(g, x);
    j["proper"] = conflicts == 0;
    j["conflicts"] = conflicts;
    j["colors"] = x;
    emit(o.instance.out, dump(j), out);
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// exact

struct ExactOptions {
  InstanceOptions instance;
  std::uint64_t max_rounds = 100000;
  std::string eps = "0.25";
  std::string tv_out;
  std::string starts = "all";
  bool no_symmetry = false;
};

int cmd_exact(const ExactOptions& o, std::ostream& out) {
  const Graph g = load_graph(o.instance);
  const std::uint32_t q = resolve_q(g, o.instance);
  const GammaChoice gamma = resolve_gamma(g, q, o.instance.gamma);
  ChainConfig cfg{q, gamma.gamma, o.instance.seed};
  cfg.validate();
  auto eps_list = parse_number_list(o.eps, "--eps");
  for (double e : eps_list) {
    if (!(e > 0.0 && e <= 1.0)) throw ParameterError("--eps values must lie in (0, 1]");
  }

  exact::StateSpace space(g, q);
  exact::BuildOptions build;
  build.use_symmetry = !o.no_symmetry;
  const auto p = exact::build_transition_matrix(space, cfg, build);
  const auto rows = exact::check_row_sums(p);
  const auto balance = exact::check_detailed_balance(p, space);
  const auto stationary = exact::check_uniform_stationary(p, space);
  const auto absorption = exact::check_absorption(p, space);
  const auto irreducible = exact::check_irreducibility(p, space);

  exact::TvCurveOptions curve_options;
  curve_options.max_t = o.max_rounds;
  curve_options.stop_below = *std::min_element(eps_list.begin(), eps_list.end());
  curve_options.use_symmetry = build.use_symmetry;
  curve_options.proper_starts_only = o.starts == "proper";
  std::optional<exact::TvCurve> curve;
  if (space.proper_count() > 0) curve = exact::tv_curve(p, space, curve_options);

  Json j = instance_json("exact", g, q, gamma, o.instance.seed);
  j["states"] = space.size();
  j["proper_states"] = space.proper_count();
  j["nonzeros"] = p.nonzeros();
  j["row_sums"] = {{"max_deviation", json_number(rows.max_deviation)}, {"pass", rows.pass}};
  j["detailed_balance"] = {{"max_asymmetry", json_number(balance.max_asymmetry)},
                           {"pass", balance.pass}};
  j["stationarity"] = {{"max_error", json_number(stationary.max_error)},
                       {"pass", stationary.pass}};
  j["absorption"] = {{"violations", absorption.violations},
                     {"max_leak", json_number(absorption.max_leak)},
                     {"pass", absorption.pass}};
  j["irreducibility"] = {{"proper_strongly_connected", irreducible.proper_strongly_connected},
                         {"improper_states", irreducible.improper_states},
                         {"improper_reaching_proper", irreducible.improper_reaching_proper}};
  Json mixing = Json::array();
  if (curve) {
    for (double e : eps_list) {
      auto m = exact::mixing_time_from_curve(*curve, e);
      mixing.push_back({{"eps", json_number(e)}, {"rounds", m.rounds}, {"exceeded", m.exceeded}});
    }
  }
  j["starts"] = o.starts;
  j["mixing"] = mixing;
  const bool all_pass = rows.pass && balance.pass && stationary.pass && absorption.pass;
  j["all_checks_pass"] = all_pass;

  CsvWriter csv({"t", "max_tv", "tv_from_default_start"});
  if (curve) {
    for (std::size_t t = 0; t < curve->max_tv.size(); ++t) {
      csv.cell(std::uint64_t{t}).cell(curve->max_tv[t]).cell(curve->default_tv[t]);
      csv.end_row();
    }
  }
  if (!o.tv_out.empty()) emit(o.tv_out, csv.str(), out);
  emit(o.instance.out, o.instance.format == "csv" ? csv.str() : dump(j), out);
  return all_pass ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// couple

struct CoupleOptions {
  InstanceOptions instance;
  std::uint64_t trials = 10000;
  std::string pairs = "uniform_random";
};

int cmd_couple(const CoupleOptions& o, std::ostream& out) {
  if (o.instance.format != "json") throw ParameterError("couple writes JSON only");
  const Graph g = load_graph(o.instance);
  const std::uint32_t q = resolve_q(g, o.instance);
  const GammaChoice gamma = resolve_gamma(g, q, o.instance.gamma);
  ChainConfig cfg{q, gamma.gamma, o.instance.seed};
  cfg.validate();
  const PairSampler sampler = parse_pair_sampler(o.pairs);

  const auto est = contraction_experiment(g, cfg, o.trials, sampler, true);

  Json j = instance_json("couple", g, q, gamma, o.instance.seed);
  j["pair_sampler"] = pair_sampler_name(sampler);
  j["trials"] = est.trials;
  const bool any = est.trials > 0;
  j["mean_phi"] = any ? json_number(est.mean) : Json();
  j["stderr"] = any ? json_number(est.stderr_mean) : Json();
  j["max_phi"] = any ? Json(est.max_phi) : Json();
  const double degree = static_cast<double>(g.max_degree());
  Json theory;
  theory["delta"] = Json();
  theory["combined_bound"] = Json();
  if (degree > 0 && 2.0 * gamma.gamma * degree / q < 1.0) {
    auto report = analysis::combined_bound(degree, q, gamma.gamma);
    theory["delta"] = json_number(report.delta);
    theory["combined_bound"] = json_number(report.combined);
    theory["relaxation_valid"] = report.relaxation_valid;
  }
  j["theory"] = theory;
  j["lemma_checks"] = {{"checked", est.lemma_checked},
                       {"passed", est.lemma_passed},
                       {"first_violation", est.first_violation ? Json(*est.first_violation)
                                                               : Json()}};
  emit(o.instance.out, dump(j), out);
  return est.lemma_passed == est.lemma_checked ? kSuccess : kCheckFailed;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeOptions {
  InstanceOptions instance;
  std::optional<std::uint64_t> degree;
  std::optional<std::uint64_t> nodes;
  double eps = 0.01;
  std::string table;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  double degree = 8;
  double nodes = 100;
  if (!o.instance.graph_file.empty() || !o.instance.family.empty()) {
    const Graph g = load_graph(o.instance);
    degree = static_cast<double>(g.max_degree());
    nodes = static_cast<double>(g.node_count());
  }
  if (o.degree) degree = static_cast<double>(*o.degree);
  if (o.nodes) nodes = static_cast<double>(*o.nodes);
  if (!(degree >= 1)) throw ParameterError("analysis needs a max degree of at least 1");
  if (!(nodes >= 1)) throw ParameterError("analysis needs at least one node");
  if (!(o.eps > 0.0 && o.eps < 1.0)) throw ParameterError("--eps must lie in (0, 1)");
  if (o.instance.alpha.empty()) throw ParameterError("--alpha is required");
  const auto alphas = parse_number_list(o.instance.alpha, "--alpha");
  for (double a : alphas) {
    if (!(a > 0.0)) throw ParameterError("--alpha values must be positive");
  }
  const bool auto_gamma = o.instance.gamma == "auto";
  const auto gammas = auto_gamma ? std::vector<double>{}
                                 : parse_number_list(o.instance.gamma, "--gamma");
  for (double g : gammas) {
    if (!(g > 0.0 && g < 1.0)) throw ParameterError("--gamma values must lie in (0, 1)");
  }

  CsvWriter csv({"alpha", "gamma", "path_bound", "v0_bound", "combined", "delta",
                 "mixing_bound_rounds"});
  CsvWriter table({"alpha", "gamma_star", "delta_star", "feasible"});
  Json rows = Json::array();
  Json optimal = Json::array();
  for (double alpha : alphas) {
    const auto opt = analysis::optimize_gamma(alpha);
    table.cell(alpha).cell(opt.gamma).cell(opt.delta).cell(opt.feasible);
    table.end_row();
    optimal.push_back({{"alpha", json_number(alpha)},
                       {"gamma_star", json_number(opt.gamma)},
                       {"delta_star", json_number(opt.delta)},
                       {"feasible", opt.feasible}});

    const auto row_gammas = auto_gamma ? std::vector<double>{opt.gamma} : gammas;
    for (double gamma : row_gammas) {
      if (2.0 * gamma / alpha >= 1.0) {
        err << "skipping alpha=" << format_number(alpha) << " gamma=" << format_number(gamma)
            << ": bounds need 2*gamma/alpha < 1\n";
        continue;
      }
      const double q = alpha * degree;
      const auto report = analysis::combined_bound(degree, q, gamma);
      const double delta = analysis::delta_wrapup(alpha, gamma);
      const bool feasible = delta > 0.0;
      const std::uint64_t rounds = feasible ? analysis::mixing_bound(delta, nodes, o.eps) : 0;
      csv.cell(alpha).cell(gamma).cell(report.path_bound).cell(report.v0_bound);
      csv.cell(report.combined).cell(delta);
      if (feasible) {
        csv.cell(rounds);
      } else {
        csv.cell("infeasible");
      }
      csv.end_row();
      rows.push_back({{"alpha", json_number(alpha)},
                      {"gamma", json_number(gamma)},
                      {"path_bound", json_number(report.path_bound)},
                      {"v0_bound", json_number(report.v0_bound)},
                      {"combined", json_number(report.combined)},
                      {"delta", json_number(delta)},
                      {"mixing_bound_rounds", feasible ? Json(rounds) : Json("infeasible")}});
    }
  }

  if (o.instance.format == "json") {
    Json j;
    j["command"] = "analyze";
    j["max_degree"] = degree;
    j["nodes"] = nodes;
    j["eps"] = json_number(o.eps);
    j["rows"] = rows;
    j["optimal"] = optimal;
    emit(o.instance.out, dump(j), out);
  } else {
    emit(o.instance.out, csv.str(), out);
  }
  if (!o.table.empty()) emit(o.table, table.str(), out);
  return kSuccess;
}

// Splices config-file tokens right after the subcommand so that later
// command-line flags override them.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> config;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ParameterError("--config needs a file");
      config = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (!config) return args;
  auto tokens = read_config_file(*config);
  auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
    return std::find(std::begin(kSubcommands), std::end(kSubcommands), a) != std::end(kSubcommands);
  });
  if (sub == args.end()) throw ParameterError("a subcommand is required");
  args.insert(sub + 1, tokens.begin(), tokens.end());
  return args;
}

}  // namespace

std::vector<std::string> read_config_file(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<std::string> tokens;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
  };
  while (std::getline(ss, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key == "config") throw ParseError(line_no, "config files cannot include other configs");
    if (value == "true") {
      tokens.push_back("--" + key);
    } else if (value != "false") {
      tokens.push_back("--" + key);
      tokens.push_back(value);
    }
  }
  return tokens;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Glauber dynamics: simulation, exact verification, and bound analysis",
               "lgd"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.add_option("--config", "Flat 'key = value' file; command-line flags override it");

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Run the chain and write the final coloring");
  add_instance_options(*sample_cmd, sample.instance, true);
  sample_cmd->add_option("--rounds", sample.rounds,
                         "Rounds to run (default: mixing bound for the chosen gamma)");
  sample_cmd->add_option("--eps", sample.eps, "Target distance for the default round count")
      ->capture_default_str();
  sample_cmd->add_option("--init", sample.init, "Initial coloring: zero, random, greedy")
      ->check(CLI::IsMember({"zero", "random", "uniform_random", "greedy"}))
      ->capture_default_str();
  sample_cmd->add_option("--trace", sample.trace, "Per-round summary CSV path");

  ExactOptions exact_opts;
  auto* exact_cmd = app.add_subcommand("exact", "Exact transition-matrix checks on a tiny graph");
  add_instance_options(*exact_cmd, exact_opts.instance, true);
  exact_cmd->add_option("--rounds", exact_opts.max_rounds, "Round cap for the TV curve")
      ->capture_default_str();
  exact_cmd->add_option("--eps", exact_opts.eps, "Comma-separated TV tolerances")
      ->capture_default_str();
  exact_cmd->add_option("--tv-out", exact_opts.tv_out, "Also write the TV curve CSV here");
  exact_cmd->add_option("--starts", exact_opts.starts, "Start states in the maximum: all, proper")
      ->check(CLI::IsMember({"all", "proper"}))
      ->capture_default_str();
  exact_cmd->add_flag("--no-symmetry", exact_opts.no_symmetry,
                      "Enumerate every row instead of one per symmetry orbit");

  CoupleOptions couple;
  auto* couple_cmd = app.add_subcommand("couple", "Coupled-step contraction and lemma checks");
  add_instance_options(*couple_cmd, couple.instance, true);
  couple_cmd->add_option("--trials", couple.trials, "Coupled steps to sample")
      ->capture_default_str();
  couple_cmd->add_option("--pairs", couple.pairs, "Pair sampler: uniform_random, proper_random")
      ->check(CLI::IsMember({"uniform_random", "proper_random"}))
      ->capture_default_str();

  AnalyzeOptions analyze;
  analyze.instance.format = "csv";
  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate the contraction bounds");
  add_instance_options(*analyze_cmd, analyze.instance, false);
  analyze_cmd->add_option("--alpha", analyze.instance.alpha, "Comma-separated alpha values");
  analyze_cmd->add_option("--gamma", analyze.instance.gamma, "'auto' or comma-separated values")
      ->capture_default_str();
  analyze_cmd->add_option("--degree", analyze.degree, "Max degree (default: graph's, else 8)");
  analyze_cmd->add_option("--nodes", analyze.nodes, "Node count (default: graph's, else 100)");
  analyze_cmd->add_option("--eps", analyze.eps, "Tolerance for the mixing bound")
      ->capture_default_str();
  analyze_cmd->add_option("--table", analyze.table, "Write the gamma* table CSV here");

  try {
    auto args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*sample_cmd) return cmd_sample(sample, out);
    if (*exact_cmd) return cmd_exact(exact_opts, out);
    if (*couple_cmd) return cmd_couple(couple, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lgd::cli
