// cgeom: batch front end for the compression-geometry engine.
//
// Verbs: eval, sweep, search, walk, graph, experiment.  All randomized
// commands take an explicit --seed; identical argv + seed produce
// byte-identical artifacts.  Output files land in --out if given, else in
// $CGEOM_OUT_DIR, else in the current directory.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgeom/ball.hpp"
#include "cgeom/experiments.hpp"
#include "cgeom/lines.hpp"
#include "cgeom/serialize.hpp"
#include "cgeom/stats.hpp"
#include "cgeom/sweep.hpp"
#include "cgeom/walk.hpp"

namespace {

using namespace cgeom;

std::string resolve_out_dir(const std::string& flag_value) {
  std::string dir = flag_value;
  if (dir.empty()) {
    const char* env = std::getenv("CGEOM_OUT_DIR");
    dir = (env != nullptr && *env != '\0') ? env : ".";
  }
  std::filesystem::create_directories(dir);
  return dir;
}

std::string out_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string csv_exact(const Pt<Rat>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += rat_str(p[i]);
  }
  return s;
}

template <class S>
std::string csv_decimal(const Pt<S>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += decimal_str(to_double(p[i]));
  }
  return s;
}

// --- eval --------------------------------------------------------------------

struct EvalArgs {
  std::string stat;
  std::string tuple;
  long m = 1;
  long s = 2;
  bool use_float = false;
};

void run_eval(const EvalArgs& a) {
  const Scale m(a.m);
  if (a.use_float) {
    Tuple<double> t(parse_float_point(a.tuple));
    std::string text;
    if (a.stat == "mass") text = decimal_str(mass(t, m));
    else if (a.stat == "rank_sq") text = decimal_str(rank_sq(t, m));
    else if (a.stat == "rank") text = decimal_str(rank(t, m));
    else if (a.stat == "entropy") text = decimal_str(entropy(t, m));
    else if (a.stat == "gap_sq") text = decimal_str(gap_sq(t, m));
    else if (a.stat == "gap") text = decimal_str(gap(t, m));
    else if (a.stat == "energy") text = decimal_str(energy(t, m));
    else if (a.stat == "cover") text = csv_decimal(cover(t, a.s).coords());
    else if (a.stat == "cover_mass") text = decimal_str(cover_mass(t, a.s));
    else if (a.stat == "measure") text = decimal_str(measure(t, m));
    else if (a.stat == "cost") text = decimal_str(cost(t, m));
    else if (a.stat == "compress") text = csv_decimal(compress(t, m).coords());
    else throw std::invalid_argument("unknown statistic: " + a.stat);
    std::cout << text << "\n";
    return;
  }
  Tuple<Rat> t(parse_rat_point(a.tuple));
  std::string text;
  if (a.stat == "mass") text = exact_with_decimal(mass(t, m));
  else if (a.stat == "rank_sq") text = exact_with_decimal(rank_sq(t, m));
  else if (a.stat == "rank") text = decimal_str(rank(t, m));
  else if (a.stat == "entropy") text = exact_with_decimal(entropy(t, m));
  else if (a.stat == "gap_sq") text = exact_with_decimal(gap_sq(t, m));
  else if (a.stat == "gap") text = decimal_str(gap(t, m));
  else if (a.stat == "energy") text = decimal_str(energy(t, m));
  else if (a.stat == "cover") {
    Pt<Rat> c = cover(t, a.s).coords();
    text = csv_exact(c) + " (" + csv_decimal(c) + ")";
  } else if (a.stat == "cover_mass") {
    text = exact_with_decimal(cover_mass(t, a.s));
  } else if (a.stat == "measure") {
    text = exact_with_decimal(measure(t, m));
  } else if (a.stat == "cost") {
    text = decimal_str(cost(t, m));
  } else if (a.stat == "compress") {
    Pt<Rat> c = compress(t, m).coords();
    text = csv_exact(c) + " (" + csv_decimal(c) + ")";
  } else {
    throw std::invalid_argument("unknown statistic: " + a.stat);
  }
  std::cout << text << "\n";
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out;
};

int run_sweep_cmd(const SweepArgs& a) {
  const std::string text = read_text_file(a.config_path);
  SweepConfig cfg = sweep_config_from_json_text(text);
  // The config file wins over flags; --seed only fills a key the file omits.
  if (a.seed && !nlohmann::json::parse(text).contains("seed")) cfg.seed = *a.seed;
  std::vector<SweepReport> reports = run_sweep(cfg, a.jobs);
  const std::string dir = resolve_out_dir(a.out);
  write_text_file(out_path(dir, "sweep.csv"), sweep_to_csv(reports));
  write_text_file(out_path(dir, "sweep.json"), sweep_to_json_text(reports));
  std::cout << sweep_to_csv(reports);
  if (sweep_has_hard_violations(reports)) {
    std::cerr << "error: hard inequality violations recorded\n";
    return 1;
  }
  return 0;
}

// --- search ------------------------------------------------------------------

struct SearchArgs {
  std::string theorem;
  long n = 0;
  long L = 0;
  std::optional<long> K;
  long s = 2;
  long m = 1;
  std::string out;
};

void run_search(const SearchArgs& a) {
  ExistenceWitness w = [&] {
    if (a.theorem == "power_sum") return power_sum_search(a.n, a.L, a.s);
    if (a.theorem == "product") return product_search(a.n, a.L, a.K);
    return sandwich_search(a.n, a.L, Scale(a.m), a.theorem, a.K);
  }();
  const std::string line = witness_json_line(w);
  std::cout << line;
  if (!a.out.empty() || std::getenv("CGEOM_OUT_DIR") != nullptr)
    write_text_file(out_path(resolve_out_dir(a.out), "witness.jsonl"), line);
}

// --- walk / graph ------------------------------------------------------------

struct WalkArgs {
  std::string start;
  long m = 1;
  int steps = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void run_walk(const WalkArgs& a) {
  RatTuple x0(parse_rat_point(a.start));
  Walk<Rat> w = generate_walk(x0, Scale(a.m), a.steps, a.seed);
  const std::string dir = resolve_out_dir(a.out);
  write_text_file(out_path(dir, "walk.json"), walk_to_json_text(w));
  write_text_file(out_path(dir, "walk_lengths.csv"), walk_length_csv(w));
  BoundPair b = walk_length_bounds(w);
  std::cout << "segments=" << w.segments.size() << " length=" << decimal_str(walk_length(w))
            << " lower=" << decimal_str(b.lower) << " upper=" << decimal_str(b.upper) << "\n";
}

struct GraphArgs {
  std::string in;
  std::string out;
};

void run_graph(const GraphArgs& a) {
  Walk<Rat> w = walk_from_json_text(read_text_file(a.in));
  CompressionGraph<Rat> g = build_graph(w);
  write_text_file(out_path(resolve_out_dir(a.out), "graph.json"), graph_to_json_text(g));
  std::cout << "order=" << g.vertex_set.size() << " edges=" << g.edge_set.size()
            << " path=" << (path_degrees_ok(g) ? "yes" : "no") << "\n";
}

// --- experiments -------------------------------------------------------------

int run_erdos_straus(long n, long n_max, long bound, const std::string& out) {
  if (n_max < n) n_max = n;
  std::vector<UnitFractionSolution> sols;
  int missing = 0;
  for (long k = n; k <= n_max; ++k) {
    auto sol = erdos_straus_solve(k, bound);
    if (!sol) {
      std::cerr << "error: no solution for n=" << k << " within bound " << bound << "\n";
      ++missing;
      continue;
    }
    sols.push_back(*sol);
    std::cout << sol->n << ',' << sol->denominators[0] << ',' << sol->denominators[1] << ','
              << sol->denominators[2] << "\n";
  }
  if (!out.empty() || std::getenv("CGEOM_OUT_DIR") != nullptr)
    write_text_file(out_path(resolve_out_dir(out), "erdos_straus.csv"), erdos_straus_csv(sols));
  return missing == 0 ? 0 : 1;
}

void run_unit_gap(long n, std::uint64_t seed, int count, bool symmetric) {
  if (symmetric) {
    Tuple<double> p = symmetric_unit_gap_point(n);
    std::cout << csv_decimal(p.coords()) << "\n";
    return;
  }
  for (int i = 0; i < count; ++i) {
    Tuple<double> p = unit_gap_point(n, seed + static_cast<std::uint64_t>(i));
    std::cout << csv_decimal(p.coords()) << "\n";
  }
}

void run_unit_distance(const std::string& points_arg, double tol) {
  std::vector<Pt<double>> pts;
  for (const std::string& chunk : split(points_arg, ';'))
    if (!chunk.empty()) pts.push_back(parse_float_point(chunk));
  std::cout << "points=" << pts.size() << " unit_pairs=" << unit_distance_pairs(pts, tol) << "\n";
}

void run_rational_distance(const std::string& tuple_arg, long m, long depth) {
  NatTuple x(parse_long_list(tuple_arg));
  RationalDistanceFamily fam = rational_distance_family(x, Scale(m), depth);
  std::cout << "gap_sq," << rat_str(fam.gap_sq) << "\n";
  std::cout << "k,radius\n";
  for (std::size_t k = 0; k < fam.radii.size(); ++k)
    std::cout << (k + 1) << ',' << rat_str(fam.radii[k]) << "\n";
}

void run_integer_line(const std::string& tuple_arg, long m, long bound) {
  NatTuple x(parse_long_list(tuple_arg));
  IntegerLinePoints line = integer_distance_line(x, Scale(m), bound);
  std::cout << "t," << csv_decimal(line.anchor) << " direction " << csv_decimal(line.unit_direction)
            << "\n";
  for (std::size_t i = 0; i < line.parameters.size(); ++i)
    std::cout << line.parameters[i] << ',' << csv_decimal(line.points[i]) << "\n";
  std::cout << "pairwise_integer=" << (pairwise_integer_distances(line.points) ? "yes" : "no")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compression-geometry batch front end"};
  app.require_subcommand(1);
  int exit_code = 0;

  // eval
  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "print a statistic for one tuple");
  eval_cmd->add_option("--stat", ev.stat,
                       "mass|rank_sq|rank|entropy|gap_sq|gap|energy|cover|cover_mass|"
                       "measure|cost|compress")
      ->required();
  eval_cmd->add_option("--tuple", ev.tuple, "comma-separated integers or p/q fractions")
      ->required();
  eval_cmd->add_option("--m", ev.m, "compression scale (default 1)");
  eval_cmd->add_option("--s", ev.s, "cover exponent (default 2)");
  eval_cmd->add_flag("--float", ev.use_float, "parse the tuple as floats");
  eval_cmd->callback([&] { run_eval(ev); });

  // sweep
  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "run an inequality sweep from a config file");
  sweep_cmd->add_option("--config", sw.config_path, "JSON sweep configuration")->required();
  std::uint64_t sweep_seed = 0;
  auto* sweep_seed_opt = sweep_cmd->add_option("--seed", sweep_seed, "seed if the config omits one");
  sweep_cmd->add_option("--jobs", sw.jobs, "worker threads (default 1)");
  sweep_cmd->add_option("--out", sw.out, "output directory");
  sweep_cmd->callback([&] {
    if (*sweep_seed_opt) sw.seed = sweep_seed;
    exit_code = run_sweep_cmd(sw);
  });

  // search
  SearchArgs se;
  auto* search_cmd = app.add_subcommand("search", "construct an existence witness");
  search_cmd
      ->add_option("--theorem", se.theorem, "harmonic_run|centered_run|split_run|power_sum|product")
      ->required();
  search_cmd->add_option("--n", se.n, "tuple length")->required();
  search_cmd->add_option("--L", se.L, "infimum anchor")->required();
  long search_K = 0;
  auto* k_opt = search_cmd->add_option("--K", search_K, "supremum anchor (split/product forms)");
  search_cmd->add_option("--s", se.s, "power exponent (power_sum, default 2)");
  search_cmd->add_option("--m", se.m, "compression scale (default 1)");
  search_cmd->add_option("--out", se.out, "output directory");
  search_cmd->callback([&] {
    if (*k_opt) se.K = search_K;
    run_search(se);
  });

  // walk
  WalkArgs wa;
  auto* walk_cmd = app.add_subcommand("walk", "generate a self-avoiding compression walk");
  walk_cmd->add_option("--start", wa.start, "starting tuple")->required();
  walk_cmd->add_option("--m", wa.m, "compression scale (default 1)");
  walk_cmd->add_option("--steps", wa.steps, "segment count")->required();
  walk_cmd->add_option("--seed", wa.seed, "generation seed")->required();
  walk_cmd->add_option("--out", wa.out, "output directory");
  walk_cmd->callback([&] { run_walk(wa); });

  // graph
  GraphArgs gr;
  auto* graph_cmd = app.add_subcommand("graph", "convert walk JSON to graph JSON");
  graph_cmd->add_option("--in", gr.in, "walk JSON path")->required();
  graph_cmd->add_option("--out", gr.out, "output directory");
  graph_cmd->callback([&] { run_graph(gr); });

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Diophantine experiment suite");
  exp_cmd->require_subcommand(1);

  long es_n = 0, es_n_max = 0, es_bound = 10000;
  std::string es_out;
  auto* es = exp_cmd->add_subcommand("erdos-straus", "4/n = 1/x1 + 1/x2 + 1/x3 solver");
  es->add_option("--n", es_n, "numerator target")->required();
  auto* es_max_opt = es->add_option("--n-max", es_n_max, "solve a range n..n-max");
  es->add_option("--bound", es_bound, "search bound (default 10000)");
  es->add_option("--out", es_out, "output directory");
  es->callback([&] {
    exit_code = run_erdos_straus(es_n, *es_max_opt ? es_n_max : es_n, es_bound, es_out);
  });

  long ug_n = 2;
  std::uint64_t ug_seed = 0;
  int ug_count = 1;
  bool ug_sym = false;
  auto* ug = exp_cmd->add_subcommand("unit-gap", "points with gap exactly one");
  ug->add_option("--n", ug_n, "dimension (default 2)");
  auto* ug_seed_opt = ug->add_option("--seed", ug_seed, "sampling seed");
  ug->add_option("--count", ug_count, "number of points (default 1)");
  ug->add_flag("--symmetric", ug_sym, "print the closed-form symmetric point");
  ug->callback([&] {
    if (!ug_sym && !*ug_seed_opt)
      throw CLI::RequiredError("--seed (required unless --symmetric)");
    run_unit_gap(ug_n, ug_seed, ug_count, ug_sym);
  });

  std::string ud_points;
  double ud_tol = 1e-12;
  auto* ud = exp_cmd->add_subcommand("unit-distance", "count unit-distance pairs");
  ud->add_option("--points", ud_points, "semicolon-separated tuples, e.g. 0,0;0,1;1,0")
      ->required();
  ud->add_option("--tol", ud_tol, "distance tolerance (default 1e-12)");
  ud->callback([&] { run_unit_distance(ud_points, ud_tol); });

  std::string rd_tuple;
  long rd_m = 1, rd_depth = 4;
  auto* rd = exp_cmd->add_subcommand("rational-distance", "concentric rational-radius family");
  rd->add_option("--tuple", rd_tuple, "planar integer tuple")->required();
  rd->add_option("--m", rd_m, "compression scale (default 1)");
  rd->add_option("--depth", rd_depth, "number of radii (default 4)");
  rd->callback([&] { run_rational_distance(rd_tuple, rd_m, rd_depth); });

  std::string il_tuple;
  long il_m = 1, il_bound = 10;
  auto* il = exp_cmd->add_subcommand("integer-line", "integer-spaced points on a compression line");
  il->add_option("--tuple", il_tuple, "integer tuple")->required();
  il->add_option("--m", il_m, "compression scale (default 1)");
  il->add_option("--bound", il_bound, "largest parameter (default 10)");
  il->callback([&] { run_integer_line(il_tuple, il_m, il_bound); });

  long an_n = 0, an_cluster = 0, an_gap = 0;
  auto* an = exp_cmd->add_subcommand("anning", "integral point-set lower bound");
  an->add_option("--n", an_n, "point count")->required();
  an->add_option("--cluster", an_cluster, "cluster size")->required();
  an->add_option("--max-gap", an_gap, "largest gap considered")->required();
  an->callback([&] { std::cout << decimal_str(anning_lower_bound(an_n, an_cluster, an_gap)) << "\n"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
