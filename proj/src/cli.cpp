#include "bcr/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bcr/bench.hpp"
#include "bcr/json_io.hpp"
#include "bcr/route.hpp"
#include "bcr/supergraph.hpp"

namespace bcr {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_decimal(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return parse_edge_list(in);
}

void emit(const std::string& payload, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot open output file '" + out_path + "'");
  file << payload;
  if (!file.good()) throw Error("failed to write '" + out_path + "'");
}

GcMode parse_gc_mode(const std::string& text) {
  if (text == "strict") return GcMode::Strict;
  if (text == "song") return GcMode::Song;
  throw UsageError("gc-mode must be 'strict' or 'song'");
}

CoverAlgorithm parse_cover_algorithm(const std::string& text) {
  if (text == "gc") return CoverAlgorithm::Gc;
  if (text == "memb") return CoverAlgorithm::Memb;
  if (text == "ciea") return CoverAlgorithm::Ciea;
  throw UsageError("alg must be one of gc, memb, ciea");
}

BoxCover make_cover(const Graph& g, CoverAlgorithm alg, int rb, GcMode gc_mode,
                    std::optional<std::uint64_t> order_seed) {
  switch (alg) {
    case CoverAlgorithm::Gc: return gc_cover(g, rb, gc_mode, order_seed);
    case CoverAlgorithm::Memb: return memb_cover(g, rb);
    case CoverAlgorithm::Ciea: return ciea_cover(g, rb);
  }
  throw Error("unknown covering algorithm");
}

struct GenOptions {
  std::string topology;
  int depth = -1;
  int n = -1;
  double p = -1.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

void run_gen(const GenOptions& opt, std::ostream& out) {
  Graph g;
  std::ostringstream header;
  if (opt.topology == "ternary-tree") {
    if (opt.depth < 0) throw UsageError("gen --topology ternary-tree requires --depth >= 0");
    g = gen_ternary_tree(opt.depth);
    header << "# gen topology=ternary-tree depth=" << opt.depth << " seed=" << opt.seed << '\n';
  } else if (opt.topology == "er") {
    if (opt.n < 0) throw UsageError("gen --topology er requires --n >= 0");
    if (!(opt.p >= 0.0 && opt.p <= 1.0))
      throw UsageError("gen --topology er requires --p in [0,1]");
    g = gen_random_graph(opt.n, opt.p, opt.seed);
    header << "# gen topology=er n=" << opt.n << " p=" << format_decimal(opt.p)
           << " seed=" << opt.seed << '\n';
  } else {
    throw UsageError("topology must be 'ternary-tree' or 'er'");
  }
  emit(header.str() + write_edge_list(g), opt.out_path, out);
}

struct CoverOptions {
  std::string alg;
  int rb = 0;
  std::string gc_mode = "strict";
  std::optional<std::uint64_t> seed;
  std::string in_path;
  std::string out_path;
};

void run_cover_cmd(const CoverOptions& opt, std::ostream& out) {
  if (opt.rb < 1) throw UsageError("rb must be >= 1");
  const CoverAlgorithm alg = parse_cover_algorithm(opt.alg);
  const GcMode mode = parse_gc_mode(opt.gc_mode);
  const Graph g = load_graph(opt.in_path);
  const BoxCover cover = make_cover(g, alg, opt.rb, mode, opt.seed);
  emit(cover_to_json(cover) + "\n", opt.out_path, out);
}

struct RouteOptions {
  std::string alg;
  int rb = 1;
  std::string gc_mode = "strict";
  NodeId s = 0;
  NodeId t = 0;
  std::string in_path;
  std::string out_path;
};

void run_route_cmd(const RouteOptions& opt, std::ostream& out) {
  if (opt.rb < 1) throw UsageError("rb must be >= 1");
  const GcMode mode = parse_gc_mode(opt.gc_mode);
  const Graph g = load_graph(opt.in_path);
  Route route;
  if (opt.alg == "dijkstra") {
    route = dijkstra_route(g, opt.s, opt.t);
  } else {
    const CoverAlgorithm alg = parse_cover_algorithm(opt.alg);
    const BoxCover cover = make_cover(g, alg, opt.rb, mode, std::nullopt);
    const SuperGraph sg = build_supergraph(g, cover);
    route = bcr_route(g, sg, opt.s, opt.t);
  }
  route = compute_stretch(g, route);
  emit(route_to_json(route) + "\n", opt.out_path, out);
}

struct BenchOptions {
  std::string mode;
  std::vector<int> depths{2, 3, 4, 5, 6, 7};
  int rb = 1;
  int reps = 100;
  int pairs = 32;
  std::uint64_t seed = 0;
  std::string gc_mode = "strict";
  std::string out_dir;
};

void run_bench_cmd(const BenchOptions& opt) {
  if (opt.rb < 1) throw UsageError("rb must be >= 1");
  if (opt.reps < 1) throw UsageError("reps must be >= 1");
  if (opt.pairs < 1) throw UsageError("pairs must be >= 1");
  for (int d : opt.depths)
    if (d < 0) throw UsageError("depths must be non-negative");
  const GcMode mode = parse_gc_mode(opt.gc_mode);

  std::vector<BenchRecord> records;
  std::string file_name;
  if (opt.mode == "boxcount") {
    records = boxcount_suite(opt.depths, opt.rb, mode);
    file_name = "boxcount.csv";
  } else if (opt.mode == "timing") {
    records = timing_suite(opt.depths, opt.rb, opt.reps, opt.pairs, opt.seed, mode);
    file_name = "timing.csv";
  } else {
    throw UsageError("bench mode must be 'boxcount' or 'timing'");
  }

  std::error_code ec;
  std::filesystem::create_directories(opt.out_dir, ec);
  if (ec) throw Error("cannot create output directory '" + opt.out_dir + "'");
  const std::string path = (std::filesystem::path(opt.out_dir) / file_name).string();
  std::ofstream file(path);
  if (!file) throw Error("cannot open output file '" + path + "'");
  write_csv(records, file);
  if (!file.good()) throw Error("failed to write '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Box-covering hierarchical routing toolkit"};
  app.name("bcr");
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen_cmd->add_option("--topology", gen.topology, "Graph family: ternary-tree or er")
      ->required();
  gen_cmd->add_option("--depth", gen.depth, "Tree depth (ternary-tree)");
  gen_cmd->add_option("--n", gen.n, "Node count (er)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (er)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed", true);
  gen_cmd->add_option("-o,--output", gen.out_path, "Output edge-list file")->required();

  CoverOptions cover;
  std::uint64_t cover_seed_value = 0;
  CLI::App* cover_cmd = app.add_subcommand("cover", "Partition a graph into boxes");
  cover_cmd->add_option("--alg", cover.alg, "Covering algorithm: gc, memb, ciea")->required();
  cover_cmd->add_option("--rb", cover.rb, "Box radius (>= 1)")->required();
  cover_cmd->add_option("--gc-mode", cover.gc_mode, "GC dual threshold: strict or song", true);
  CLI::Option* cover_seed_opt =
      cover_cmd->add_option("--seed", cover_seed_value, "Shuffle the GC coloring order");
  cover_cmd->add_option("-i,--input", cover.in_path, "Input edge-list file")->required();
  cover_cmd->add_option("-o,--output", cover.out_path, "Output JSON file (default stdout)");

  RouteOptions route;
  CLI::App* route_cmd = app.add_subcommand("route", "Compute an s-to-t route");
  route_cmd->add_option("--alg", route.alg, "dijkstra, gc, memb, or ciea")->required();
  route_cmd->add_option("--rb", route.rb, "Box radius (>= 1)", true);
  route_cmd->add_option("--gc-mode", route.gc_mode, "GC dual threshold: strict or song", true);
  route_cmd->add_option("-s,--source", route.s, "Source node id")->required();
  route_cmd->add_option("-t,--target", route.t, "Target node id")->required();
  route_cmd->add_option("-i,--input", route.in_path, "Input edge-list file")->required();
  route_cmd->add_option("-o,--output", route.out_path, "Output JSON file (default stdout)");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a measurement suite");
  bench_cmd->add_option("mode", bench.mode, "boxcount or timing")->required();
  bench_cmd->add_option("--depths", bench.depths, "Ternary-tree depths")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--rb", bench.rb, "Box radius (>= 1)", true);
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per measured region", true);
  bench_cmd->add_option("--pairs", bench.pairs, "Sampled (s,t) pairs per size", true);
  bench_cmd->add_option("--seed", bench.seed, "Pair-sampling seed", true);
  bench_cmd->add_option("--gc-mode", bench.gc_mode, "GC dual threshold: strict or song", true);
  bench_cmd->add_option("--out", bench.out_dir, "Output directory for CSV files")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (*gen_cmd) {
      run_gen(gen, out);
    } else if (*cover_cmd) {
      if (cover_seed_opt->count() > 0) cover.seed = cover_seed_value;
      run_cover_cmd(cover, out);
    } else if (*route_cmd) {
      run_route_cmd(route, out);
    } else if (*bench_cmd) {
      run_bench_cmd(bench);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace bcr
