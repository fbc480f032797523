#include "bcr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "bcr/route.hpp"
#include "bcr/supergraph.hpp"

namespace bcr {

const char* to_string(Experiment e) {
  return e == Experiment::BoxCount ? "boxcount" : "timing";
}

const char* to_string(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::Dijkstra: return "dijkstra";
    case BenchAlgorithm::BcrGc: return "bcr_gc";
    case BenchAlgorithm::BcrMemb: return "bcr_memb";
    case BenchAlgorithm::BcrCiea: return "bcr_ciea";
  }
  return "?";
}

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Cover: return "cover";
    case Phase::Supergraph: return "supergraph";
    case Phase::Query: return "query";
    case Phase::Total: return "total";
  }
  return "?";
}

const char* to_string(Metric m) {
  switch (m) {
    case Metric::Boxes: return "boxes";
    case Metric::Microseconds: return "microseconds";
    case Metric::Skipped: return "skipped";
  }
  return "?";
}

namespace {

// Keeps the compiler from discarding a measured computation.
template <typename T>
inline void sink(const T& value) {
  asm volatile("" : : "g"(&value) : "memory");
}

double now_us() {
  return std::chrono::duration<double, std::micro>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Minimum wall time of `reps` runs of `fn`, in microseconds.
template <typename Fn>
double min_time_us(int reps, Fn&& fn) {
  double best = kUnreachable;
  for (int r = 0; r < reps; ++r) {
    const double t0 = now_us();
    fn();
    const double t1 = now_us();
    best = std::min(best, t1 - t0);
  }
  return best;
}

struct BcrVariant {
  BenchAlgorithm algorithm;
  CoverAlgorithm cover_algorithm;
};

constexpr BcrVariant kVariants[] = {
    {BenchAlgorithm::BcrGc, CoverAlgorithm::Gc},
    {BenchAlgorithm::BcrMemb, CoverAlgorithm::Memb},
    {BenchAlgorithm::BcrCiea, CoverAlgorithm::Ciea},
};

BoxCover run_cover(const Graph& g, CoverAlgorithm alg, int rb, GcMode gc_mode) {
  switch (alg) {
    case CoverAlgorithm::Gc: return gc_cover(g, rb, gc_mode);
    case CoverAlgorithm::Memb: return memb_cover(g, rb);
    case CoverAlgorithm::Ciea: return ciea_cover(g, rb);
  }
  throw Error("unknown covering algorithm");
}

}  // namespace

std::vector<BenchRecord> boxcount_suite(std::span<const int> depths, int rb, GcMode gc_mode) {
  std::vector<BenchRecord> records;
  for (int depth : depths) {
    const Graph g = gen_ternary_tree(depth);
    for (const BcrVariant& variant : kVariants) {
      const BoxCover cover = run_cover(g, variant.cover_algorithm, rb, gc_mode);
      BenchRecord rec;
      rec.experiment = Experiment::BoxCount;
      rec.algorithm = variant.algorithm;
      rec.n = g.node_count();
      rec.rb = rb;
      rec.metric = Metric::Boxes;
      rec.value = static_cast<double>(cover.boxes.size());
      records.push_back(rec);
    }
  }
  return records;
}

std::vector<BenchRecord> timing_suite(std::span<const int> depths, int rb, int reps, int pairs,
                                      std::uint64_t seed, GcMode gc_mode) {
  if (reps < 1) throw Error("reps must be >= 1");
  if (pairs < 1) throw Error("pairs must be >= 1");

  std::vector<BenchRecord> records;
  std::mt19937_64 rng(seed);
  for (int depth : depths) {
    const Graph g = gen_ternary_tree(depth);
    const NodeId n = g.node_count();

    BenchRecord base;
    base.experiment = Experiment::Timing;
    base.n = n;
    base.rb = rb;
    base.reps = reps;
    base.seed = seed;

    if (n < 2) {
      BenchRecord skip = base;
      skip.metric = Metric::Skipped;
      skip.value = 0.0;
      records.push_back(skip);
      continue;
    }

    std::vector<std::pair<NodeId, NodeId>> sample;
    sample.reserve(pairs);
    for (int i = 0; i < pairs; ++i) {
      auto s = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n));
      auto t = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(n - 1));
      if (t >= s) ++t;
      sample.emplace_back(s, t);
    }

    {
      double query_sum = 0.0;
      for (auto [s, t] : sample) {
        query_sum += min_time_us(reps, [&] {
          Route r = dijkstra_route(g, s, t);
          sink(r.cost);
        });
      }
      BenchRecord rec = base;
      rec.algorithm = BenchAlgorithm::Dijkstra;
      rec.phase = Phase::Query;
      rec.metric = Metric::Microseconds;
      rec.value = query_sum / pairs;
      records.push_back(rec);
    }

    for (const BcrVariant& variant : kVariants) {
      BoxCover cover;
      const double cover_us = min_time_us(reps, [&] {
        cover = run_cover(g, variant.cover_algorithm, rb, gc_mode);
        sink(cover.boxes.size());
      });
      SuperGraph sg;
      const double sg_us = min_time_us(reps, [&] {
        sg = build_supergraph(g, cover);
        sink(sg.super_edges.size());
      });
      double query_sum = 0.0;
      for (auto [s, t] : sample) {
        query_sum += min_time_us(reps, [&] {
          Route r = bcr_route(g, sg, s, t);
          sink(r.cost);
        });
      }
      const double query_mean = query_sum / pairs;

      BenchRecord rec = base;
      rec.algorithm = variant.algorithm;
      rec.metric = Metric::Microseconds;
      rec.phase = Phase::Cover;
      rec.value = cover_us;
      records.push_back(rec);
      rec.phase = Phase::Supergraph;
      rec.value = sg_us;
      records.push_back(rec);
      rec.phase = Phase::Query;
      rec.value = query_mean;
      records.push_back(rec);
      rec.phase = Phase::Total;
      rec.value = cover_us + sg_us + pairs * query_mean;
      records.push_back(rec);
    }
  }
  return records;
}

namespace {

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

template <typename Enum>
Enum enum_from(const std::string& token, std::initializer_list<Enum> values, int line) {
  for (Enum e : values)
    if (token == to_string(e)) return e;
  throw ParseError("unknown token '" + token + "' at line " + std::to_string(line));
}

}  // namespace

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "experiment,algorithm,n,rb,phase,metric,value,reps,seed\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.experiment) << ',' << to_string(r.algorithm) << ',' << r.n << ',' << r.rb
        << ',' << (r.phase ? to_string(*r.phase) : "") << ',' << to_string(r.metric) << ','
        << format_value(r.value) << ',' << r.reps << ',' << r.seed << '\n';
    if (!out) throw Error("failed to write CSV row");
  }
  if (!out) throw Error("failed to write CSV");
}

std::string write_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  write_csv(records, out);
  return out.str();
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::vector<BenchRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "experiment,algorithm,n,rb,phase,metric,value,reps,seed")
        throw ParseError("unexpected CSV header at line 1");
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 9) throw ParseError("malformed row at line " + std::to_string(line_no));

    BenchRecord r;
    r.experiment =
        enum_from(fields[0], {Experiment::BoxCount, Experiment::Timing}, line_no);
    r.algorithm = enum_from(fields[1],
                            {BenchAlgorithm::Dijkstra, BenchAlgorithm::BcrGc,
                             BenchAlgorithm::BcrMemb, BenchAlgorithm::BcrCiea},
                            line_no);
    try {
      r.n = std::stoi(fields[2]);
      r.rb = std::stoi(fields[3]);
      if (!fields[4].empty())
        r.phase = enum_from(fields[4], {Phase::Cover, Phase::Supergraph, Phase::Query,
                                        Phase::Total},
                            line_no);
      r.metric =
          enum_from(fields[5], {Metric::Boxes, Metric::Microseconds, Metric::Skipped}, line_no);
      r.value = std::stod(fields[6]);
      r.reps = std::stoi(fields[7]);
      r.seed = std::stoull(fields[8]);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("malformed row at line " + std::to_string(line_no));
    }
    records.push_back(r);
  }
  return records;
}

}  // namespace bcr
