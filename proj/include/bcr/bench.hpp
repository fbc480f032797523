#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bcr/cover.hpp"

namespace bcr {

enum class Experiment { BoxCount, Timing };
enum class BenchAlgorithm { Dijkstra, BcrGc, BcrMemb, BcrCiea };
enum class Phase { Cover, Supergraph, Query, Total };
enum class Metric { Boxes, Microseconds, Skipped };

const char* to_string(Experiment e);
const char* to_string(BenchAlgorithm a);
const char* to_string(Phase p);
const char* to_string(Metric m);

/// One measurement row. Query-phase values are per-query means over the
/// sampled pairs; every measured region is repeated `reps` times and the
/// minimum kept before averaging.
struct BenchRecord {
  Experiment experiment = Experiment::BoxCount;
  BenchAlgorithm algorithm = BenchAlgorithm::Dijkstra;
  int n = 0;
  int rb = 1;
  std::optional<Phase> phase;  // timing rows only
  Metric metric = Metric::Boxes;
  double value = 0.0;
  int reps = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const BenchRecord& a, const BenchRecord& b) = default;
};

/// Box counts of the three covering algorithms on complete ternary trees of
/// the given depths.
std::vector<BenchRecord> boxcount_suite(std::span<const int> depths, int rb,
                                        GcMode gc_mode = GcMode::Strict);

/// Per-query routing time of flat Dijkstra versus the three hierarchical
/// variants on complete ternary trees, with cover and quotient-graph build
/// times reported separately and TOTAL = COVER + SUPERGRAPH + pairs * QUERY.
/// Samples `pairs` (s,t) pairs per size from `seed`; sizes with n < 2 yield
/// a skipped-marker record. Measured regions run on one thread.
std::vector<BenchRecord> timing_suite(std::span<const int> depths, int rb, int reps, int pairs,
                                      std::uint64_t seed, GcMode gc_mode = GcMode::Strict);

/// CSV with header experiment,algorithm,n,rb,phase,metric,value,reps,seed;
/// values carry 6 significant digits; row order is input order. The phase
/// column is empty for rows without one.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);
std::string write_csv(std::span<const BenchRecord> records);

/// Parses write_csv output back; throws ParseError naming the line on
/// malformed input.
std::vector<BenchRecord> parse_csv(std::istream& in);

}  // namespace bcr
