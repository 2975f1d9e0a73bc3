#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hforest/forest.hpp"
#include "hforest/matrixlab.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// First-quadrant rectangle to scan, inclusive bounds, all >= 1. With
/// half_quadrant only blocks whose corner satisfies x < y are considered
/// (the eight reflection symmetries generate the rest).
struct ScanRegion {
  std::uint64_t x_lo = 1;
  std::uint64_t x_hi = 1;
  std::uint64_t y_lo = 1;
  std::uint64_t y_hi = 1;
  bool half_quadrant = false;
};

struct SearchOptions {
  unsigned threads = 1;
  std::string campaign_id;
  std::optional<std::string> checkpoint_path;
  /// Progress line to stderr every this many windows/segments; 0 = silent.
  std::uint64_t progress_interval = 0;
  /// Test hook: stop after this many x-windows and report incomplete; 0 = run
  /// to completion.
  std::uint64_t interrupt_after_windows = 0;
};

struct ScanOutcome {
  bool complete = true;
  std::uint64_t cursor = 0;  // last fully processed x-window start
  std::optional<Forest> best;
  /// Number of blocks achieving the best squared distance seen so far; only
  /// meaningful for uninterrupted, checkpoint-free runs.
  std::uint64_t best_count = 0;
};

/// Closest n x n fully-hidden block whose origin-closest corner lies in the
/// region (the block itself may extend past the upper bounds), minimizing the
/// exact squared corner distance; ties broken by smaller x then smaller y.
/// Per x-window of n consecutive columns, y advances maintaining a run of
/// fully-hidden rows, resetting on any visible point.
std::optional<Forest> scan_closest_forest(std::size_t n, const ScanRegion& region,
                                          const SearchOptions& opts = {});

/// Resumable form; honors opts.checkpoint_path and interrupt_after_windows.
ScanOutcome scan_closest_forest_resumable(std::size_t n, const ScanRegion& region,
                                          const SearchOptions& opts = {});

/// One contiguous shard of x-window starts [x_begin, x_end]; merging shard
/// results by (squared distance, x, y) reproduces the single-shard run.
ScanOutcome scan_shard(std::size_t n, const ScanRegion& region,
                       std::uint64_t x_begin, std::uint64_t x_end);

/// Merge accumulator for shard results (min by squared distance, tie-break
/// smaller x then smaller y; best_count adds up across equal bests).
void merge_scan_outcomes(ScanOutcome& into, const ScanOutcome& from);

/// Smallest m in [start, limit] such that m, m+1, ..., m+n-1 each have at
/// least k distinct prime factors; found via segmented omega sieving.
std::optional<Natural> strongly_composite_run(unsigned n, unsigned k,
                                              std::uint64_t start,
                                              std::uint64_t limit,
                                              const SearchOptions& opts = {});

/// Smallest y in [start, limit] with gcd(x_i, y + j) > 1 for every x in xs and
/// 0 <= j < n, by residue-sieving the union of the xs' prime factors. For
/// n >= 2 a found block can never intersect xs (adjacent integers are
/// coprime); the OverlappingRuns check guards that invariant.
std::optional<Natural> companion_block_search(const std::vector<Natural>& xs,
                                              unsigned n, std::uint64_t start,
                                              std::uint64_t limit,
                                              const SearchOptions& opts = {});

struct CampaignResult {
  Natural count;  // instantiations processed
  std::set<Natural> x_solutions;  // distinct x-corner values
  Forest min_y_forest;
  QuasiprimeMatrix argmin_matrix;
};

/// Per-instantiation hook: matrix and the solved forest.
using CampaignObserver = std::function<void(const QuasiprimeMatrix&, const Forest&)>;

/// Runs forest_from_matrix on every enumerated instantiation of the pattern,
/// aggregating the distinct x-corner set and the minimal-y instantiation.
CampaignResult enumerate_qp_campaign(const QuasiprimePattern& pattern,
                                     const CampaignObserver& observer = nullptr,
                                     const SearchOptions& opts = {});

/// Pattern for a 5-run of x-values with x1, x3, x5 even and x2, x5 divisible
/// by 3: guaranteed-hidden cells are fixed to 1 (the shared 2/3 powers all sit
/// in the corner 6), every other cell is a slot over the odd prime factors of
/// its row's x-value.
QuasiprimePattern make_five_run_pattern(const std::vector<Natural>& xs);

}  // namespace hf
