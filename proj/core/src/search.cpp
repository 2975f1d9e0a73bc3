#include "hforest/search.hpp"

#include <algorithm>
#include <cstdio>
#include <future>

#include "hforest/arith.hpp"
#include "hforest/checkpoint.hpp"
#include "hforest/errors.hpp"

namespace hf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 sq_dist(u64 x, u64 y) { return u128(x) * x + u128(y) * y; }

struct Candidate {
  u64 x = 0, y = 0;
  u128 sq = 0;
};

Forest candidate_forest(const Candidate& c, std::size_t n) {
  Forest f;
  f.dimension = 2;
  f.side = n;
  f.corner = {Natural(static_cast<unsigned long>(c.x)),
              Natural(static_cast<unsigned long>(c.y))};
  return f;
}

std::optional<Candidate> candidate_of(const std::optional<Forest>& f) {
  if (!f) return std::nullopt;
  Candidate c;
  c.x = to_u64(f->corner.at(0));
  c.y = to_u64(f->corner.at(1));
  c.sq = sq_dist(c.x, c.y);
  return c;
}

// The closest block whose corner x equals wx, if any. `best` enables the
// strict-greater prune: candidates tying the current best are never skipped,
// so tie counting stays exact.
std::optional<Candidate> scan_window(std::size_t n, const ScanRegion& region, u64 wx,
                                     const std::optional<Candidate>& best) {
  u64 y_begin = region.y_lo;
  if (region.half_quadrant) y_begin = std::max(y_begin, wx + 1);
  if (region.y_hi < y_begin) return std::nullopt;
  if (best && sq_dist(wx, y_begin) > best->sq) return std::nullopt;

  // Region bounds constrain the corner; the block may extend past them, so
  // rows run up to y_hi + n - 1.
  std::size_t run = 0;
  for (u64 y = y_begin; y <= region.y_hi + n - 1; ++y) {
    // The earliest corner still reachable from here only moves up, so a
    // strictly-worse lower bound ends the window.
    u64 corner_y = (y - y_begin + 1 >= n) ? y - n + 1 : y_begin;
    if (best && sq_dist(wx, corner_y) > best->sq) break;

    bool row_hidden = true;
    for (std::size_t dx = 0; dx < n; ++dx) {
      if (gcd_u64(wx + dx, y) == 1) {
        row_hidden = false;
        break;
      }
    }
    run = row_hidden ? run + 1 : 0;
    if (run >= n) {
      // y increases monotonically, so the first block is the window minimum.
      return Candidate{wx, y - n + 1, sq_dist(wx, y - n + 1)};
    }
  }
  return std::nullopt;
}

// Distinct windows yield distinct corners, so every call is a fresh candidate.
void absorb(std::optional<Candidate>& best, u64& best_count, const Candidate& c) {
  if (!best || c.sq < best->sq) {
    best = c;
    best_count = 1;
    return;
  }
  if (c.sq > best->sq) return;
  ++best_count;
  if (c.x < best->x || (c.x == best->x && c.y < best->y)) best = c;
}

ScanOutcome to_outcome(bool complete, u64 cursor, const std::optional<Candidate>& best,
                       u64 best_count, std::size_t n) {
  ScanOutcome out;
  out.complete = complete;
  out.cursor = cursor;
  if (best) out.best = candidate_forest(*best, n);
  out.best_count = best ? best_count : 0;
  return out;
}

}  // namespace

ScanOutcome scan_shard(std::size_t n, const ScanRegion& region, u64 x_begin, u64 x_end) {
  if (n < 1 || region.x_lo < 1 || region.y_lo < 1 || region.x_lo > region.x_hi ||
      region.y_lo > region.y_hi) {
    throw Error("invalid scan region");
  }
  std::optional<Candidate> best;
  u64 best_count = 0;
  for (u64 wx = x_begin; wx <= x_end; ++wx) {
    if (auto c = scan_window(n, region, wx, best)) {
      absorb(best, best_count, *c);
    }
  }
  return to_outcome(true, x_end, best, best_count, n);
}

void merge_scan_outcomes(ScanOutcome& into, const ScanOutcome& from) {
  into.complete = into.complete && from.complete;
  into.cursor = std::max(into.cursor, from.cursor);
  if (!from.best) return;
  if (!into.best) {
    into.best = from.best;
    into.best_count = from.best_count;
    return;
  }
  Natural a = into.best->squared_norm();
  Natural b = from.best->squared_norm();
  const Natural& ax = into.best->corner.at(0);
  const Natural& ay = into.best->corner.at(1);
  const Natural& bx = from.best->corner.at(0);
  const Natural& by = from.best->corner.at(1);
  if (b < a || (b == a && (bx < ax || (bx == ax && by < ay)))) {
    std::uint64_t count = from.best_count + (b == a ? into.best_count : 0);
    into.best = from.best;
    into.best_count = count;
  } else if (b == a) {
    into.best_count += from.best_count;
  }
}

ScanOutcome scan_closest_forest_resumable(std::size_t n, const ScanRegion& region,
                                          const SearchOptions& opts) {
  if (n < 1 || region.x_lo < 1 || region.y_lo < 1 || region.x_lo > region.x_hi ||
      region.y_lo > region.y_hi) {
    throw Error("invalid scan region");
  }
  const u64 wx_last = region.x_hi;

  u64 wx_start = region.x_lo;
  std::optional<Candidate> best;
  u64 best_count = 0;
  if (opts.checkpoint_path) {
    if (auto cp = read_checkpoint(*opts.checkpoint_path);
        cp && cp->campaign == opts.campaign_id) {
      wx_start = to_u64(cp->cursor) + 1;
      best = candidate_of(cp->best);
      if (best) best_count = 1;  // tie counts do not survive a resume
    }
  }

  u64 processed = 0;
  for (u64 wx = wx_start; wx <= wx_last; ++wx) {
    if (auto c = scan_window(n, region, wx, best)) {
      absorb(best, best_count, *c);
    }
    ++processed;
    if (opts.progress_interval && processed % opts.progress_interval == 0) {
      std::fprintf(stderr, "scan %s: window %llu of [%llu, %llu]\n",
                   opts.campaign_id.c_str(), static_cast<unsigned long long>(wx),
                   static_cast<unsigned long long>(wx_start),
                   static_cast<unsigned long long>(wx_last));
    }
    if (opts.checkpoint_path) {
      SearchCheckpoint cp;
      cp.campaign = opts.campaign_id;
      cp.cursor = Natural(static_cast<unsigned long>(wx));
      if (best) cp.best = candidate_forest(*best, n);
      write_checkpoint(*opts.checkpoint_path, cp);
    }
    if (opts.interrupt_after_windows && processed >= opts.interrupt_after_windows &&
        wx < wx_last) {
      return to_outcome(false, wx, best, best_count, n);
    }
  }
  return to_outcome(true, wx_last, best, best_count, n);
}

std::optional<Forest> scan_closest_forest(std::size_t n, const ScanRegion& region,
                                          const SearchOptions& opts) {
  if (opts.threads > 1 && !opts.checkpoint_path && !opts.interrupt_after_windows) {
    const u64 wx_last = region.x_hi;
    const u64 span = wx_last - region.x_lo + 1;
    const u64 chunk = (span + opts.threads - 1) / opts.threads;
    std::vector<std::future<ScanOutcome>> parts;
    for (u64 from = region.x_lo; from <= wx_last; from += chunk) {
      u64 to = std::min(wx_last, from + chunk - 1);
      parts.push_back(std::async(std::launch::async, scan_shard, n, region, from, to));
    }
    ScanOutcome merged;
    merged.complete = true;
    for (auto& p : parts) merge_scan_outcomes(merged, p.get());
    return merged.best;
  }
  return scan_closest_forest_resumable(n, region, opts).best;
}

std::optional<Natural> strongly_composite_run(unsigned n, unsigned k, u64 start,
                                              u64 limit, const SearchOptions& opts) {
  if (n < 1 || k < 1) throw Error("strongly_composite_run requires n, k >= 1");
  if (start < 2) start = 2;
  if (start > limit) return std::nullopt;

  constexpr u64 kSegment = u64{1} << 22;
  std::size_t run = 0;
  u64 segments = 0;
  for (u64 lo = start; lo <= limit; lo += kSegment) {
    const u64 hi = std::min(limit, lo + kSegment - 1);
    auto omega = omega_sieve(lo, hi);
    for (u64 m = lo; m <= hi; ++m) {
      run = (omega[m - lo] >= k) ? run + 1 : 0;
      if (run >= n) return Natural(static_cast<unsigned long>(m - n + 1));
    }
    ++segments;
    if (opts.progress_interval && segments % opts.progress_interval == 0) {
      std::fprintf(stderr, "strong-run: sieved up to %llu of %llu\n",
                   static_cast<unsigned long long>(hi),
                   static_cast<unsigned long long>(limit));
    }
  }
  return std::nullopt;
}

std::optional<Natural> companion_block_search(const std::vector<Natural>& xs, unsigned n,
                                              u64 start, u64 limit,
                                              const SearchOptions& opts) {
  if (xs.empty() || xs.size() > 64) throw Error("companion search needs 1..64 x-values");
  if (n < 1) throw Error("companion search requires n >= 1");
  for (const auto& x : xs) {
    if (x < 2) throw Error("companion x-values must be >= 2");
  }
  if (start < 2) start = 2;
  if (start > limit) return std::nullopt;

  // One bit per x-value; a y hits bit i when some prime of xs[i] divides it.
  std::vector<std::vector<u64>> primes_of(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (const auto& [p, e] : factorize(xs[i]).factors) {
      primes_of[i].push_back(to_u64(p));
      (void)e;
    }
  }
  const u64 full = (xs.size() == 64) ? ~u64{0} : (u64{1} << xs.size()) - 1;

  constexpr u64 kSegment = u64{1} << 22;
  std::size_t run = 0;
  u64 segments = 0;
  std::vector<u64> mask;
  for (u64 lo = start; lo <= limit; lo += kSegment) {
    const u64 hi = std::min(limit, lo + kSegment - 1);
    mask.assign(hi - lo + 1, 0);
    for (std::size_t i = 0; i < primes_of.size(); ++i) {
      const u64 bit = u64{1} << i;
      for (u64 p : primes_of[i]) {
        for (u64 m = ((lo + p - 1) / p) * p; m <= hi; m += p) mask[m - lo] |= bit;
      }
    }
    for (u64 y = lo; y <= hi; ++y) {
      run = (mask[y - lo] == full) ? run + 1 : 0;
      if (run >= n) {
        const u64 y0 = y - n + 1;
        if (n >= 2) {
          // Adjacent integers are coprime, so a y-run of length >= 2 can never
          // contain any x-value it companions; a hit here is a logic error.
          for (const auto& x : xs) {
            if (x >= y0 && x <= y) {
              throw OverlappingRuns("companion block [" + std::to_string(y0) + ", " +
                                    std::to_string(y) + "] intersects the x-run");
            }
          }
        }
        return Natural(static_cast<unsigned long>(y0));
      }
    }
    ++segments;
    if (opts.progress_interval && segments % opts.progress_interval == 0) {
      std::fprintf(stderr, "companion: sieved up to %llu of %llu\n",
                   static_cast<unsigned long long>(hi),
                   static_cast<unsigned long long>(limit));
    }
  }
  return std::nullopt;
}

CampaignResult enumerate_qp_campaign(const QuasiprimePattern& pattern,
                                     const CampaignObserver& observer,
                                     const SearchOptions& opts) {
  PatternEnumerator en(pattern);
  CampaignResult result;
  result.count = 0;
  bool have_min = false;

  EntryMatrix m;
  while (en.next(m)) {
    QuasiprimeMatrix qp = [&] {
      try {
        return QuasiprimeMatrix::checked(m);
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + "\noffending matrix:\n" + matrix_to_text(m));
      }
    }();
    Forest f = [&] {
      try {
        return forest_from_matrix(qp);
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + "\noffending matrix:\n" + matrix_to_text(m));
      }
    }();

    result.count += 1;
    result.x_solutions.insert(f.corner.at(0));
    if (!have_min || f.corner.at(1) < result.min_y_forest.corner.at(1)) {
      result.min_y_forest = f;
      result.argmin_matrix = qp;
      have_min = true;
    }
    if (observer) observer(qp, f);
    if (opts.progress_interval && result.count % opts.progress_interval == 0) {
      std::fprintf(stderr, "campaign %s: %s instantiations\n", opts.campaign_id.c_str(),
                   str(result.count).c_str());
    }
  }
  if (!have_min) throw Error("pattern enumerates no instantiations");
  return result;
}

QuasiprimePattern make_five_run_pattern(const std::vector<Natural>& xs) {
  if (xs.size() != 5) throw Error("five-run pattern needs exactly 5 x-values");
  for (std::size_t i = 1; i < 5; ++i) {
    if (xs[i] != xs[i - 1] + 1) throw Error("x-values must be consecutive");
  }
  if (xs[0] % 2 != 0 || xs[2] % 2 != 0 || xs[4] % 2 != 0 || xs[1] % 3 != 0 ||
      xs[4] % 3 != 0) {
    throw Error("five-run pattern needs x1, x3, x5 even and x2, x5 divisible by 3");
  }

  QuasiprimePattern p;
  p.n = 5;
  p.cells.resize(25);
  for (std::size_t i = 0; i < 5; ++i) {
    QuasiprimePattern::Group g;
    g.name = std::string(1, static_cast<char>('a' + i));
    for (const auto& [q, e] : factorize(xs[i]).factors) {
      if (q != 2 && q != 3) g.candidates.push_back(q);
      (void)e;
    }
    if (g.candidates.empty()) throw Error("x-value " + str(xs[i]) + " has no primes above 3");
    p.groups.push_back(std::move(g));
  }

  for (std::size_t i = 0; i < 5; ++i) {    // row, top first = x offset 1
    for (std::size_t j = 0; j < 5; ++j) {  // column = y offset 1
      auto& cell = p.at(i, j);
      const bool even_hit = (xs[i] % 2 == 0) && (j == 0 || j == 2 || j == 4);
      const bool triple_hit = (xs[i] % 3 == 0) && (j == 1 || j == 4);
      if (i == 4 && j == 4) {
        // The shared 2- and 3-powers both live in this corner.
        cell = {true, Natural(6), 0};
      } else if (even_hit || triple_hit) {
        cell = {true, Natural(1), 0};
      } else {
        cell = {false, Natural(0), i};
      }
    }
  }
  p.validate();
  return p;
}

}  // namespace hf
