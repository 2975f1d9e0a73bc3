#pragma once

#include <cstdint>
#include <vector>

#include "hforest/arith.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// A lattice point (x, y) is visible from the origin iff gcd(x, y) = 1;
/// in d dimensions, iff the gcd over all coordinates is 1.
/// Throws on the all-zero point.
bool is_visible(const std::vector<Natural>& point);

struct DensityReport {
  std::uint64_t box_side = 0;
  unsigned dimension = 0;
  Natural visible_count;
  Natural total_count;  // box_side^dimension
  double reference = 0.0;  // 1/zeta(dimension) by truncated series
  double ratio() const { return to_double(visible_count) / to_double(total_count); }
  double abs_error() const {
    double e = ratio() - reference;
    return e < 0 ? -e : e;
  }
};

/// Exact count of visible points in the box [1, N]^d (first-orthant interior;
/// the axes are excluded by construction). Counting is per-point gcd, no
/// closed-form shortcuts; the thread count never changes the result.
DensityReport count_visible_in_box(std::uint64_t N, unsigned d, unsigned threads = 1);

/// 1/zeta(s) by direct summation of 10^6 terms plus an Euler-Maclaurin tail.
double zeta_inverse(unsigned s);

/// Generalized gcd: max { k : k | r and k^b | s }. ggcd(1, r, s) = gcd(r, s).
/// Requires r, s >= 1.
Natural ggcd(unsigned b, const Natural& r, const Natural& s);

/// (r, s) is b-visible along curves y = a x^b iff ggcd_b(r, s) = 1.
bool is_b_visible(unsigned b, const Natural& r, const Natural& s);

/// Stride of lattice points on f(x) = (a/b) x^n with gcd(a, rad(b)) = 1:
/// t = prod p_i^ceil(j_i / n) over the factorization of the denominator b.
/// Every lattice point on f has x a multiple of t, and (t, f(t)) is the
/// visible one.
Natural curve_visible_stride(const FactoredNatural& denominator, unsigned n);

}  // namespace hf
