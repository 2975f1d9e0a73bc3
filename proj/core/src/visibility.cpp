#include "hforest/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <thread>

#include "hforest/errors.hpp"

namespace hf {

bool is_visible(const std::vector<Natural>& point) {
  if (point.empty()) throw Error("empty lattice point");
  Natural g = 0;
  for (const auto& c : point) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return true;
  }
  if (g == 0) throw Error("the origin is excluded from visibility statements");
  return g == 1;
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Visible points with x in [x_from, x_to], all coordinates in [1, N].
// coords beyond the first two are handled by recursion on the trailing gcd.
std::uint64_t count_rows_2d(std::uint64_t N, std::uint64_t x_from, std::uint64_t x_to) {
  std::uint64_t count = 0;
  for (std::uint64_t x = x_from; x <= x_to; ++x) {
    for (std::uint64_t y = 1; y <= N; ++y) {
      if (gcd_u64(x, y) == 1) ++count;
    }
  }
  return count;
}

std::uint64_t pow_u64(std::uint64_t n, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= n;
  return r;
}

// Visible-point count over the remaining coordinates given the gcd so far.
// Once the running gcd hits 1 every completion is visible.
std::uint64_t count_suffix(std::uint64_t N, unsigned remaining, std::uint64_t g) {
  if (g == 1) return pow_u64(N, remaining);
  if (remaining == 0) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t v = 1; v <= N; ++v) {
    count += count_suffix(N, remaining - 1, gcd_u64(g, v));
  }
  return count;
}

std::uint64_t count_rows_nd(std::uint64_t N, unsigned d, std::uint64_t x_from,
                            std::uint64_t x_to) {
  std::uint64_t count = 0;
  for (std::uint64_t x = x_from; x <= x_to; ++x) {
    count += count_suffix(N, d - 1, x);
  }
  return count;
}

}  // namespace

double zeta_inverse(unsigned s) {
  if (s < 2) throw Error("zeta_inverse requires s >= 2");
  const std::uint64_t K = 1'000'000;
  double sum = 0.0;
  for (std::uint64_t k = K; k >= 1; --k) {
    sum += std::pow(static_cast<double>(k), -static_cast<double>(s));
  }
  // Euler-Maclaurin tail: integral term plus half the next summand.
  double dk = static_cast<double>(K);
  sum += std::pow(dk, 1.0 - static_cast<double>(s)) / (s - 1.0) -
         0.5 * std::pow(dk, -static_cast<double>(s));
  return 1.0 / sum;
}

DensityReport count_visible_in_box(std::uint64_t N, unsigned d, unsigned threads) {
  if (N < 1 || d < 2) throw Error("count_visible_in_box requires N >= 1, d >= 2");
  if (threads < 1) threads = 1;

  auto count_range = [&](std::uint64_t from, std::uint64_t to) {
    return d == 2 ? count_rows_2d(N, from, to) : count_rows_nd(N, d, from, to);
  };

  std::uint64_t visible = 0;
  if (threads == 1 || N < 64) {
    visible = count_range(1, N);
  } else {
    // Contiguous first-coordinate ranges; exact integer counts, so the
    // partition cannot change the sum.
    std::vector<std::future<std::uint64_t>> parts;
    std::uint64_t chunk = (N + threads - 1) / threads;
    for (std::uint64_t from = 1; from <= N; from += chunk) {
      std::uint64_t to = std::min(N, from + chunk - 1);
      parts.push_back(std::async(std::launch::async, count_range, from, to));
    }
    for (auto& p : parts) visible += p.get();
  }

  DensityReport r;
  r.box_side = N;
  r.dimension = d;
  r.visible_count = Natural(visible);
  Natural total = 1;
  for (unsigned i = 0; i < d; ++i) total *= Natural(N);
  r.total_count = total;
  r.reference = zeta_inverse(d);
  return r;
}

Natural ggcd(unsigned b, const Natural& r, const Natural& s) {
  if (b < 1) throw Error("ggcd requires b >= 1");
  if (r < 1 || s < 1) throw Error("ggcd requires r, s >= 1");
  if (b == 1) return gcd(r, s);
  // Any prime of k divides both r and s, so factoring gcd(r, s) suffices:
  // k = prod p^min(v_p(r), floor(v_p(s) / b)).
  Natural g = gcd(r, s);
  Natural k = 1;
  for (const auto& [p, e] : factorize(g).factors) {
    unsigned vr = 0, vs = 0;
    Natural t = r;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
      t /= p;
      ++vr;
    }
    t = s;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
      t /= p;
      ++vs;
    }
    unsigned e_k = std::min(vr, vs / b);
    for (unsigned i = 0; i < e_k; ++i) k *= p;
    (void)e;
  }
  return k;
}

bool is_b_visible(unsigned b, const Natural& r, const Natural& s) {
  return ggcd(b, r, s) == 1;
}

Natural curve_visible_stride(const FactoredNatural& denominator, unsigned n) {
  if (n < 1) throw Error("curve_visible_stride requires n >= 1");
  if (denominator.value < 1) throw Error("denominator must be >= 1");
  Natural t = 1;
  for (const auto& [p, j] : denominator.factors) {
    unsigned e = (j + n - 1) / n;  // ceil(j / n)
    for (unsigned i = 0; i < e; ++i) t *= p;
  }
  return t;
}

}  // namespace hf
