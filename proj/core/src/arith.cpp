#include "hforest/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace hf {

std::uint64_t to_u64(const Natural& n) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw std::overflow_error("value does not fit in 64 bits: " + str(n));
  }
  return n.get_ui();
}

Natural gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0) {
    throw Error("gcd(0, 0) is undefined");
  }
  Natural r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

// Memoized prime table; grown on demand, safe for concurrent readers because
// growth happens under the lock and readers copy what they need out.
std::mutex g_prime_mutex;
std::vector<std::uint64_t> g_primes = {2, 3, 5, 7, 11, 13};
std::uint64_t g_sieved_to = 13;

void sieve_to(std::uint64_t limit) {
  if (limit <= g_sieved_to) return;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  g_primes.clear();
  for (std::uint64_t v = 2; v <= limit; ++v) {
    if (!composite[v]) g_primes.push_back(v);
  }
  g_sieved_to = limit;
}

// Grow the table until it holds at least m primes.
void ensure_count(std::size_t m) {
  while (g_primes.size() < m) {
    // p_m < m (ln m + ln ln m) for m >= 6.
    double dm = static_cast<double>(std::max<std::size_t>(m, 6));
    auto bound = static_cast<std::uint64_t>(dm * (std::log(dm) + std::log(std::log(dm))) + 16);
    sieve_to(std::max(bound, g_sieved_to * 2));
  }
}

}  // namespace

std::vector<Natural> first_primes(std::size_t m) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  ensure_count(m);
  std::vector<Natural> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.emplace_back(g_primes[i]);
  return out;
}

Natural primorial(std::size_t m) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  ensure_count(m);
  Natural p = 1;
  for (std::size_t i = 0; i < m; ++i) p *= Natural(g_primes[i]);
  return p;
}

std::size_t prime_pi(std::uint64_t x) {
  if (x < 2) return 0;
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  sieve_to(std::max<std::uint64_t>(x, g_sieved_to));
  auto it = std::upper_bound(g_primes.begin(), g_primes.end(), x);
  return static_cast<std::size_t>(it - g_primes.begin());
}

FactoredNatural factorize(const Natural& n) {
  if (n == 0) throw Error("factorize(0) is undefined");
  FactoredNatural out;
  out.value = n;
  Natural rest = n;

  auto strip = [&](const Natural& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };

  strip(2);
  strip(3);
  strip(5);
  // 2*3*5 wheel: increments that skip multiples of 2, 3, 5 from base 7.
  static const unsigned wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  Natural d = 7;
  std::size_t w = 0;
  while (rest > 1 && d * d <= rest) {
    strip(d);
    d += wheel[w];
    w = (w + 1) % 8;
  }
  if (rest > 1) out.factors.emplace_back(rest, 1);
  return out;
}

std::vector<std::uint8_t> omega_sieve(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2 || lo > hi) throw Error("omega_sieve requires 2 <= lo <= hi");
  const std::uint64_t width = hi - lo + 1;
  if (width > (std::uint64_t{1} << 27)) {
    throw Error("omega_sieve range exceeds memory budget");
  }

  std::vector<std::uint8_t> omega(width, 0);
  std::vector<std::uint64_t> residual(width);
  for (std::uint64_t i = 0; i < width; ++i) residual[i] = lo + i;

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  std::vector<std::uint64_t> small_primes;
  {
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    sieve_to(std::max<std::uint64_t>(root, g_sieved_to));
    for (std::uint64_t p : g_primes) {
      if (p > root) break;
      small_primes.push_back(p);
    }
  }

  for (std::uint64_t p : small_primes) {
    std::uint64_t first = ((lo + p - 1) / p) * p;
    for (std::uint64_t m = first; m <= hi; m += p) {
      std::uint64_t i = m - lo;
      ++omega[i];
      while (residual[i] % p == 0) residual[i] /= p;
    }
  }
  for (std::uint64_t i = 0; i < width; ++i) {
    if (residual[i] > 1) ++omega[i];  // one prime factor above sqrt(hi)
  }
  return omega;
}

CrtSolution crt_solve(const CongruenceSystem& system) {
  if (system.empty()) throw Error("crt_solve requires at least one equation");
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& eq = system[i];
    if (eq.modulus < 1) throw Error("modulus must be >= 1");
    if (eq.residue < 0 || eq.residue >= eq.modulus) {
      throw Error("residue out of range in equation " + std::to_string(i));
    }
  }

  Natural r = system[0].residue;
  Natural m = system[0].modulus;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const Natural& a = system[i].residue;
    const Natural& n = system[i].modulus;

    Natural g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(),
               n.get_mpz_t());
    Natural diff = a - r;
    if (diff % g != 0) {
      // The merged state conflicts with equation i; by pairwise consistency,
      // some earlier equation conflicts with it directly. Report that pair.
      for (std::size_t j = 0; j < i; ++j) {
        Natural pg = gcd(system[j].modulus, n);
        if ((system[j].residue - a) % pg != 0) throw InconsistentSystem(j, i);
      }
      throw InconsistentSystem(0, i);  // unreachable for valid merges
    }
    Natural lcm = m / g * n;
    // r' = r + m * ((diff / g) * s mod (n / g))
    Natural step = (diff / g * s) % (n / g);
    r = (r + m * step) % lcm;
    if (r < 0) r += lcm;
    m = lcm;
  }
  return CrtSolution{r, m};
}

}  // namespace hf
