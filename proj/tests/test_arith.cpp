#include <doctest.h>

#include <random>

#include "hforest/arith.hpp"
#include "hforest/errors.hpp"

using namespace hf;

TEST_CASE("gcd basics") {
  CHECK(gcd(174, 20) == 2);
  CHECK(gcd(7, 7) == 7);
  CHECK(gcd(1274, 1308) == 2);
  CHECK(gcd(42, 0) == 42);
  CHECK(gcd(0, 42) == 42);
  CHECK_THROWS_AS(gcd(0, 0), Error);
}

TEST_CASE("gcd symmetry and divisibility on random pairs") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 1000; ++i) {
    Natural a(static_cast<unsigned long>(rng() >> 16));
    Natural b(static_cast<unsigned long>(rng() >> 16));
    if (a == 0 && b == 0) continue;
    Natural g = gcd(a, b);
    CHECK(g == gcd(b, a));
    if (a != 0) CHECK(a % g == 0);
    if (b != 0) CHECK(b % g == 0);
  }
}

TEST_CASE("first_primes") {
  CHECK(first_primes(4) == std::vector<Natural>{2, 3, 5, 7});
  CHECK(first_primes(0).empty());
  // product of the first 16 primes is about 3.26e19
  Natural prod = 1;
  for (const auto& p : first_primes(16)) prod *= p;
  CHECK(prod == Natural("32589158477190044730"));
  CHECK(to_double(prod) == doctest::Approx(3.26e19).epsilon(0.01));
}

TEST_CASE("primorial") {
  CHECK(primorial(4) == 210);
  CHECK(primorial(9) == 223092870);
  CHECK(primorial(0) == 1);
  for (std::size_t m = 0; m <= 20; ++m) {
    Natural prod = 1;
    for (const auto& p : first_primes(m)) prod *= p;
    CHECK(primorial(m) == prod);
  }
}

TEST_CASE("prime_pi") {
  CHECK(prime_pi(4) == 2);
  CHECK(prime_pi(1) == 0);
  CHECK(prime_pi(12) == 5);
  CHECK(prime_pi(2) == 1);
  CHECK(prime_pi(100) == 25);
}

TEST_CASE("factorize golden values") {
  auto f = factorize(134043);
  REQUIRE(f.factors.size() == 4);
  CHECK(f.factors[0] == std::pair<Natural, unsigned>{3, 1});
  CHECK(f.factors[1] == std::pair<Natural, unsigned>{7, 1});
  CHECK(f.factors[2] == std::pair<Natural, unsigned>{13, 1});
  CHECK(f.factors[3] == std::pair<Natural, unsigned>{491, 1});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value == 1);

  auto g = factorize(184785887);
  REQUIRE(g.omega() == 5);
  CHECK(g.factors[0].first == 11);
  CHECK(g.factors[1].first == 13);
  CHECK(g.factors[2].first == 19);
  CHECK(g.factors[3].first == 23);
  CHECK(g.factors[4].first == 2957);

  CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorize reconstructs its input and orders primes") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 300; ++i) {
    Natural n(static_cast<unsigned long>((rng() % 1000000000) + 1));
    auto f = factorize(n);
    Natural prod = 1;
    Natural prev = 1;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > prev);
      prev = p;
      CHECK(e >= 1);
      for (unsigned k = 0; k < e; ++k) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("gcd agrees with per-prime minimum of exponents") {
  std::mt19937_64 rng(31415);
  for (int i = 0; i < 100; ++i) {
    Natural a(static_cast<unsigned long>((rng() % 100000000) + 1));
    Natural b(static_cast<unsigned long>((rng() % 100000000) + 1));
    Natural expected = 1;
    for (const auto& [p, ea] : factorize(a).factors) {
      unsigned eb = 0;
      Natural t = b;
      while (t % p == 0) {
        t /= p;
        ++eb;
      }
      unsigned e = ea < eb ? ea : eb;
      for (unsigned k = 0; k < e; ++k) expected *= p;
    }
    CHECK(gcd(a, b) == expected);
  }
}

TEST_CASE("omega_sieve") {
  CHECK(omega_sieve(14, 15) == std::vector<std::uint8_t>{2, 2});
  CHECK(omega_sieve(2, 2) == std::vector<std::uint8_t>{1});
  CHECK(omega_sieve(134043, 134046) == std::vector<std::uint8_t>{4, 4, 4, 4});
  CHECK_THROWS_AS(omega_sieve(1, 5), Error);
  CHECK_THROWS_AS(omega_sieve(10, 5), Error);
  CHECK_THROWS_AS(omega_sieve(2, (std::uint64_t{1} << 28)), Error);
}

TEST_CASE("omega_sieve matches factorize on random sub-ranges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    std::uint64_t lo = (rng() % 10000000) + 2;
    std::uint64_t hi = lo + (rng() % 10000);
    auto omega = omega_sieve(lo, hi);
    for (std::uint64_t m = lo; m <= hi; m += 97) {
      CHECK(omega[m - lo] == factorize(Natural(static_cast<unsigned long>(m))).omega());
    }
  }
}

TEST_CASE("crt_solve golden") {
  CrtSolution s = crt_solve({{5, 6}, {33, 35}});
  CHECK(s.residue == 173);
  CHECK(s.modulus == 210);

  s = crt_solve({{0, 1}});
  CHECK(s.residue == 0);
  CHECK(s.modulus == 1);

  CHECK_THROWS_AS(crt_solve({{3, 4}, {1, 4}}), InconsistentSystem);
  try {
    crt_solve({{3, 4}, {1, 4}});
  } catch (const InconsistentSystem& e) {
    CHECK(e.first == 0);
    CHECK(e.second == 1);
  }
}

TEST_CASE("crt_solve validates inputs") {
  CHECK_THROWS_AS(crt_solve({}), Error);
  CHECK_THROWS_AS(crt_solve({{5, 3}}), Error);   // residue >= modulus
  CHECK_THROWS_AS(crt_solve({{0, 0}}), Error);   // modulus < 1
}

TEST_CASE("crt_solve satisfies every equation, random systems") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    CongruenceSystem sys;
    // build a guaranteed-consistent system from a hidden target value
    std::uint64_t target = rng() % 1000000;
    std::size_t count = 1 + rng() % 5;
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t m = 1 + rng() % 1000;
      sys.push_back({Natural(static_cast<unsigned long>(target % m)),
                     Natural(static_cast<unsigned long>(m))});
    }
    CrtSolution s = crt_solve(sys);
    CHECK(s.residue < s.modulus);
    for (const auto& eq : sys) {
      CHECK(s.residue % eq.modulus == eq.residue);
    }
  }
}

TEST_CASE("crt_solve modulus is the product for coprime moduli") {
  CrtSolution s = crt_solve({{1, 4}, {2, 9}, {3, 25}, {4, 7}});
  CHECK(s.modulus == Natural(4) * 9 * 25 * 7);
  // non-coprime moduli merge to the lcm
  s = crt_solve({{2, 4}, {4, 6}});
  CHECK(s.modulus == 12);
  CHECK(s.residue == 10);
}

TEST_CASE("to_u64 narrows and rejects overflow") {
  CHECK(to_u64(Natural("4294967296")) == 4294967296ULL);
  CHECK_THROWS_AS(to_u64(Natural("32589158477190044730")), std::overflow_error);
}
