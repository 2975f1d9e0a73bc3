#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hforest/errors.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// gcd(a, b) with gcd(a, 0) = a. Both arguments zero is an error: the origin
/// is excluded from every visibility statement.
Natural gcd(const Natural& a, const Natural& b);

/// The m smallest primes, in increasing order.
std::vector<Natural> first_primes(std::size_t m);

/// Product of the first m primes; primorial(0) = 1.
Natural primorial(std::size_t m);

/// Number of primes <= x.
std::size_t prime_pi(std::uint64_t x);

struct FactoredNatural {
  Natural value;
  /// (prime, exponent) pairs, primes strictly increasing, exponents >= 1.
  /// Empty for value 1.
  std::vector<std::pair<Natural, unsigned>> factors;

  std::size_t omega() const { return factors.size(); }
};

/// Complete prime factorization by trial division over a 2*3*5 wheel.
/// Deterministic; intended for desk-scale inputs (roughly <= 10^16).
FactoredNatural factorize(const Natural& n);

/// Count of distinct prime divisors for every integer in [lo, hi], computed
/// by segmented sieving. Requires 2 <= lo <= hi and hi - lo within the memory
/// budget (2^27 values).
std::vector<std::uint8_t> omega_sieve(std::uint64_t lo, std::uint64_t hi);

struct Congruence {
  Natural residue;  // < modulus
  Natural modulus;  // >= 1
};

using CongruenceSystem = std::vector<Congruence>;

struct CrtSolution {
  Natural residue;  // smallest non-negative representative
  Natural modulus;  // lcm of the input moduli
};

/// General CRT: moduli need not be pairwise coprime. Equations are merged
/// pairwise via extended gcd; x = a (m), x = b (n) are consistent iff
/// gcd(m, n) divides a - b. Throws InconsistentSystem naming the first
/// conflicting pair.
CrtSolution crt_solve(const CongruenceSystem& system);

}  // namespace hf
