#pragma once

#include <optional>
#include <vector>

#include "hforest/matrixlab.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// A d-dimensional hidden block: every point of [corner, corner + side - 1]^d
/// has coordinate-gcd > 1. Identified by its origin-closest corner.
struct Forest {
  unsigned dimension = 2;
  std::size_t side = 1;
  std::vector<Natural> corner;
  /// CRT period when the forest was constructed from congruences; absent for
  /// forests found by scanning.
  std::optional<Natural> modulus;

  /// Exact squared Euclidean norm of the corner, for comparisons.
  Natural squared_norm() const;
  /// Euclidean norm of the corner, floating point, for display.
  double distance() const;

  bool operator==(const Forest&) const = default;
};

/// True iff every point of the block has coordinate-gcd > 1. Corner
/// coordinates must be >= 1; dimension is corner.size().
bool verify_hidden(const std::vector<Natural>& corner, std::size_t side);

/// The CRT-algorithm: row products R_i give x + i = 0 (mod R_i), column
/// products C_j give y + j = 0 (mod C_j); the forest corner is
/// (x0 + 1, y0 + 1) for the smallest non-negative solutions. The result is
/// verified hidden and its runs are disjoint (for n = 1 the y-run is moved to
/// the next residue class representative, as X = Y = {2} would otherwise
/// coincide).
Forest forest_from_matrix(const QuasiprimeMatrix& q);

/// d-dimensional prime hypercube: the first 2^d primes assigned bijectively to
/// the corners of a cube, indexed by the corner's bitstring.
struct PrimeCube {
  unsigned dimension = 0;
  /// prime_at[bits] with bit a giving the corner's position along axis a.
  std::vector<Natural> prime_at;
};

/// The 3-D cube recovered from the published face factorizations; for other
/// dimensions, primes in bitstring order. User code may build any bijection.
PrimeCube canonical_cube(unsigned d);

/// For each axis a, the two opposite face products F(a, 0) and F(a, 1) give
/// coord_a + 1 = 0 (mod F(a, 0)) and coord_a + 2 = 0 (mod F(a, 1)); returns
/// the verified 2^d-point forest at (solutions + 1).
Forest hypercube_forest(const PrimeCube& cube);

}  // namespace hf
