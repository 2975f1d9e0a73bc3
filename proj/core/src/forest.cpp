#include "hforest/forest.hpp"

#include <algorithm>
#include <cmath>

#include "hforest/arith.hpp"
#include "hforest/errors.hpp"
#include "hforest/visibility.hpp"

namespace hf {

Natural Forest::squared_norm() const {
  Natural s = 0;
  for (const auto& c : corner) s += c * c;
  return s;
}

double Forest::distance() const { return std::sqrt(to_double(squared_norm())); }

bool verify_hidden(const std::vector<Natural>& corner, std::size_t side) {
  if (corner.empty() || side < 1) throw Error("verify_hidden: empty corner or side < 1");
  for (const auto& c : corner) {
    if (c < 1) throw Error("verify_hidden: corner coordinates must be >= 1");
  }
  const unsigned d = static_cast<unsigned>(corner.size());
  std::vector<std::size_t> offset(d, 0);
  std::vector<Natural> point(d);
  for (;;) {
    for (unsigned a = 0; a < d; ++a) point[a] = corner[a] + Natural(static_cast<unsigned long>(offset[a]));
    if (is_visible(point)) return false;
    // odometer over offsets
    unsigned a = 0;
    while (a < d && ++offset[a] == side) offset[a++] = 0;
    if (a == d) return true;
  }
}

namespace {

Forest finish_forest(std::vector<Natural> corner, std::size_t side, Natural modulus) {
  Forest f;
  f.dimension = static_cast<unsigned>(corner.size());
  f.side = side;
  f.corner = std::move(corner);
  f.modulus = std::move(modulus);
  if (!verify_hidden(f.corner, f.side)) {
    throw Error("constructed block failed the hiddenness check");
  }
  return f;
}

}  // namespace

Forest forest_from_matrix(const QuasiprimeMatrix& q) {
  const EntryMatrix& m = q.mat;
  const std::size_t n = m.n;

  CongruenceSystem xsys, ysys;
  for (std::size_t i = 0; i < n; ++i) {
    Natural r = m.row_product(i);
    // x + (i+1) = 0 (mod R_i)
    Natural residue = (-Natural(static_cast<unsigned long>(i + 1))) % r;
    if (residue < 0) residue += r;
    xsys.push_back({residue, r});
  }
  for (std::size_t j = 0; j < n; ++j) {
    Natural c = m.col_product(j);
    Natural residue = (-Natural(static_cast<unsigned long>(j + 1))) % c;
    if (residue < 0) residue += c;
    ysys.push_back({residue, c});
  }

  CrtSolution xs = crt_solve(xsys);
  CrtSolution ys = crt_solve(ysys);
  Natural x0 = xs.residue;
  Natural y0 = ys.residue;
  if (n == 1 && x0 == y0) {
    // Degenerate X = Y; move Y to the next residue class representative.
    y0 += ys.modulus;
  }

  return finish_forest({x0 + 1, y0 + 1}, n, xs.modulus);
}

PrimeCube canonical_cube(unsigned d) {
  if (d < 1 || d > 20) throw Error("canonical_cube requires 1 <= d <= 20");
  PrimeCube cube;
  cube.dimension = d;
  const std::size_t corners = std::size_t{1} << d;
  if (d == 3) {
    // Recovered from the published face factorizations of the 2x2x2 forest;
    // bits are (x, y, z) positions.
    cube.prime_at = {Natural(11), Natural(13), Natural(19), Natural(17),
                     Natural(2),  Natural(3),  Natural(7),  Natural(5)};
  } else {
    cube.prime_at = first_primes(corners);
  }
  return cube;
}

Forest hypercube_forest(const PrimeCube& cube) {
  const unsigned d = cube.dimension;
  const std::size_t corners = std::size_t{1} << d;
  if (d < 1 || cube.prime_at.size() != corners) {
    throw Error("hypercube assignment must cover all 2^d corners");
  }
  {
    // bijection onto the first 2^d primes
    auto expected = first_primes(corners);
    auto got = cube.prime_at;
    std::sort(got.begin(), got.end());
    if (got != expected) throw Error("cube corners must carry the first 2^d primes");
  }

  std::vector<Natural> corner(d);
  Natural modulus = 1;
  for (unsigned a = 0; a < d; ++a) {
    Natural face0 = 1, face1 = 1;
    for (std::size_t bits = 0; bits < corners; ++bits) {
      ((bits >> a) & 1 ? face1 : face0) *= cube.prime_at[bits];
    }
    CrtSolution s = crt_solve({{(face0 - 1) % face0, face0}, {(face1 - 2) % face1, face1}});
    corner[a] = s.residue + 1;
    modulus *= s.modulus;  // face products use disjoint primes across solves
  }

  Forest f;
  f.dimension = d;
  f.side = 2;
  f.corner = std::move(corner);
  if (d >= 2 && !verify_hidden(f.corner, 2)) {
    throw Error("hypercube block failed the hiddenness check");
  }
  return f;
}

}  // namespace hf
