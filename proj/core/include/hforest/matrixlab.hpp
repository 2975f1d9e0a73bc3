#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hforest/arith.hpp"
#include "hforest/natural.hpp"

namespace hf {

/// Square grid of positive integers, stored row-major with row 0 the top row
/// as printed.
struct EntryMatrix {
  std::size_t n = 0;
  std::vector<Natural> entries;

  EntryMatrix() = default;
  explicit EntryMatrix(std::size_t side)
      : n(side), entries(side * side, Natural(1)) {}

  Natural& at(std::size_t row, std::size_t col) { return entries[row * n + col]; }
  const Natural& at(std::size_t row, std::size_t col) const {
    return entries[row * n + col];
  }

  Natural row_product(std::size_t row) const;
  Natural col_product(std::size_t col) const;

  bool operator==(const EntryMatrix&) const = default;
};

/// EntryMatrix whose entries concentrate every prime's full power in at most
/// one cell, so row products are pairwise coprime and column products are
/// pairwise coprime, and every row/column product exceeds 1. Construct via
/// qp_from_matrix or checked().
struct QuasiprimeMatrix {
  EntryMatrix mat;

  /// Validates the quasiprime invariants; throws Error / DegenerateRowOrColumn.
  static QuasiprimeMatrix checked(EntryMatrix m);
};

/// n x n matrix filled row-wise with the first n^2 primes.
EntryMatrix prime_matrix(std::size_t n);

/// 90 degree counter-clockwise rotation: (M * AD_n)^T with AD_n the
/// anti-diagonal permutation.
EntryMatrix rotate_ccw(const EntryMatrix& m);

/// 90 degree clockwise rotation, inverse of rotate_ccw: M = Gcd^T * AD_n.
EntryMatrix rotate_cw(const EntryMatrix& m);

/// Reduce a matrix to quasiprime form: for each prime appearing anywhere, the
/// entry holding its maximal power keeps that power and every other entry has
/// its component of that prime divided out (composite entries keep their other
/// factors). Ties on maximal power go to the entry with the largest value,
/// then first in row-major order. Throws DegenerateRowOrColumn if some row or
/// column product collapses to 1.
QuasiprimeMatrix qp_from_matrix(const EntryMatrix& m);

struct OptimalGcdMatrix {
  EntryMatrix matrix;
  std::size_t distinct_prime_count = 0;
};

/// Minimal-prime-count gcd template: the bottom-left corner holds the product
/// of the first k_n primes, cells whose row and column offsets from that
/// corner are both multiples of q_t hold the product of such q_t, and the
/// remaining cells take distinct fresh primes row-major from the bottom row
/// upward. k_n counts the primes that can recur inside an n-wide block,
/// max(1, pi(n-1)).
OptimalGcdMatrix optimal_gcd_matrix(std::size_t n);

/// Grid of gcd(xs[i], ys[j]) indexed (x-offset, y-offset), bottom-left first.
struct GcdGrid {
  std::size_t n = 0;
  std::vector<Natural> g;

  explicit GcdGrid(std::size_t side) : n(side), g(side * side) {}
  Natural& at(std::size_t i, std::size_t j) { return g[i * n + j]; }
  const Natural& at(std::size_t i, std::size_t j) const { return g[i * n + j]; }
};

GcdGrid gcd_grid_of(const std::vector<Natural>& xs, const std::vector<Natural>& ys);

/// Grid -> printed gcd-matrix (top row = highest y-offset) and back. These are
/// exactly the two 90 degree rotations.
EntryMatrix matrix_from_grid(const GcdGrid& grid);
GcdGrid grid_from_matrix(const EntryMatrix& m);

/// Matrix template with fixed cells and per-group distinct-choice slots.
struct QuasiprimePattern {
  struct Cell {
    bool fixed = true;
    Natural value;       // when fixed
    std::size_t group = 0;  // when slot
  };
  struct Group {
    std::string name;
    std::vector<Natural> candidates;
    std::size_t slot_count = 0;  // filled by validate()
  };

  std::size_t n = 0;
  std::vector<Cell> cells;  // row-major, printed orientation
  std::vector<Group> groups;

  Cell& at(std::size_t row, std::size_t col) { return cells[row * n + col]; }
  const Cell& at(std::size_t row, std::size_t col) const { return cells[row * n + col]; }

  /// Counts slots per group and checks slot_count <= candidate count.
  void validate();

  /// prod over groups of P(|candidates|, |slots|).
  Natural instantiation_count() const;
};

/// Deterministic enumeration of every assignment of distinct candidates to
/// each group's slots, lexicographic in (group order, candidate order).
/// Independent enumerators may run concurrently; a single enumerator is not
/// shareable mid-iteration.
class PatternEnumerator {
 public:
  explicit PatternEnumerator(QuasiprimePattern pattern);

  /// Produces the next instantiation; returns false when exhausted.
  bool next(EntryMatrix& out);

  /// Index of the instantiation that next() will produce, starting at 0.
  std::uint64_t cursor() const { return cursor_; }

  /// Skip ahead so that next() produces instantiation `index`.
  void seek(std::uint64_t index);

 private:
  void materialize(std::uint64_t index, EntryMatrix& out) const;

  QuasiprimePattern pattern_;
  // Per group, every k-permutation of candidate indices in lexicographic
  // order; an instantiation index is a mixed-radix number over these.
  std::vector<std::vector<std::vector<std::size_t>>> kperms_;
  std::uint64_t cursor_ = 0;
  std::uint64_t total_ = 0;
};

/// Plain text serialization: first line n, then n lines of n space-separated
/// decimal integers.
std::string matrix_to_text(const EntryMatrix& m);
EntryMatrix matrix_from_text(const std::string& text);

}  // namespace hf
