#include "hforest/matrixlab.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hforest/errors.hpp"

namespace hf {

Natural EntryMatrix::row_product(std::size_t row) const {
  Natural p = 1;
  for (std::size_t c = 0; c < n; ++c) p *= at(row, c);
  return p;
}

Natural EntryMatrix::col_product(std::size_t col) const {
  Natural p = 1;
  for (std::size_t r = 0; r < n; ++r) p *= at(r, col);
  return p;
}

EntryMatrix prime_matrix(std::size_t n) {
  if (n < 1) throw Error("prime_matrix requires n >= 1");
  auto primes = first_primes(n * n);
  EntryMatrix m(n);
  for (std::size_t i = 0; i < n * n; ++i) m.entries[i] = primes[i];
  return m;
}

EntryMatrix rotate_ccw(const EntryMatrix& m) {
  EntryMatrix out(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      out.at(r, c) = m.at(c, m.n - 1 - r);
    }
  }
  return out;
}

EntryMatrix rotate_cw(const EntryMatrix& m) {
  EntryMatrix out(m.n);
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      out.at(r, c) = m.at(m.n - 1 - c, r);
    }
  }
  return out;
}

QuasiprimeMatrix QuasiprimeMatrix::checked(EntryMatrix m) {
  std::map<Natural, std::size_t> prime_cells;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    const Natural& e = m.entries[i];
    if (e < 1) throw Error("matrix entries must be >= 1");
    for (const auto& [p, exp] : factorize(e).factors) {
      auto [it, inserted] = prime_cells.emplace(p, i);
      if (!inserted && it->second != i) {
        throw Error("not quasiprime: prime " + str(p) + " occupies two entries");
      }
      (void)exp;
    }
  }
  for (std::size_t r = 0; r < m.n; ++r) {
    if (m.row_product(r) == 1) {
      throw DegenerateRowOrColumn("row " + std::to_string(r + 1) + " has product 1");
    }
  }
  for (std::size_t c = 0; c < m.n; ++c) {
    if (m.col_product(c) == 1) {
      throw DegenerateRowOrColumn("column " + std::to_string(c + 1) + " has product 1");
    }
  }
  return QuasiprimeMatrix{std::move(m)};
}

QuasiprimeMatrix qp_from_matrix(const EntryMatrix& m) {
  struct Occurrence {
    std::size_t cell;
    unsigned valuation;
  };
  std::map<Natural, std::vector<Occurrence>> primes;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    if (m.entries[i] < 1) throw Error("matrix entries must be >= 1");
    for (const auto& [p, e] : factorize(m.entries[i]).factors) {
      primes[p].push_back({i, e});
    }
  }

  EntryMatrix out = m;
  for (const auto& [p, occs] : primes) {
    // Keeper: maximal valuation, then largest entry value, then first in
    // row-major order. The value rule keeps shared powers inside composite
    // corner entries, matching the published reductions.
    std::size_t keep = 0;
    for (std::size_t k = 1; k < occs.size(); ++k) {
      const auto &a = occs[k], &b = occs[keep];
      if (a.valuation > b.valuation ||
          (a.valuation == b.valuation && m.entries[a.cell] > m.entries[b.cell])) {
        keep = k;
      }
    }
    for (std::size_t k = 0; k < occs.size(); ++k) {
      if (k == keep) continue;
      Natural pe = 1;
      for (unsigned i = 0; i < occs[k].valuation; ++i) pe *= p;
      out.entries[occs[k].cell] /= pe;
    }
  }
  return QuasiprimeMatrix::checked(std::move(out));
}

OptimalGcdMatrix optimal_gcd_matrix(std::size_t n) {
  if (n < 2) throw Error("optimal_gcd_matrix requires n >= 2");
  // Primes that recur inside an n-wide block are those with a nonzero
  // multiple among the offsets 1..n-1, i.e. primes <= n-1 (and always 2).
  const std::size_t k = std::max<std::size_t>(1, prime_pi(n - 1));
  auto reused = first_primes(k);
  auto next_fresh = [&](std::size_t idx) {
    // fresh primes are the smallest primes above q_k
    return first_primes(k + 1 + idx).back();
  };

  EntryMatrix out(n);
  std::size_t fresh_used = 0;
  std::size_t distinct = k;
  // Walk offsets bottom row upward so fresh primes land row-major from the
  // bottom, as in the published 4x4 assignment.
  for (std::size_t j = 0; j < n; ++j) {    // y-offset (row from bottom)
    for (std::size_t i = 0; i < n; ++i) {  // x-offset (column)
      Natural cell = 1;
      bool any = false;
      for (const auto& q : reused) {
        auto qv = to_u64(q);
        if (i % qv == 0 && j % qv == 0) {
          cell *= q;
          any = true;
        }
      }
      if (!any) {
        cell = next_fresh(fresh_used++);
        ++distinct;
      }
      out.at(n - 1 - j, i) = cell;
    }
  }
  return OptimalGcdMatrix{std::move(out), distinct};
}

GcdGrid gcd_grid_of(const std::vector<Natural>& xs, const std::vector<Natural>& ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw Error("gcd_grid_of requires non-empty runs of equal length");
  }
  GcdGrid grid(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (xs[i] == 0 || ys[j] == 0) throw Error("gcd grid entries require nonzero coordinates");
      grid.at(i, j) = gcd(xs[i], ys[j]);
    }
  }
  return grid;
}

EntryMatrix matrix_from_grid(const GcdGrid& grid) {
  EntryMatrix m(grid.n);
  for (std::size_t r = 0; r < grid.n; ++r) {
    for (std::size_t c = 0; c < grid.n; ++c) {
      m.at(r, c) = grid.at(c, grid.n - 1 - r);
    }
  }
  return m;
}

GcdGrid grid_from_matrix(const EntryMatrix& m) {
  GcdGrid grid(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      grid.at(i, j) = m.at(m.n - 1 - j, i);
    }
  }
  return grid;
}

void QuasiprimePattern::validate() {
  if (cells.size() != n * n) throw Error("pattern cell count mismatch");
  for (auto& g : groups) g.slot_count = 0;
  for (const auto& cell : cells) {
    if (cell.fixed) {
      if (cell.value < 1) throw Error("fixed pattern cells must be >= 1");
    } else {
      if (cell.group >= groups.size()) throw Error("pattern slot names unknown group");
      ++groups[cell.group].slot_count;
    }
  }
  for (const auto& g : groups) {
    if (g.slot_count > g.candidates.size()) {
      throw Error("group " + g.name + " has more slots than candidates");
    }
  }
}

Natural QuasiprimePattern::instantiation_count() const {
  Natural total = 1;
  for (const auto& g : groups) {
    // P(|candidates|, slots)
    for (std::size_t i = 0; i < g.slot_count; ++i) {
      total *= Natural(static_cast<unsigned long>(g.candidates.size() - i));
    }
  }
  return total;
}

namespace {

// All k-permutations of {0..m-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_permutations(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      self(self);
      cur.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

PatternEnumerator::PatternEnumerator(QuasiprimePattern pattern)
    : pattern_(std::move(pattern)) {
  pattern_.validate();
  total_ = 1;
  for (const auto& g : pattern_.groups) {
    kperms_.push_back(k_permutations(g.candidates.size(), g.slot_count));
    total_ *= kperms_.back().size();
  }
}

void PatternEnumerator::materialize(std::uint64_t index, EntryMatrix& out) const {
  // Mixed-radix decode, last group fastest.
  std::vector<std::size_t> which(pattern_.groups.size());
  for (std::size_t g = pattern_.groups.size(); g-- > 0;) {
    which[g] = index % kperms_[g].size();
    index /= kperms_[g].size();
  }

  out = EntryMatrix(pattern_.n);
  std::vector<std::size_t> slot_cursor(pattern_.groups.size(), 0);
  for (std::size_t i = 0; i < pattern_.cells.size(); ++i) {
    const auto& cell = pattern_.cells[i];
    if (cell.fixed) {
      out.entries[i] = cell.value;
    } else {
      const auto& perm = kperms_[cell.group][which[cell.group]];
      std::size_t cand = perm[slot_cursor[cell.group]++];
      out.entries[i] = pattern_.groups[cell.group].candidates[cand];
    }
  }
}

bool PatternEnumerator::next(EntryMatrix& out) {
  if (cursor_ >= total_) return false;
  materialize(cursor_, out);
  ++cursor_;
  return true;
}

void PatternEnumerator::seek(std::uint64_t index) {
  if (index > total_) throw Error("seek past end of enumeration");
  cursor_ = index;
}

std::string matrix_to_text(const EntryMatrix& m) {
  std::ostringstream os;
  os << m.n << '\n';
  for (std::size_t r = 0; r < m.n; ++r) {
    for (std::size_t c = 0; c < m.n; ++c) {
      if (c) os << ' ';
      os << str(m.at(r, c));
    }
    os << '\n';
  }
  return os.str();
}

EntryMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t n = 0;
  if (!(is >> n) || n < 1) throw Error("matrix text: bad side length");
  EntryMatrix m(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    std::string tok;
    if (!(is >> tok)) throw Error("matrix text: expected " + std::to_string(n * n) + " entries");
    try {
      m.entries[i] = Natural(tok);
    } catch (const std::invalid_argument&) {
      throw Error("matrix text: bad integer '" + tok + "'");
    }
  }
  return m;
}

}  // namespace hf
