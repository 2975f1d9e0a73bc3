#include <doctest.h>

#include <random>
#include <set>

#include "hforest/errors.hpp"
#include "hforest/matrixlab.hpp"

using namespace hf;

namespace {

EntryMatrix mat(const std::string& text) { return matrix_from_text(text); }

EntryMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned long max_entry) {
  EntryMatrix m(n);
  for (auto& e : m.entries) e = Natural(static_cast<unsigned long>((rng() % max_entry) + 1));
  return m;
}

}  // namespace

TEST_CASE("prime_matrix") {
  CHECK(prime_matrix(2) == mat("2\n2 3\n5 7"));
  CHECK(prime_matrix(1) == mat("1\n2"));
  CHECK(prime_matrix(3) == mat("3\n2 3 5\n7 11 13\n17 19 23"));
  CHECK_THROWS_AS(prime_matrix(0), Error);
}

TEST_CASE("rotations golden") {
  CHECK(rotate_ccw(mat("2\n2 3\n5 7")) == mat("2\n3 7\n2 5"));
  CHECK(rotate_ccw(mat("1\n9")) == mat("1\n9"));
  CHECK(rotate_ccw(prime_matrix(3)) == mat("3\n5 13 23\n3 11 19\n2 7 17"));
  CHECK(rotate_cw(mat("2\n7 3\n2 5")) == mat("2\n2 7\n5 3"));
}

TEST_CASE("rotations are mutually inverse") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng() % 6;
    EntryMatrix m = random_matrix(rng, n, 1000);
    CHECK(rotate_cw(rotate_ccw(m)) == m);
    CHECK(rotate_ccw(rotate_cw(m)) == m);
  }
}

TEST_CASE("qp_from_matrix golden: closest 3x3") {
  auto qp = qp_from_matrix(mat("3\n2 7 2\n3 17 5\n4 11 2"));
  CHECK(qp.mat == mat("3\n1 7 1\n3 17 5\n4 11 1"));
}

TEST_CASE("qp_from_matrix golden: 4x4 companion matrix") {
  auto qp = qp_from_matrix(mat("4\n3 491 13 21\n31 2 23 4\n5 17 19 83\n9 2 11 6"));
  CHECK(qp.mat == mat("4\n1 491 13 7\n31 1 23 4\n5 17 19 83\n9 1 11 1"));
}

TEST_CASE("qp_from_matrix golden: 5x5 with composite corner") {
  // The shared 2^2 must land in entry (3,1) (the first of the two maximal
  // valuations) and the corner 6 keeps only its 3.
  auto qp = qp_from_matrix(mat("5\n2 37 2 13 2\n31 3 5 269 3\n4 109 2 7 4\n"
                               "67 17 41 23 11\n2 3 2 89 6"));
  CHECK(qp.mat == mat("5\n1 37 1 13 1\n31 1 5 269 1\n4 109 1 7 1\n"
                      "67 17 41 23 11\n1 1 1 89 3"));
}

TEST_CASE("qp_from_matrix leaves prime matrices unchanged") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(qp_from_matrix(prime_matrix(n)).mat == prime_matrix(n));
  }
}

TEST_CASE("qp_from_matrix degenerate row/column") {
  CHECK_THROWS_AS(qp_from_matrix(mat("2\n2 2\n2 2")), DegenerateRowOrColumn);
  CHECK_THROWS_AS(qp_from_matrix(mat("2\n1 1\n5 7")), DegenerateRowOrColumn);
}

TEST_CASE("qp_from_matrix concentrates each prime's power in one entry") {
  std::mt19937_64 rng(5150);
  int exercised = 0;
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + rng() % 3;
    EntryMatrix m = random_matrix(rng, n, 60);
    QuasiprimeMatrix qp;
    try {
      qp = qp_from_matrix(m);
    } catch (const DegenerateRowOrColumn&) {
      continue;  // the draw collapsed a row or column
    }
    ++exercised;
    std::set<Natural> seen;
    for (std::size_t c = 0; c < qp.mat.entries.size(); ++c) {
      const Natural& out = qp.mat.entries[c];
      CHECK(m.entries[c] % out == 0);  // entrywise, output divides input
      for (const auto& [p, e] : factorize(out).factors) {
        CHECK(seen.insert(p).second);
        (void)e;
      }
    }
  }
  CHECK(exercised > 20);
}

TEST_CASE("qp_from_matrix preserves each prime's maximal valuation") {
  std::mt19937_64 rng(606);
  auto max_val = [](const EntryMatrix& m, const Natural& p) {
    unsigned best = 0;
    for (const auto& e : m.entries) {
      unsigned v = 0;
      Natural t = e;
      while (t % p == 0) {
        t /= p;
        ++v;
      }
      best = std::max(best, v);
    }
    return best;
  };
  for (int i = 0; i < 40; ++i) {
    EntryMatrix m = random_matrix(rng, 3, 50);
    try {
      QuasiprimeMatrix qp = qp_from_matrix(m);
      for (const auto& e : m.entries) {
        for (const auto& [p, ev] : factorize(e).factors) {
          CHECK(max_val(qp.mat, p) == max_val(m, p));
          (void)ev;
        }
      }
    } catch (const DegenerateRowOrColumn&) {
      // fine: the draw collapsed a row or column
    }
  }
}

TEST_CASE("QuasiprimeMatrix::checked rejects shared primes and degenerate lines") {
  CHECK_THROWS_AS(QuasiprimeMatrix::checked(mat("2\n2 3\n5 14")), Error);
  CHECK_THROWS_AS(QuasiprimeMatrix::checked(mat("2\n1 3\n1 7")), DegenerateRowOrColumn);
  CHECK_NOTHROW(QuasiprimeMatrix::checked(mat("2\n4 3\n5 7")));
}

TEST_CASE("optimal_gcd_matrix golden 4x4") {
  auto [matrix, distinct] = optimal_gcd_matrix(4);
  CHECK(matrix == mat("4\n3 29 31 3\n2 19 2 23\n7 11 13 17\n6 5 2 3"));
  CHECK(distinct == 11);
}

TEST_CASE("optimal_gcd_matrix distinct-prime totals for n = 2..5") {
  CHECK(optimal_gcd_matrix(2).distinct_prime_count == 4);
  CHECK(optimal_gcd_matrix(3).distinct_prime_count == 6);
  CHECK(optimal_gcd_matrix(4).distinct_prime_count == 11);
  CHECK(optimal_gcd_matrix(5).distinct_prime_count == 15);
  CHECK_THROWS_AS(optimal_gcd_matrix(1), Error);
}

TEST_CASE("optimal_gcd_matrix corner and reuse structure") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto [matrix, distinct] = optimal_gcd_matrix(n);
    const std::size_t k = std::max<std::size_t>(1, prime_pi(n - 1));
    CHECK(matrix.at(n - 1, 0) == primorial(k));
    // every reused prime appears exactly at offsets divisible by it
    auto reused = first_primes(k);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const Natural& cell = matrix.at(n - 1 - j, i);
        for (const auto& q : reused) {
          bool divides = cell % q == 0;
          bool at_offset = (i % to_u64(q) == 0) && (j % to_u64(q) == 0);
          CHECK(divides == at_offset);
        }
      }
    }
    (void)distinct;
  }
}

TEST_CASE("gcd_grid_of golden") {
  GcdGrid g2 = gcd_grid_of({174, 175}, {20, 21});
  CHECK(g2.at(0, 0) == 2);
  CHECK(g2.at(0, 1) == 3);
  CHECK(g2.at(1, 0) == 5);
  CHECK(g2.at(1, 1) == 7);
  CHECK(matrix_from_grid(g2) == rotate_ccw(prime_matrix(2)));

  GcdGrid g1 = gcd_grid_of({2}, {2});
  CHECK(g1.at(0, 0) == 2);

  GcdGrid g3 = gcd_grid_of({1274, 1275, 1276}, {1308, 1309, 1310});
  CHECK(matrix_from_grid(g3) == rotate_ccw(mat("3\n2 7 2\n3 17 5\n4 11 2")));

  CHECK_THROWS_AS(gcd_grid_of({2, 3}, {4}), Error);
  CHECK_THROWS_AS(gcd_grid_of({0}, {4}), Error);
}

TEST_CASE("grid/matrix conversions are inverse rotations") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = 1 + rng() % 5;
    EntryMatrix m = random_matrix(rng, n, 100);
    CHECK(matrix_from_grid(grid_from_matrix(m)) == m);
    GcdGrid g = grid_from_matrix(m);
    GcdGrid again = grid_from_matrix(matrix_from_grid(g));
    CHECK(g.g == again.g);
  }
}

TEST_CASE("pattern enumeration counts") {
  QuasiprimePattern p;
  p.n = 2;
  p.groups.push_back({"a", {2, 3, 5, 7}, 0});
  p.cells = {{false, 0, 0}, {false, 0, 0}, {true, 11, 0}, {true, 13, 0}};
  p.validate();
  CHECK(p.instantiation_count() == 12);

  PatternEnumerator en(p);
  std::set<std::string> seen;
  EntryMatrix m;
  while (en.next(m)) seen.insert(matrix_to_text(m));
  CHECK(seen.size() == 12);
}

TEST_CASE("all-fixed pattern yields exactly one matrix") {
  QuasiprimePattern p;
  p.n = 2;
  p.cells = {{true, 2, 0}, {true, 3, 0}, {true, 5, 0}, {true, 7, 0}};
  p.validate();
  CHECK(p.instantiation_count() == 1);
  PatternEnumerator en(p);
  EntryMatrix m;
  CHECK(en.next(m));
  CHECK(m == prime_matrix(2));
  CHECK_FALSE(en.next(m));
}

TEST_CASE("pattern enumeration is deterministic and seekable") {
  QuasiprimePattern p;
  p.n = 2;
  p.groups.push_back({"a", {2, 3, 5}, 0});
  p.groups.push_back({"b", {7, 11}, 0});
  p.cells = {{false, 0, 0}, {false, 0, 0}, {false, 0, 1}, {true, 13, 0}};
  p.validate();
  CHECK(p.instantiation_count() == 12);  // P(3,2) * P(2,1)

  std::vector<std::string> all;
  {
    PatternEnumerator en(p);
    EntryMatrix m;
    while (en.next(m)) all.push_back(matrix_to_text(m));
  }
  CHECK(all.size() == 12);

  PatternEnumerator en(p);
  en.seek(7);
  CHECK(en.cursor() == 7);
  EntryMatrix m;
  CHECK(en.next(m));
  CHECK(matrix_to_text(m) == all[7]);
  CHECK_THROWS_AS(en.seek(13), Error);
}

TEST_CASE("pattern validation rejects over-subscribed groups") {
  QuasiprimePattern p;
  p.n = 2;
  p.groups.push_back({"a", {2, 3}, 0});
  p.cells = {{false, 0, 0}, {false, 0, 0}, {false, 0, 0}, {true, 5, 0}};
  CHECK_THROWS_AS(p.validate(), Error);
}

TEST_CASE("matrix text round-trip and errors") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    EntryMatrix m = random_matrix(rng, 1 + rng() % 5, 1000000);
    CHECK(matrix_from_text(matrix_to_text(m)) == m);
  }
  CHECK_THROWS_AS(matrix_from_text("0\n"), Error);
  CHECK_THROWS_AS(matrix_from_text("2\n1 2 3"), Error);
  CHECK_THROWS_AS(matrix_from_text("2\n1 2\n3 x"), Error);
}
