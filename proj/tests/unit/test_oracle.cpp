#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lincert/certifier.hpp"
#include "lincert/literal.hpp"
#include "lincert/oracle.hpp"
#include "lincert/rank.hpp"

using namespace lincert;

namespace {

LinearSystem lit(const char* text) { return parse_system(text); }

const u64 kPrime = oracle_primes()[0];

ConditionMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner, u64 p) {
  // Product of rows x inner and inner x cols factors, so the rank is at most
  // `inner`.
  const PrimeField f(p);
  std::uniform_int_distribution<u64> dist(0, p - 1);
  std::vector<u64> left(rows * inner), right(inner * cols);
  for (auto& x : left) x = dist(rng);
  for (auto& x : right) x = dist(rng);
  ConditionMatrix m{rows, cols, p, std::vector<u64>(rows * cols, 0)};
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t c = 0; c < cols; ++c) {
        m.at(r, c) = f.add(m.at(r, c), f.mul(left[r * inner + k], right[k * cols + c]));
      }
    }
  }
  return m;
}

// Coefficients of (x - u)^i (y - v)^j as a vector over the monomial columns
// used by build_matrix (total degree, then decreasing power of x).
std::vector<u64> shifted_monomial(std::size_t degree, std::size_t i, std::size_t j, u64 u, u64 v, const PrimeField& f) {
  auto expand = [&](std::size_t n, u64 root) {
    std::vector<u64> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      for (std::size_t k = step + 1; k > 0; --k) c[k] = f.sub(c[k - 1], f.mul(root, c[k]));
      c[0] = f.neg(f.mul(root, c[0]));
    }
    return c;  // c[k] = coefficient of t^k in (t - root)^n
  };
  const auto cx = expand(i, u);
  const auto cy = expand(j, v);
  std::vector<u64> out;
  for (std::size_t total = 0; total <= degree; ++total) {
    for (std::size_t a = total + 1; a-- > 0;) {
      const std::size_t b = total - a;
      out.push_back(a <= i && b <= j ? f.mul(cx[a], cy[b]) : 0);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("matrix dimensions") {
  const PrimeField f(kPrime);
  auto dims = [&](const char* text) {
    const auto l = lit(text);
    const auto m = build_matrix(l, sample_points(l.size(), kPrime, 0, 0), f);
    return std::pair{m.cols, m.rows};
  };
  CHECK(dims("1(1)") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(dims("6(2^8,1^4)") == std::pair<std::size_t, std::size_t>{28, 28});
  CHECK(dims("3(1^9)") == std::pair<std::size_t, std::size_t>{10, 9});
}

TEST_CASE("duplicate points are rejected") {
  const PrimeField f(kPrime);
  const std::vector<Point> pts{{1, 2}, {1, 2}};
  CHECK_THROWS_AS(build_matrix(lit("3(1^2)"), pts, f), Error);
  try {
    build_matrix(lit("3(1^2)"), pts, f);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicatePoint);
  }
}

TEST_CASE("rows annihilate polynomials vanishing to the right order") {
  const PrimeField f(kPrime);
  const auto l = lit("6(3,2)");
  const std::vector<Point> pts{{5, 9}, {12, 4}};
  const auto m = build_matrix(l, pts, f);
  // Rows 0..5 belong to the triple point (5, 9).
  auto row_dot = [&](std::size_t r, const std::vector<u64>& poly) {
    u64 acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), poly[c]));
    return acc;
  };
  for (std::size_t i = 0; i <= 3; ++i) {
    const std::size_t j = 3 - i;
    const auto poly = shifted_monomial(6, i, j, 5, 9, f);
    for (std::size_t r = 0; r < 6; ++r) CHECK(row_dot(r, poly) == 0);
  }
  // (x - u)^i (y - v)^j with i + j = 2 is detected by exactly the row of order (i, j).
  for (std::size_t i = 0; i <= 2; ++i) {
    const auto poly = shifted_monomial(6, i, 2 - i, 5, 9, f);
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < 6; ++r) nonzero += row_dot(r, poly) != 0;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("rank basics") {
  ConditionMatrix id{3, 3, kPrime, {1, 0, 0, 0, 1, 0, 0, 0, 1}};
  CHECK(rank(id) == 3);
  CHECK(rank_reference(id) == 3);
  ConditionMatrix zero{4, 5, kPrime, std::vector<u64>(20, 0)};
  CHECK(rank(zero) == 0);
  CHECK(rank_reference(zero) == 0);

  const PrimeField f(kPrime);
  const auto cubic = lit("3(1^9)");
  CHECK(rank(build_matrix(cubic, sample_points(9, kPrime, 3, 0), f)) == 9);
}

TEST_CASE("parallel kernel agrees with the serial reference") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 90);
    const std::size_t rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<std::size_t> inner_dist(0, std::min(rows, cols));
    const std::size_t inner = inner_dist(rng);
    const u64 p = oracle_primes()[static_cast<std::size_t>(i) % oracle_primes().size()];
    const auto m = random_matrix(rng, rows, cols, inner, p);
    const std::size_t r = rank(m);
    CHECK(r == rank_reference(m));
    CHECK(r <= std::min(rows, cols));
    CHECK(r <= inner);
  }
  // Large enough to take the parallel path.
  const auto big = random_matrix(rng, 260, 240, 200, kPrime);
  CHECK(rank(big) == rank_reference(big));
  CHECK(rank(big) == 200);

  const PrimeField f(kPrime);
  const auto l = lit("18(6^8,3^4)");
  const auto m = build_matrix(l, sample_points(l.size(), kPrime, 1, 0), f);
  CHECK(rank(m) == rank_reference(m));
}

TEST_CASE("rank is invariant under row shuffles") {
  std::mt19937_64 rng(8);
  const PrimeField f(kPrime);
  const auto l = lit("9(3^8,1^9)");
  const auto m = build_matrix(l, sample_points(l.size(), kPrime, 5, 0), f);
  const std::size_t expected = rank(m);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::size_t> perm(m.rows);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ConditionMatrix shuffled = m;
    for (std::size_t r = 0; r < m.rows; ++r) {
      std::copy_n(m.entries.begin() + static_cast<std::ptrdiff_t>(perm[r] * m.cols), m.cols,
                  shuffled.entries.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
    }
    CHECK(rank(shuffled) == expected);
  }
}

TEST_CASE("an extra simple point raises the rank by at most one") {
  const PrimeField f(kPrime);
  std::mt19937_64 rng(3);
  for (const char* text : {"4(2,1^5)", "5(2^3,1^3)", "6(2^8,1^3)", "3(1^8)", "7(3,2^5,1^10)"}) {
    CAPTURE(text);
    const auto l = lit(text);
    for (int trial = 0; trial < 5; ++trial) {
      auto pts = sample_points(l.size() + 1, kPrime, 100 + static_cast<u64>(trial), trial);
      std::vector<Int> m(l.multiplicities().begin(), l.multiplicities().end());
      const auto base = build_matrix(l, std::span(pts).first(l.size()), f);
      m.push_back(1);
      const auto more = build_matrix(LinearSystem::normalize(l.degree(), m), pts, f);
      const std::size_t r0 = rank(base), r1 = rank(more);
      CHECK(r1 >= r0);
      CHECK(r1 <= r0 + 1);
    }
  }
}

TEST_CASE("oracle_dim examples") {
  const auto a = oracle_dim(lit("6(2^8,1^4)"), 1, 3, 0);
  CHECK(a.certified_empty());
  CHECK(a.best_rank == 28);
  CHECK(a.columns == 28);

  const auto cubic = oracle_dim(lit("3(1^9)"), 1, 3, 0);
  CHECK(cubic.corank == 1);
  CHECK(cubic.likely_dimension() == 0);

  const auto pencil = oracle_dim(lit("3(2,1^5)"), 1, 3, 0);
  CHECK(pencil.corank == 2);
  CHECK(pencil.likely_dimension() == 1);

  CHECK(oracle_dim(lit("2(2,1^5)"), 1, 3, 0).certified_empty());
}

TEST_CASE("oracle runs are reproducible from the seed") {
  const auto a = oracle_dim(lit("9(3^8,1^9)"), 1, 4, 17);
  const auto b = oracle_dim(lit("9(3^8,1^9)"), 1, 4, 17);
  CHECK(a.primes == b.primes);
  CHECK(a.ranks == b.ranks);
  std::vector<u64> sorted = a.primes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(sample_points(20, kPrime, 4, 1) == sample_points(20, kPrime, 4, 1));
  CHECK_FALSE(sample_points(20, kPrime, 4, 1) == sample_points(20, kPrime, 4, 2));
}

TEST_CASE("expected dimension where nothing is claimed") {
  for (const char* text : {"1(1)", "3(1^9)", "4(1^10)", "5(2^3,1^8)"}) {
    const auto l = lit(text);
    const auto s = stats(l);
    REQUIRE(s.virt_dim >= 0);
    for (u64 seed : {0, 1, 2}) {
      const auto r = oracle_dim(l, 1, 3, seed);
      for (std::size_t rank_t : r.ranks) CHECK(static_cast<Int>(r.columns - rank_t) - 1 == s.virt_dim);
    }
  }
}

TEST_CASE("verify_certificate examples") {
  const std::vector<Int> ks123{1, 2, 3};
  const auto special = verify_certificate(certify(lit("6(2^8,1^4)")), ks123, 3, 0);
  CHECK(special.applicable);
  CHECK(special.agrees());
  REQUIRE(special.checks.size() == 3);
  CHECK(special.checks[0].report.best_rank == 28);
  CHECK(special.checks[1].report.best_rank == 91);
  CHECK(special.checks[1].report.rows == 92);
  CHECK(special.checks[2].report.best_rank == 190);
  CHECK(special.checks[2].report.rows == 192);

  const std::vector<Int> k1{1};
  const auto nine = verify_certificate(certify(lit("9(3^8,1^9)")), k1, 3, 0);
  CHECK(nine.agrees());
  CHECK(nine.checks[0].report.best_rank == 55);
  CHECK(nine.checks[0].report.rows == 57);

  const auto cubic = verify_certificate(certify(lit("3(1^9)")), k1, 3, 0);
  CHECK(cubic.agrees());
  CHECK(cubic.checks[0].report.corank == 1);

  const std::vector<Int> k12{1, 2};
  CHECK(verify_certificate(certify(lit("1(1)")), k12, 2, 0).agrees());
  CHECK(verify_certificate(certify(lit("2(2)")), k12, 2, 0).agrees());
  CHECK(verify_certificate(certify(lit("6(2^9)")), k12, 2, 0).agrees());

  const auto na = verify_certificate(certify(lit("2(1^4)")), k1, 1, 0);
  CHECK_FALSE(na.applicable);
  CHECK_FALSE(na.agrees());
}
