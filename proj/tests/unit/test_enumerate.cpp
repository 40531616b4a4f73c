#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lincert/enumerate.hpp"
#include "lincert/literal.hpp"
#include "test_oracles.hpp"

using namespace lincert;

namespace {

bool contains(const std::vector<LinearSystem>& v, const char* text) {
  return std::find(v.begin(), v.end(), parse_system(text)) != v.end();
}

}  // namespace

TEST_CASE("forced members") {
  CHECK(contains(enumerate_h_systems(1), "1(1)"));
  CHECK(enumerate_h_systems(1).size() == 1);
  CHECK(contains(enumerate_h_systems(3), "3(1^9)"));
  const auto four = enumerate_h_systems(4);
  CHECK(contains(four, "4(1^16)"));
  CHECK(contains(four, "4(2,1^12)"));
  CHECK_FALSE(contains(four, "4(2^2,1^8)"));
  CHECK_FALSE(contains(four, "2(1^4)"));
  CHECK_FALSE(contains(enumerate_h_systems(6), "2(2)"));
}

TEST_CASE("agrees with the per-value brute force") {
  for (Int d = 1; d <= 13; ++d) {
    std::vector<std::vector<Int>> brute;
    testing::brute_force_degree(d, brute);
    std::vector<LinearSystem> expected;
    for (auto& m : brute) expected.push_back(LinearSystem::normalize(d, m));
    std::sort(expected.begin(), expected.end());

    std::vector<LinearSystem> got;
    for (const auto& l : enumerate_h_systems(d)) {
      if (l.degree() == d) got.push_back(l);
    }
    CAPTURE(d);
    CHECK(got == expected);
  }
}

TEST_CASE("ordered and duplicate-free") {
  const auto corpus = enumerate_h_systems(12);
  CHECK(std::is_sorted(corpus.begin(), corpus.end()));
  CHECK(std::adjacent_find(corpus.begin(), corpus.end()) == corpus.end());
  for (const auto& l : corpus) {
    CHECK(hypothesis_h(l).holds);
    CHECK(primitive_part(l).t == 1);
  }
}

TEST_CASE("corpus size regression") {
  // Frozen from an independent enumeration (sum-of-squares partitions of d^2).
  CHECK(enumerate_h_systems(10).size() == 611);
}
