#include <algorithm>
#include <set>

#include "doctest.h"
#include "privlabel/coverfree.hpp"
#include "privlabel/random_stream.hpp"

using namespace privlabel;

namespace {

// Naive evaluation from the base-q digits, independent of the Horner code.
std::set<std::uint64_t> naive_set(std::uint64_t index, std::uint64_t d, std::uint64_t q) {
  std::vector<std::uint64_t> coef(d + 1);
  for (auto& c : coef) {
    c = index % q;
    index /= q;
  }
  std::set<std::uint64_t> s;
  for (std::uint64_t a = 0; a < q; ++a) {
    std::uint64_t y = 0, pw = 1;
    for (std::uint64_t j = 0; j <= d; ++j) {
      y = (y + coef[j] * pw) % q;
      pw = pw * a % q;
    }
    s.insert(a * q + y);
  }
  return s;
}

}  // namespace

TEST_CASE("primes") {
  CHECK(smallest_prime_geq(6) == 7);
  CHECK(smallest_prime_geq(1) == 2);
  CHECK(smallest_prime_geq(13) == 13);
  CHECK(smallest_prime_geq(90) == 97);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(1000003));
}

TEST_CASE("prime field") {
  const PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  for (std::uint64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inverse(a)) == 1);
  CHECK(f.pow(3, 6) == 1);
  CHECK_THROWS_AS(f.inverse(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
}

TEST_CASE("polynomial family shape") {
  const PolyFamily fam(2, 3);
  CHECK(fam.family_size() == 27);
  CHECK(fam.ground_size() == 9);
  for (std::uint64_t i = 0; i < 27; ++i) CHECK(fam.set(i).size() == 3);
  const auto zero = fam.set(0);
  CHECK(zero == std::vector<std::uint64_t>{0 * 3 + 0, 1 * 3 + 0, 2 * 3 + 0});
  CHECK_THROWS_AS(PolyFamily(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(PolyFamily(1, 6), std::invalid_argument);
}

TEST_CASE("sets match naive evaluation; lines meet in at most one point") {
  const PolyFamily fam(1, 5);
  std::vector<std::set<std::uint64_t>> sets;
  for (std::uint64_t i = 0; i < fam.family_size(); ++i) {
    const auto s = fam.set(i);
    const std::set<std::uint64_t> as_set(s.begin(), s.end());
    CHECK(as_set == naive_set(i, 1, 5));
    for (auto x : s) CHECK(fam.contains(i, x));
    sets.push_back(as_set);
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      std::vector<std::uint64_t> common;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                            std::back_inserter(common));
      CHECK(common.size() <= 1);
    }
  }
}

TEST_CASE("residuals") {
  const PolyFamily fam(2, 7);
  CHECK(residual_elements(fam, 5, {}, 0).size() == 7);
  CHECK_THROWS(residual_elements(fam, 5, std::vector<std::uint64_t>{5}, 0));

  RandomStream rng(11, 0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::uint64_t s0 = rng.uniform(fam.family_size()), s1, s2;
    do s1 = rng.uniform(fam.family_size());
    while (s1 == s0);
    do s2 = rng.uniform(fam.family_size());
    while (s2 == s0 || s2 == s1);
    const std::vector<std::uint64_t> others = {s1, s2};
    const auto res = residual_elements(fam, s0, others, 0);
    REQUIRE(res.size() >= 7 - 2 * 2);
    // Oracle: recompute by naive set membership.
    const auto a = naive_set(s1, 2, 7), b = naive_set(s2, 2, 7);
    std::size_t expected = 0;
    for (auto x : naive_set(s0, 2, 7)) expected += !a.count(x) && !b.count(x);
    REQUIRE(res.size() == expected);
  }

  const PolyFamily fam5(2, 5);
  CHECK(fam5.cover_free_degree(1) == 4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::set<std::uint64_t> picked;
    const std::uint64_t s0 = rng.uniform(fam5.family_size());
    picked.insert(s0);
    while (picked.size() < 5) picked.insert(rng.uniform(fam5.family_size()));
    picked.erase(s0);
    const std::vector<std::uint64_t> others(picked.begin(), picked.end());
    REQUIRE_FALSE(residual_elements(fam5, s0, others, 1).empty());
  }
}

TEST_CASE("cover-free verification") {
  SUBCASE("exhaustive d=1 q=5 delta=4") {
    const auto v = verify_cover_free(PolyFamily(1, 5), 4, 0, Exhaustive{});
    CHECK(v.cover_free);
    CHECK(v.tuples_checked == binomial_saturating(24, 4) * 25);
  }
  SUBCASE("sampled d=2 q=5 delta=2") {
    const auto v = verify_cover_free(PolyFamily(2, 5), 2, 0, Sampled{100000, 3});
    CHECK(v.cover_free);
    CHECK(v.tuples_checked == 100000);
  }
  SUBCASE("delta = q lines cover a line") {
    const auto v = verify_cover_free(PolyFamily(1, 5), 5, 0, Sampled{200000, 1});
    CHECK_FALSE(v.cover_free);
    REQUIRE(v.counterexample.has_value());
    // Re-check the counterexample by hand.
    const auto& t = *v.counterexample;
    for (auto x : naive_set(t[0], 1, 5)) {
      bool covered = false;
      for (std::size_t j = 1; j < t.size(); ++j) covered = covered || naive_set(t[j], 1, 5).count(x);
      CHECK(covered);
    }
  }
  SUBCASE("budget refusal") {
    CHECK_THROWS_AS(verify_cover_free(PolyFamily(2, 7), 3, 0, Exhaustive{1000}), std::length_error);
  }
  CHECK(PolyFamily(1, 5).cover_free_degree() == 4);
  CHECK(PolyFamily(2, 7).cover_free_degree() == 3);
}

TEST_CASE("binomials") {
  CHECK(binomial_saturating(24, 4) == 10626);
  CHECK(binomial_saturating(5, 0) == 1);
  CHECK(binomial_saturating(3, 5) == 0);
  CHECK(binomial_saturating(200, 100) == UINT64_MAX);
}
