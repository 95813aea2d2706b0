#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "practical/analysis.hpp"
#include "practical/classify.hpp"

using namespace practical;

TEST_CASE("interval counts for small n") {
  const auto reports = interval_counts(2, 4, true);
  REQUIRE(reports.size() == 3);

  CHECK(reports[0].n == 2);
  CHECK(reports[0].count_open == 2);
  CHECK(*reports[0].members == std::vector<u64>{6, 8});

  CHECK(reports[1].n == 3);
  CHECK(reports[1].count_open == 1);
  CHECK(*reports[1].members == std::vector<u64>{12});

  CHECK(reports[2].n == 4);
  CHECK(reports[2].count_open == 3);
  CHECK(*reports[2].members == std::vector<u64>{18, 20, 24});
}

TEST_CASE("interval counts validate their domain") {
  CHECK_THROWS_AS(interval_counts(0, 4, false), std::invalid_argument);
  CHECK_THROWS_AS(interval_counts(5, 4, false), std::invalid_argument);
  CHECK_THROWS_AS(interval_counts(1, u64(1) << 33, false),
                  std::invalid_argument);
}

TEST_CASE("interval counts agree with the oracle below 1000") {
  const auto reports = interval_counts(1, 31, false);
  for (const auto& r : reports) {
    u64 expect = 0;
    for (u64 m = r.n * r.n + 1; m < (r.n + 1) * (r.n + 1); ++m)
      if (oracle_is_practical(m)) ++expect;
    REQUIRE(r.count_open == expect);
  }
}

TEST_CASE("empirical threshold probes") {
  CHECK(empirical_threshold(1, 100) == 1);
  CHECK(empirical_threshold(2, 1000) == 4);
  // recorded after the first verified run at n_max = 5000; the interval
  // (225, 256) holds only 228, 234, 240, 252
  CHECK(empirical_threshold(5, 5000) == 16);
}

TEST_CASE("empirical threshold is monotone in k") {
  const std::vector<u64> ks{1, 2, 3, 4, 5, 6, 7, 8};
  const auto ns = empirical_thresholds(ks, 2000);
  for (std::size_t i = 1; i < ns.size(); ++i) REQUIRE(ns[i - 1] <= ns[i]);
}

TEST_CASE("constant estimates at small x") {
  const std::vector<u64> xs{2, 10};
  const auto es = estimate_constant(xs);
  CHECK(es[0].p_of_x == 2);
  CHECK(es[0].c_of_x == doctest::Approx(std::log(2.0)));
  CHECK(es[1].p_of_x == 5);
  CHECK(es[1].c_of_x == doctest::Approx(5.0 * std::log(10.0) / 10.0));
}

TEST_CASE("chebyshev band check") {
  const std::vector<u64> xs{10, 10000};
  const auto checks = chebyshev_band_check(xs);
  CHECK(checks[0].pass);  // c(10) ~ 1.1513
  CHECK(checks[1].pass);
  const auto degenerate = chebyshev_band_check(xs, 2.0, 3.0);
  CHECK_FALSE(degenerate[0].pass);
}

TEST_CASE("short interval A-count matches pointwise classification") {
  const auto r = short_interval_a_count(1000000, 0.4872, 9.557, true);
  CHECK(r.width == 1000);
  u64 expect = 0;
  for (u64 n = 1000000 - r.width; n <= 1000000; ++n)
    if (n % 2 == 0 && in_set_a(factorize(n)).ok) ++expect;
  CHECK(r.a_count == expect);
  CHECK(r.satisfied);
}

TEST_CASE("theta-width interval at x = 10^4") {
  const auto r = short_interval_a_count(10000, 0.4872, 9.557, false);
  CHECK(r.bound < 1.0);
  CHECK(r.satisfied == (r.a_count >= 1));
}

TEST_CASE("sqrt window dominates the theta window") {
  for (u64 x : {u64(10000), u64(100000), u64(1000000)}) {
    const auto narrow = short_interval_a_count(x, 0.4872, 9.557, false);
    const auto wide = short_interval_a_count(x, 0.4872, 9.557, true);
    REQUIRE(wide.width >= narrow.width);
    REQUIRE(wide.a_count >= narrow.a_count);
  }
}

TEST_CASE("proof step counts at small n") {
  const auto r5 = proof_step_counts(5);
  CHECK(r5.endpoints_practical == 2);  // 30 and 36, not 25
  CHECK(r5.endpoint_ok);
  CHECK(r5.count_ok);

  const auto r2 = proof_step_counts(2);
  CHECK(r2.endpoints_practical == 2);  // 4 and 6, not 9

  const auto r1 = proof_step_counts(1);
  CHECK(r1.endpoints_practical == 3);  // 1, 2, 4; excluded from the lemma
  CHECK(r1.endpoint_ok);
}

TEST_CASE("endpoint lemma holds for 2 <= n <= 200") {
  for (u64 n = 2; n <= 200; ++n) {
    const auto r = proof_step_counts(n);
    REQUIRE(r.endpoints_practical <= 2);
    REQUIRE(r.practical_open + 2 >= r.a_closed_total);
  }
}

TEST_CASE("square closure check finds no violations") {
  CHECK(square_closure_check(1000).empty());
  CHECK(in_set_a(factorize(144)).ok);  // 12 in A, so 144 must be
  CHECK(in_set_a(factorize(1)).ok);
}

TEST_CASE("goldbach decompositions") {
  const auto bitmap = practical_bitmap(1000);
  const auto w2 = goldbach_decompose(2, bitmap);
  REQUIRE(w2.has_value());
  CHECK(w2->a == 1);
  CHECK(w2->b == 1);

  const auto w4 = goldbach_decompose(4, bitmap);
  REQUIRE(w4.has_value());
  CHECK(w4->a == 2);
  CHECK(w4->b == 2);

  const auto w1000 = goldbach_decompose(1000, bitmap);
  REQUIRE(w1000.has_value());
  CHECK(w1000->a + w1000->b == 1000);
  CHECK(oracle_is_practical(w1000->a));
  CHECK(oracle_is_practical(w1000->b));
  // minimality: no practical below a pairs with a practical complement
  for (u64 a = 1; a < w1000->a; ++a)
    CHECK_FALSE(bool(bitmap[a] && bitmap[1000 - a]));
}

TEST_CASE("goldbach verification over ranges") {
  CHECK_FALSE(verify_goldbach_range(2).first_violation.has_value());
  const auto r = verify_goldbach_range(10000);
  CHECK_FALSE(r.first_violation.has_value());
  CHECK(r.checked == 5000);
  CHECK(oracle_is_practical(r.max_min_a));
}

TEST_CASE("practical triples") {
  const auto t10 = practical_triples(10);
  CHECK(t10 == std::vector<u64>{4, 6});
  const auto t20 = practical_triples(20);
  CHECK(t20 == std::vector<u64>{4, 6, 18});
  CHECK(practical_triples(4) == std::vector<u64>{4});
}

TEST_CASE("wu's theorem holds for 4 <= n <= 500") {
  for (const auto& r : interval_counts(4, 500, false))
    REQUIRE(r.count_open >= 2);
}
