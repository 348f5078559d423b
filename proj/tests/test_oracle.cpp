#include "test_helpers.hpp"

#include <doctest.h>

using namespace circrob;
using namespace circrob::testing;

TEST_SUITE("oracle") {
  TEST_CASE("enumeration counts") {
    CHECK(oracle::enumerate_circular_orders(1).size() == 1);
    CHECK(oracle::enumerate_circular_orders(2).size() == 1);
    CHECK(oracle::enumerate_circular_orders(3).size() == 1);
    const auto four = oracle::enumerate_circular_orders(4);
    REQUIRE(four.size() == 3);
    CHECK(four[0] == CircularOrder::from_sequence({0, 1, 2, 3}));
    CHECK(four[1] == CircularOrder::from_sequence({0, 1, 3, 2}));
    CHECK(four[2] == CircularOrder::from_sequence({0, 2, 1, 3}));
    CHECK(oracle::enumerate_circular_orders(5).size() == 12);
    CHECK(oracle::enumerate_circular_orders(8).size() == 2520);
    for (const auto& o : oracle::enumerate_circular_orders(6)) CHECK(o.is_canonical());
    CHECK_THROWS_AS(oracle::enumerate_circular_orders(11), InputError);
    CHECK_THROWS_AS(oracle::enumerate_circular_orders(0), InputError);
  }

  TEST_CASE("fixture by definition") {
    const auto d4 = counterexample_fixture();
    const auto natural = CircularOrder::identity(4);
    const auto good = CircularOrder::from_sequence({0, 1, 3, 2});
    CHECK_FALSE(oracle::pre_circular_by_quadruples(d4, natural, true));
    CHECK(oracle::pre_circular_by_quadruples(d4, good, true));
    CHECK(oracle::circular_robinson_by_arcs(d4, good, true));
    CHECK_FALSE(oracle::circular_robinson_by_arcs(d4, natural, false));

    const auto c = oracle::classify(d4);
    CHECK(c.strict_quasi == std::vector<CircularOrder>{natural, good});
    CHECK(c.strict_circular == std::vector<CircularOrder>{good});
  }

  TEST_CASE("three points are always pre-circular") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 20; ++it) {
      const auto d = random_continuous(3, rng);
      CHECK(oracle::pre_circular_by_quadruples(d, CircularOrder::identity(3), false));
      CHECK(oracle::circular_robinson_by_arcs(d, CircularOrder::identity(3), false));
    }
  }

  TEST_CASE("equilateral and circle classifications") {
    const auto e = oracle::classify(equilateral(4));
    CHECK(e.strict_quasi.empty());
    CHECK(e.strict_circular.empty());
    CHECK(e.strict_pre_circular.empty());
    CHECK(e.quasi.size() == 3);
    CHECK(e.circular.size() == 3);
    CHECK(e.pre_circular.size() == 3);

    const auto c5 = oracle::classify(circle_instance(5, CircleMetric::Arc));
    CHECK(c5.strict_circular == std::vector<CircularOrder>{CircularOrder::identity(5)});
    CHECK_THROWS_AS(oracle::classify(circle_instance(9, CircleMetric::Arc)), InputError);
  }

  TEST_CASE("set inclusions") {
    std::mt19937_64 rng(2);
    auto subset = [](const auto& a, const auto& b) {
      const auto sa = as_set(a), sb = as_set(b);
      return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    };
    for (int it = 0; it < 150; ++it) {
      const auto d = mixed_small_instance(4 + static_cast<Index>(it % 3), rng);
      const auto c = oracle::classify(d);
      CHECK(subset(c.strict_pre_circular, c.pre_circular));
      CHECK(subset(c.strict_quasi, c.quasi));
      CHECK(subset(c.strict_circular, c.circular));
      CHECK(subset(c.circular, c.quasi));
      CHECK(subset(c.strict_circular, c.strict_quasi));
      CHECK(as_set(c.pre_circular) == as_set(c.circular));
      CHECK(as_set(c.strict_pre_circular) == as_set(c.strict_circular));
    }
  }

  TEST_CASE("six point chains on pre-circular orders") {
    // d(u,w) >= min{d(y,y'), d(z,z')} for every chain u<y<y'<w<z<z', u != w
    std::mt19937_64 rng(9);
    int certified = 0;
    for (int it = 0; it < 100; ++it) {
      const Index n = 5;
      const auto d = mixed_small_instance(n, rng);
      for (const auto& o : oracle::enumerate_circular_orders(n)) {
        if (!oracle::pre_circular_by_quadruples(d, o, false)) continue;
        ++certified;
        for (Index u = 0; u < n; ++u)
          for (Index y = 0; y < n; ++y)
            for (Index yp = 0; yp < n; ++yp)
              for (Index w = 0; w < n; ++w) {
                if (u == w) continue;
                for (Index z = 0; z < n; ++z)
                  for (Index zp = 0; zp < n; ++zp) {
                    const Index pts[6] = {u, y, yp, w, z, zp};
                    if (!chain_holds(o, pts)) continue;
                    CHECK(d(u, w) >= std::min(d(y, yp), d(z, zp)));
                  }
              }
      }
    }
    CHECK(certified > 30);
  }
}
