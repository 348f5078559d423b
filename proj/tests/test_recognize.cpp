#include "test_helpers.hpp"

#include <doctest.h>

using namespace circrob;
using namespace circrob::testing;

TEST_SUITE("recognize") {
  TEST_CASE("J-sets") {
    const auto d4 = counterexample_fixture();
    CHECK(j_set(d4, 0, 1) == std::vector<Index>{0, 1});
    const auto c5 = circle_instance(5, CircleMetric::Arc);
    CHECK(j_set(c5, 0, 2) == std::vector<Index>{0, 1, 2});
    CHECK_THROWS_AS(j_set(c5, 3, 3), std::invalid_argument);
  }

  TEST_CASE("near/far partition") {
    const auto d4 = counterexample_fixture();
    auto p = near_far_partition(d4, 0, 3);
    CHECK(p.near == std::vector<Index>{0, 1});
    CHECK(p.far == std::vector<Index>{2, 3});
    CHECK(p.meet.empty());
    CHECK_THROWS_AS(near_far_partition(d4, 0, 1), std::invalid_argument);

    const auto c5 = circle_instance(5, CircleMetric::Arc);
    p = near_far_partition(c5, 0, 2);
    CHECK(p.near == std::vector<Index>{0, 1, 4});
    CHECK(p.far == std::vector<Index>{1, 2, 3});
    CHECK(p.meet == std::vector<Index>{1});

    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 0;
    p = near_far_partition(Matrix(m), 0, 1);
    CHECK(p.near == std::vector<Index>{0});
    CHECK(p.far == std::vector<Index>{1});
  }

  TEST_CASE("orders agree") {
    const auto d4 = counterexample_fixture();
    const std::vector<Index> n01{0, 1}, f23{2, 3}, f32{3, 2}, n0{0}, f123{1, 2, 3}, bad{1, 2};
    CHECK(orders_agree(d4, n01, f23));
    CHECK(orders_agree(d4, n01, f32));
    CHECK(orders_agree(d4, n0, f123));
    CHECK_THROWS_AS(orders_agree(d4, n01, bad), std::invalid_argument);
    CHECK_THROWS_AS(orders_agree(d4, n01, std::vector<Index>{2}), std::invalid_argument);
  }

  TEST_CASE("construction traces") {
    const auto d4 = counterexample_fixture();
    const auto b = construct_order(d4);
    CHECK(b.order == CircularOrder::identity(4));
    CHECK_FALSE(b.meet_branch);
    REQUIRE(b.alternative);
    CHECK(*b.alternative == CircularOrder::from_sequence({0, 1, 3, 2}));

    const auto c5 = construct_order(circle_instance(5, CircleMetric::Arc));
    CHECK(c5.meet_branch);
    CHECK(c5.order == CircularOrder::identity(5));

    CHECK_FALSE(b.tie_warning);
    CHECK(construct_order(equilateral(5)).tie_warning);

    Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
    CHECK(find_compatible_order(Matrix(one)) == CircularOrder::identity(1));
  }

  TEST_CASE("compatible order sets") {
    const auto d4 = counterexample_fixture();
    const auto sq = compatible_orders(d4, RobinsonClass::StrictQuasi);
    REQUIRE(sq.orders.size() == 2);
    CHECK(sq.orders[0] == CircularOrder::identity(4));
    CHECK(sq.orders[1] == CircularOrder::from_sequence({0, 1, 3, 2}));
    REQUIRE(sq.bipartition);
    CHECK(sq.bipartition->near == std::vector<Index>{0, 1});
    CHECK(sq.bipartition->far == std::vector<Index>{2, 3});
    CHECK(sq.bipartition->delta == 1);

    const auto sc = compatible_orders(d4, RobinsonClass::StrictCircular);
    REQUIRE(sc.orders.size() == 1);
    CHECK(sc.orders[0] == CircularOrder::from_sequence({0, 1, 3, 2}));
    CHECK_FALSE(sc.bipartition);

    CHECK(compatible_orders(equilateral(4), RobinsonClass::StrictQuasi).orders.empty());
    CHECK_THROWS_AS(compatible_orders(d4, RobinsonClass::Quasi), std::invalid_argument);
  }

  TEST_CASE("bipartition criterion") {
    const auto d4 = counterexample_fixture();
    const auto b = bipartition_criterion(d4);
    REQUIRE(b);
    CHECK(b->delta == 1);
    CHECK_FALSE(bipartition_criterion(circle_instance(5, CircleMetric::Arc)));
    Eigen::MatrixXd m(3, 3);
    m << 0, 1, 5, 1, 0, 5, 5, 5, 0;
    CHECK_FALSE(bipartition_criterion(Matrix(m)));
    // singleton block: {0,1,2} tight, 3 far away
    const auto lone = from_rows({{0, 1, 1, 9}, {1, 0, 1, 9}, {1, 1, 0, 9}, {9, 9, 9, 0}});
    CHECK_FALSE(bipartition_criterion(lone));
  }

  TEST_CASE("recognition matches the oracle on small spaces") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
      const Index n = 3 + static_cast<Index>(it % 5);
      const auto d = mixed_small_instance(n, rng);
      const auto cl = oracle::classify(d);
      const auto sq = compatible_orders(d, RobinsonClass::StrictQuasi);
      const auto sc = compatible_orders(d, RobinsonClass::StrictCircular);
      CHECK(as_set(sq.orders) == as_set(cl.strict_quasi));
      CHECK(as_set(sc.orders) == as_set(cl.strict_circular));
      if (!cl.strict_quasi.empty()) {
        CHECK(as_set(cl.strict_quasi).count(find_compatible_order(d)) == 1);
      }
    }
  }

  TEST_CASE("circles are recognized in their natural order") {
    for (Index n : {4, 5, 6, 7, 8, 13, 50, 201, 1000}) {
      for (auto metric : {CircleMetric::Arc, CircleMetric::Chord}) {
        const auto d = circle_instance(n, metric);
        const auto got = compatible_orders(d, RobinsonClass::StrictCircular);
        REQUIRE(got.orders.size() == 1);
        CHECK(got.orders[0] == CircularOrder::identity(n));
      }
    }
  }
}
