#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace circrob;
using namespace circrob::testing;

TEST_SUITE("gen") {
  TEST_CASE("circle metrics") {
    const auto a = circle_instance(5, CircleMetric::Arc);
    for (Index i = 0; i < 5; ++i)
      for (Index j = 0; j < 5; ++j) {
        const Index g = i > j ? i - j : j - i;
        CHECK(a(i, j) == static_cast<double>(std::min(g, 5 - g)));
      }
    const auto c = circle_instance(4, CircleMetric::Chord);
    CHECK(c(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(c(0, 2) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c(0, 1) == c(0, 3));  // symmetric offsets tie exactly
    CHECK(circle_instance(1, CircleMetric::Chord).size() == 1);
  }

  TEST_CASE("custom angles") {
    const std::vector<double> angles{0.0, 1.0, 2.5, 4.0};
    const auto d = circle_instance(4, CircleMetric::Arc, angles);
    CHECK(d(0, 2) == doctest::Approx(2.5));
    CHECK(d(0, 3) == doctest::Approx(2.0 * std::numbers::pi - 4.0));
    CHECK_THROWS_AS(circle_instance(3, CircleMetric::Arc, std::vector<double>{0.0, 2.0, 1.0}),
                    InputError);
    CHECK_THROWS_AS(circle_instance(2, CircleMetric::Arc, std::vector<double>{0.0, 7.0}),
                    InputError);
    CHECK_THROWS_AS(circle_instance(3, CircleMetric::Arc, std::vector<double>{0.0, 1.0}),
                    InputError);
    const auto j = circle_instance(30, CircleMetric::Chord, jittered_angles(30, 0.3, 4));
    CHECK(verify(j, CircularOrder::identity(30)).strict_circular);
    CHECK(is_strictly_unimodal(j, CircularOrder::identity(30)).max_run_lengths ==
          std::vector<Index>(30, 1));
  }

  TEST_CASE("even circles are strictly circular in the natural order") {
    for (Index n = 1; n <= 60; ++n) {
      for (auto metric : {CircleMetric::Arc, CircleMetric::Chord}) {
        const auto r = verify(circle_instance(n, metric), CircularOrder::identity(n));
        CHECK((r.quasi && r.strict_quasi && r.circular && r.strict_circular));
      }
    }
  }

  TEST_CASE("fixture") {
    const auto d = counterexample_fixture();
    CHECK(d(0, 1) == 1);
    CHECK(d(0, 2) == 2);
    CHECK(d(0, 3) == 3);
    CHECK(d(2, 1) == d(1, 2));
    CHECK(verify(d, CircularOrder::identity(4)).strict_quasi);
  }

  TEST_CASE("two cluster instances have two orders") {
    CHECK_THROWS_AS(two_cluster_instance(1, 3, 1), InputError);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Index k = 2 + seed % 4, l = 2 + (seed / 4) % 5;
      const auto d = two_cluster_instance(k, l, seed);
      const auto b = bipartition_criterion(d);
      REQUIRE(b);
      CHECK(b->near.size() + b->far.size() == k + l);
      CHECK(compatible_orders(d, RobinsonClass::StrictQuasi).orders.size() == 2);
      if (k + l <= 7) {
        CHECK(oracle::classify(d).strict_quasi.size() == 2);
      }
    }
    CHECK(two_cluster_instance(3, 4, 17) == two_cluster_instance(3, 4, 17));
  }

  TEST_CASE("perturbation") {
    const auto d4 = counterexample_fixture();
    CHECK(perturb(d4, 0.0, 3) == d4);
    const auto p = perturb(d4, 0.01, 3);
    CHECK(p == perturb(d4, 0.01, 3));
    CHECK_FALSE(p == d4);
    CHECK(verify(p, CircularOrder::identity(4)).strict_quasi);
    CHECK((p.values() - d4.values()).cwiseAbs().maxCoeff() <= 0.01);
    const auto wild = perturb(circle_instance(5, CircleMetric::Arc), 10.0, 8);
    CHECK(wild.values().minCoeff() >= 0.0);
    CHECK_THROWS_AS(perturb(d4, -1.0, 0), InputError);
  }

  TEST_CASE("relabel") {
    const auto d4 = counterexample_fixture();
    const std::vector<Index> perm{2, 0, 3, 1};
    const auto r = relabel(d4, perm);
    CHECK(r(2, 0) == d4(0, 1));
    CHECK(r(1, 3) == d4(3, 2));
  }

  TEST_CASE("generator specs") {
    GeneratorSpec g;
    g.kind = "two-cluster";
    g.n = 9;
    g.seed = 5;
    g.params["k"] = 4;
    CHECK(generate(g).size() == 9);
    g.kind = "fixture";
    g.n = 4;
    CHECK(generate(g) == counterexample_fixture());
    g.kind = "perturbed";
    g.n = 12;
    g.epsilon = 0.001;
    CHECK(generate(g).size() == 12);
    g.kind = "circle-arc";
    g.params["jitter"] = 0.2;
    CHECK(verify(generate(g).with_epsilon(0.0), CircularOrder::identity(12)).quasi);
    g.kind = "spiral";
    CHECK_THROWS_AS(generate(g), InputError);
  }
}
