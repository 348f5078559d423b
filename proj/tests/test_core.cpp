#include "test_helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace circrob;
using namespace circrob::testing;

TEST_SUITE("core") {
  TEST_CASE("matrix validation names the offending cell") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1, 1, 1;
    try {
      Matrix d(m);
      FAIL("accepted a nonzero diagonal");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("nonzero diagonal at (1,1)") != std::string::npos);
      CHECK(e.row() == 1);
      CHECK(e.col() == 1);
    }

    m << 0, 1, 2, 0;
    CHECK_THROWS_AS(Matrix{m}, InputError);  // asymmetric
    m << 0, -1, -1, 0;
    CHECK_THROWS_AS(Matrix{m}, InputError);  // negative
    m << 0, 0, 0, 0;
    CHECK_THROWS_AS(Matrix{m}, InputError);  // distinct points at distance 0
    Eigen::MatrixXd rect(2, 3);
    rect.setOnes();
    CHECK_THROWS_AS(Matrix{rect}, InputError);
    CHECK_THROWS_AS(Matrix{Eigen::MatrixXd(0, 0)}, InputError);
  }

  TEST_CASE("asymmetry within tolerance is mirrored from the lower triangle") {
    Eigen::MatrixXd m(2, 2);
    m << 0, 1.05, 1.0, 0;
    Matrix d(m, 0.1);
    CHECK(d(0, 1) == 1.0);
    CHECK(d(1, 0) == 1.0);
    CHECK(d.equal(1.0, 1.05));
    CHECK(d.greater(1.2, 1.05));
  }

  TEST_CASE("single point space") {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(1, 1);
    Matrix d(m);
    CHECK(d.size() == 1);
    CHECK_THROWS_AS(farthest_set(d, 0), InputError);
  }

  TEST_CASE("canonicalize") {
    const std::vector<Index> rot{2, 3, 0, 1}, refl{0, 3, 2, 1}, mixed{1, 3, 0, 2};
    CHECK(canonicalize(rot) == CircularOrder::identity(4));
    CHECK(canonicalize(refl) == CircularOrder::identity(4));
    CHECK(canonicalize(mixed) == CircularOrder::from_sequence({0, 2, 1, 3}));
    const std::vector<Index> two{1, 0};
    CHECK(canonicalize(two) == CircularOrder::identity(2));
    const std::vector<Index> bad{0, 0, 1};
    CHECK_THROWS_AS(canonicalize(bad), InputError);
    CHECK_THROWS_AS(CircularOrder::from_sequence({0, 3, 1}), InputError);
    CHECK(CircularOrder::from_sequence({0, 2, 1, 3}).is_canonical());
    CHECK_FALSE(CircularOrder::from_sequence({0, 3, 1, 2}).is_canonical());
  }

  TEST_CASE("betweenness and chains") {
    const auto o = CircularOrder::identity(5);
    CHECK(o.between(0, 2, 4));
    CHECK(o.between(3, 4, 1));
    CHECK_FALSE(o.between(0, 4, 2));
    CHECK_FALSE(o.between(0, 0, 2));
    const std::vector<Index> a{0, 2, 4}, b{0, 4, 2};
    CHECK(chain_holds(o, a));
    CHECK_FALSE(chain_holds(o, b));
    const std::vector<Index> c{0, 0, 2, 3};
    CHECK(chain_holds(CircularOrder::identity(4), c));
    const std::vector<Index> out_of_range{0, 7};
    CHECK_THROWS_AS(chain_holds(o, out_of_range), InputError);
  }

  TEST_CASE("arcs") {
    const auto o = CircularOrder::identity(5);
    CHECK(arc_between(o, 1, 3).members(o) == std::vector<Index>{1, 2, 3});
    CHECK(arc_between(o, 3, 1).members(o) == std::vector<Index>{3, 4, 0, 1});
    CHECK(arc_between(o, 2, 2).members(o) == std::vector<Index>{2});
    const Arc a = arc_between(o, 1, 3);
    CHECK(a.complement().members(o) == std::vector<Index>{4, 0});
    CHECK(a.contains(o, 2));
    CHECK_FALSE(a.contains(o, 4));
    CHECK_THROWS_AS(Arc({0, 5, 5}).complement(), std::logic_error);
  }

  TEST_CASE("farthest sets") {
    const auto d4 = counterexample_fixture();
    const auto f = farthest_set(d4, 0);
    CHECK(f.radius == 3);
    CHECK(f.members == std::vector<Index>{3});

    const auto c5 = circle_instance(5, CircleMetric::Arc);
    const auto g = farthest_set(c5, 0);
    CHECK(g.radius == 2);
    CHECK(g.members == std::vector<Index>{2, 3});

    Eigen::MatrixXd m(2, 2);
    m << 0, 5, 5, 0;
    const auto h = farthest_set(Matrix(m), 0);
    CHECK(h.radius == 5);
    CHECK(h.members == std::vector<Index>{1});
    CHECK(farthest_data(c5).size() == 5);
  }

  TEST_CASE("float scalar instantiation") {
    Eigen::MatrixXf m(3, 3);
    m << 0, 1, 2, 1, 0, 1, 2, 1, 0;
    DissimilarityMatrix<float> d(m);
    CHECK(farthest_set(d, 0).members == std::vector<Index>{2});
  }
}
