#include "doctest.h"
#include "schubert/mondrian.hpp"
#include "schubert/oracle.hpp"
#include "schubert/quantum.hpp"

using namespace schubert;

TEST_CASE("the four-lines game: sigma_1^2 in G(2,4)") {
  auto result = play(SchubertIndex(2, 4, {1, 0}), SchubertIndex(2, 4, {1, 0}), 2, 4);
  CHECK(result.size() == 2);
  CHECK(result.at(SchubertIndex(2, 4, {2, 0})) == 1);
  CHECK(result.at(SchubertIndex(2, 4, {1, 1})) == 1);
}

TEST_CASE("MM failure gives the empty product") {
  // sigma_{2,2} * sigma_{2,2} in G(2,4) is zero.
  auto init = init_product(SchubertIndex(2, 4, {2, 2}), SchubertIndex(2, 4, {2, 2}), 2, 4);
  CHECK(!init.has_value());
  auto result = play(SchubertIndex(2, 4, {2, 2}), SchubertIndex(2, 4, {2, 2}), 2, 4);
  CHECK(result.empty());
}

TEST_CASE("the worked OS-rule application") {
  // sigma_{2,1,1} * sigma_{1,1,1} in G(3,6): outer square of side 4 after OS.
  auto init = init_product(SchubertIndex(3, 6, {2, 1, 1}), SchubertIndex(3, 6, {1, 1, 1}), 3, 6);
  REQUIRE(init.has_value());
  CHECK(init->m == 4);
  CHECK(is_admissible(*init));
}

TEST_CASE("dual pair collapses to the point class") {
  // lambda and its dual pair to c = 1 at the point class.
  SchubertIndex lam(3, 6, {2, 1, 0});
  auto result = play(lam, lam.dual(), 3, 6);
  CHECK(result.size() == 1);
  CHECK(result.begin()->second == 1);
  CHECK(result.begin()->first == SchubertIndex(3, 6, {3, 3, 3}));
}

TEST_CASE("sigma_{2,1}^2 in G(3,6): the worked four-leaf game") {
  SchubertIndex l21(3, 6, {2, 1, 0});
  auto result = play(l21, l21, 3, 6);
  CHECK(result.size() == 3);
  CHECK(result.at(SchubertIndex(3, 6, {3, 3, 0})) == 1);
  CHECK(result.at(SchubertIndex(3, 6, {3, 2, 1})) == 2);
  CHECK(result.at(SchubertIndex(3, 6, {2, 2, 2})) == 1);
}

TEST_CASE("first move of sigma_{2,1}^2 produces two children") {
  auto init = init_product(SchubertIndex(3, 6, {2, 1, 0}), SchubertIndex(3, 6, {2, 1, 0}), 3, 6);
  REQUIRE(init.has_value());
  auto children = step(*init);
  CHECK(children.size() == 2);
}

TEST_CASE("play matches the tableau count for k <= 3, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= std::min(3, n - 1); ++k)
      for (int w1 = 0; w1 <= k * (n - k); ++w1)
        for (const auto& a : partitions_in_box(k, n, w1))
          for (int w2 = w1; w2 <= k * (n - k); ++w2)
            for (const auto& b : partitions_in_box(k, n, w2)) {
              auto game = play(a, b, k, n);
              auto lr = lr_product(a, b, k, n);
              MondrianResult expect;
              for (const auto& [idx, c] : lr) expect[idx] = c;
              CHECK_MESSAGE(game == expect, "game vs tableaux at ", a.to_string(), " * ",
                            b.to_string(), " in G(", k, ",", n, ")");
            }
}

TEST_CASE("degree is conserved at every leaf") {
  SchubertIndex a(3, 6, {3, 1, 0}), b(3, 6, {2, 2, 1});
  for (const auto& [leaf, count] : play(a, b, 3, 6))
    CHECK(leaf.codim() == a.codim() + b.codim());
}

TEST_CASE("quantum Mondrian tableaux of the worked mappings") {
  // lambda = (3,2,1) in G(3,6), d = 1 -> sigma^{2,1,1,2}_{2,1,0,0} = 102021
  auto q1 = quantum_tableau(SchubertIndex(3, 6, {3, 2, 1}), 1);
  CHECK(q1.steps() == std::vector<int>{2, 4});
  CHECK(q1.digits() == "102021");
  // lambda = (3,2) in G(3,6), d = 2 -> sigma^{2,2,2,2,1}_{1,0,0,0,0} in Fl(1,5;6)
  auto q2 = quantum_tableau(SchubertIndex(3, 6, {3, 2, 0}), 2);
  CHECK(q2.steps() == std::vector<int>{1, 5});
  auto u = upperlower_from_flagstring(q2);
  CHECK(u.delta == std::vector<int>{2, 2, 2, 2, 1});
  CHECK(u.lambda == std::vector<int>{1, 0, 0, 0, 0});
  // d = 0: the pullback collapses to a single step
  auto q0 = quantum_tableau(SchubertIndex(3, 6, {3, 2, 1}), 0);
  CHECK(q0.steps() == std::vector<int>{3});
  CHECK(q0.digits() == partition_to_string(SchubertIndex(3, 6, {3, 2, 1})));
  // the quantum tableau of the third factor in the worked example
  CHECK(quantum_tableau(SchubertIndex(3, 6, {2, 1, 0}), 1).digits() == "010212");
}

TEST_CASE("tableau printing") {
  auto init = init_product(SchubertIndex(2, 4, {1, 0}), SchubertIndex(2, 4, {1, 0}), 2, 4);
  REQUIRE(init.has_value());
  CHECK(init->to_string() == "A1:[1,2] B1:[3,4] outer:[1,4]");
}
