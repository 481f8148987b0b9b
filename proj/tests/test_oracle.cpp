#include <algorithm>

#include "doctest.h"
#include "schubert/engine.hpp"
#include "schubert/oracle.hpp"
#include "schubert/quantum.hpp"

using namespace schubert;

TEST_CASE("LR tableau counts on worked examples") {
  // G(2,4): c^{(2)}_{(1),(1)} = c^{(1,1)}_{(1),(1)} = 1
  SchubertIndex l1(2, 4, {1, 0});
  CHECK(lr_tableaux(l1, l1, SchubertIndex(2, 4, {2, 0}), 2, 4) == 1);
  CHECK(lr_tableaux(l1, l1, SchubertIndex(2, 4, {1, 1}), 2, 4) == 1);
  // c^{lambda}_{empty, lambda} = 1
  SchubertIndex empty(3, 6, {});
  SchubertIndex l21(3, 6, {2, 1, 0});
  CHECK(lr_tableaux(empty, l21, l21, 3, 6) == 1);
  // sigma_{2,1}^2 = sigma_{3,3} + 2 sigma_{3,2,1} + sigma_{2,2,2} in G(3,6)
  CHECK(lr_tableaux(l21, l21, SchubertIndex(3, 6, {3, 3, 0}), 3, 6) == 1);
  CHECK(lr_tableaux(l21, l21, SchubertIndex(3, 6, {3, 2, 1}), 3, 6) == 2);
  CHECK(lr_tableaux(l21, l21, SchubertIndex(3, 6, {2, 2, 2}), 3, 6) == 1);
}

TEST_CASE("Pieri products") {
  // sigma_1 * sigma_1 = sigma_2 + sigma_{1,1} in G(2,4)
  auto exp = pieri_multiply(1, SchubertIndex(2, 4, {1, 0}), 2, 4);
  CHECK(exp.size() == 2);
  CHECK(exp.at(SchubertIndex(2, 4, {2, 0})) == 1);
  CHECK(exp.at(SchubertIndex(2, 4, {1, 1})) == 1);
  // sigma_0 acts as identity
  auto id = pieri_multiply(0, SchubertIndex(3, 6, {2, 1, 0}), 3, 6);
  CHECK(id.size() == 1);
  CHECK(id.at(SchubertIndex(3, 6, {2, 1, 0})) == 1);
  // sigma_2 * sigma_{2,1} in G(3,6) against the tableau count
  auto p = pieri_multiply(2, SchubertIndex(3, 6, {2, 1, 0}), 3, 6);
  auto l = lr_product(SchubertIndex(3, 6, {2, 0, 0}), SchubertIndex(3, 6, {2, 1, 0}), 3, 6);
  CHECK(p == l);
}

TEST_CASE("Giambelli determinants reduce to the class itself") {
  // 1x1 determinant
  auto one = giambelli_expand(SchubertIndex(1, 4, {2}), 1, 4);
  CHECK(one.size() == 1);
  CHECK(one.at(SchubertIndex(1, 4, {2})) == 1);
  // lambda = (1,1) in G(2,4): sigma_1^2 - sigma_2 sigma_0 = sigma_{1,1}
  auto two = giambelli_expand(SchubertIndex(2, 4, {1, 1}), 2, 4);
  CHECK(two.size() == 1);
  CHECK(two.at(SchubertIndex(2, 4, {1, 1})) == 1);
  // lambda = (2,1) in G(3,6): 3x3 determinant
  auto three = giambelli_expand(SchubertIndex(3, 6, {2, 1, 0}), 3, 6);
  CHECK(three.size() == 1);
  CHECK(three.at(SchubertIndex(3, 6, {2, 1, 0})) == 1);
}

TEST_CASE("Giambelli reduces to the class for every lambda in small boxes") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& lambda : partitions_in_box(k, n, -1)) (void)lambda;  // enumerate below
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= std::min(3, n - 1); ++k)
      for (int w = 0; w <= k * (n - k); ++w)
        for (const auto& lambda : partitions_in_box(k, n, w)) {
          auto exp = giambelli_expand(lambda, k, n);
          CHECK(exp.size() == 1);
          CHECK(exp.at(lambda) == 1);
        }
}

TEST_CASE("oracle triangle on a sample: tableaux vs Pieri/Giambelli") {
  const int k = 3, n = 6;
  for (int w1 = 0; w1 <= 4; ++w1)
    for (const auto& a : partitions_in_box(k, n, w1))
      for (int w2 = 0; w2 <= 4; ++w2)
        for (const auto& b : partitions_in_box(k, n, w2)) {
          CHECK(lr_product(a, b, k, n) == giambelli_product(a, b, k, n));
        }
}

TEST_CASE("Schubert polynomial basics") {
  // S_{id} = 1, S_{s1} = x1, S_{s2} = x1 + x2
  CHECK(schubert_polynomial({1}) == SparsePoly::constant(1, 'x'));
  CHECK(schubert_polynomial({2, 1}) == SparsePoly::variable(1, 1, 'x'));
  auto s2 = schubert_polynomial({1, 3, 2});
  CHECK(s2 == SparsePoly::variable(1, 1, 'x') + SparsePoly::variable(2, 1, 'x'));
  // longest element of S_3: x1^2 x2
  auto w0 = schubert_polynomial({3, 2, 1});
  CHECK(w0 == SparsePoly::monomial(1, {2, 1}, 'x'));
}

TEST_CASE("Schubert polynomials are code-triangular in back-to-front order") {
  // The anti-lex leading monomial of S_w is x^{code(w)} with coefficient 1:
  // exercised for all w in S_4.
  std::vector<int> base = {1, 2, 3, 4};
  std::sort(base.begin(), base.end());
  do {
    const auto& sw = schubert_polynomial(base);
    auto code = perm_code(base);
    SparsePoly::Exponents best;
    bool first = true;
    for (const auto& [e, c] : sw.terms()) {
      if (first) { best = e; first = false; continue; }
      size_t len = std::max(e.size(), best.size());
      for (size_t i = len; i-- > 0;) {
        int xi = i < e.size() ? e[i] : 0;
        int yi = i < best.size() ? best[i] : 0;
        if (xi != yi) {
          if (xi > yi) best = e;
          break;
        }
      }
    }
    SparsePoly::Exponents expect(code.begin(), code.end());
    while (!expect.empty() && expect.back() == 0) expect.pop_back();
    CHECK(best == expect);
    CHECK(sw.terms().at(best) == 1);
  } while (std::next_permutation(base.begin(), base.end()));
}

TEST_CASE("divided differences lower Schubert polynomials") {
  // d_i S_w = S_{w s_i} when the length drops.
  Perm w = {3, 1, 2};
  auto lowered = divided_difference(schubert_polynomial({3, 2, 1}), 2);
  CHECK(lowered == schubert_polynomial(w));
}

TEST_CASE("flag string to permutation and back") {
  FlagString f({1, 3}, 6, "010201");
  auto w = flag_string_to_perm(f);
  CHECK(perm_length(w) == f.codim());
  CHECK(perm_to_flag_string(w, {1, 3}, 6) == f);
}

TEST_CASE("the five-term Fl(1,3;6) product via the oracle") {
  // sigma^{2,1,2}_{1,0,0} * sigma^{2,1,2}_{2,1,0} in Fl(1,3;6)
  FlagString a = flagstring_from_upperlower({{2, 1, 2}, {1, 0, 0}}, {1, 3}, 6);
  FlagString b = flagstring_from_upperlower({{2, 1, 2}, {2, 1, 0}}, {1, 3}, 6);
  CHECK(a.digits() == "001021");
  CHECK(b.digits() == "010201");
  auto exp = flag_structure_constants(a, b);
  CHECK(exp.size() == 5);
  auto coeff = [&](std::initializer_list<int> delta, std::initializer_list<int> lambda) {
    FlagString cls = flagstring_from_upperlower({delta, lambda}, {1, 3}, 6);
    REQUIRE(exp.count(cls) == 1);
    return exp.at(cls);
  };
  CHECK(coeff({1, 2, 2}, {3, 1, 0}) == 1);
  CHECK(coeff({1, 2, 2}, {2, 2, 0}) == 1);
  CHECK(coeff({2, 1, 2}, {3, 2, 0}) == 1);
  CHECK(coeff({1, 2, 2}, {2, 1, 1}) == 1);
  CHECK(coeff({2, 1, 2}, {2, 2, 1}) == 1);
}

TEST_CASE("the two-term Fl(2,4;6) product via the oracle") {
  FlagString a = flagstring_from_upperlower({{2, 2, 1, 1}, {1, 1, 0, 0}}, {2, 4}, 6);
  FlagString b = flagstring_from_upperlower({{2, 2, 1, 1}, {2, 1, 1, 0}}, {2, 4}, 6);
  auto exp = flag_structure_constants(a, b);
  CHECK(exp.size() == 2);
  // Both computation routes agree that the first class carries the sorted
  // lower row (2,2,1,1); a lower row must be weakly decreasing for the jump
  // positions to be strictly increasing.
  FlagString c1 = flagstring_from_upperlower({{2, 2, 1, 1}, {2, 2, 1, 1}}, {2, 4}, 6);
  FlagString c2 = flagstring_from_upperlower({{2, 2, 1, 1}, {2, 2, 2, 0}}, {2, 4}, 6);
  CHECK(exp.at(c1) == 1);
  CHECK(exp.at(c2) == 1);
}

TEST_CASE("identity flag class acts as identity") {
  FlagString b({1, 3}, 6, "010201");
  std::string ident = "000211";
  // build the zero-inversion string over {0,1,2} with counts (3,2,1)
  std::string s = "000112";
  // digits: 0 x3 (no jump), 1 x2 (level 2), 2 x1 (level 1): increasing order
  FlagString a({1, 3}, 6, "000112");
  auto exp = flag_structure_constants(a, b);
  CHECK(exp.size() == 1);
  CHECK(exp.at(b) == 1);
}

TEST_CASE("Grassmannian specialization of the flag oracle matches tableaux, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      auto classes = boundary_strings(n, {n - k, k});
      for (const auto& a : classes)
        for (const auto& b : classes) {
          auto flag = flag_structure_constants_str(a, b, {k}, n);
          auto la = string_to_partition(a);
          auto lb = string_to_partition(b);
          auto lr = lr_product(la, lb, k, n);
          std::map<std::string, BigInt> lr_str;
          for (const auto& [idx, c] : lr) lr_str[partition_to_string(idx)] = c;
          CHECK(flag == lr_str);
        }
    }
}

TEST_CASE("Fulton property spot check at n <= 6, N = 2") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (int w1 = 0; w1 <= k * (n - k); ++w1)
        for (const auto& a : partitions_in_box(k, n, w1))
          for (int w2 = 0; w2 + w1 <= k * (n - k); ++w2)
            for (const auto& b : partitions_in_box(k, n, w2)) {
              for (const auto& [nu, c] : lr_product(a, b, k, n)) {
                if (c != 1) continue;
                // double everything inside the doubled box
                auto dbl = [&](const SchubertIndex& x) {
                  std::vector<int> parts;
                  for (int p : x.parts()) parts.push_back(2 * p);
                  return SchubertIndex(k, n + (n - k), parts);
                };
                CHECK(lr_tableaux(dbl(a), dbl(b), dbl(nu), k, n + (n - k)) == 1);
              }
            }
}
