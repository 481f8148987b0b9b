#include "doctest.h"
#include "schubert/coeffs.hpp"

using namespace schubert;

namespace {

// Small deterministic generator for random sparse polynomials.
struct Rng {
  unsigned state;
  unsigned next() { return state = state * 1664525u + 1013904223u; }
  int range(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<unsigned>(hi - lo + 1)); }
};

SparsePoly random_poly(Rng& rng, char var, bool laurent) {
  SparsePoly p(var);
  const int terms = rng.range(0, 20);
  for (int t = 0; t < terms; ++t) {
    SparsePoly::Exponents e(static_cast<size_t>(rng.range(0, 6)), 0);
    for (auto& x : e) x = laurent ? rng.range(-3, 3) : rng.range(0, 3);
    p.add_term(e, BigInt(rng.range(-9, 9)));
  }
  return p;
}

}  // namespace

TEST_CASE("basic ring identities") {
  auto y2 = SparsePoly::variable(2, 1, 'y');
  auto y3 = SparsePoly::variable(3, 1, 'y');
  CHECK(((y3 - y2) + (y2 - y3)).is_zero());

  // (1 - t2/t3) * t3 = t3 - t2
  auto f = kt_weight_factor(2, 3);
  auto t3 = SparsePoly::variable(3, 1, 't');
  auto t2 = SparsePoly::variable(2, 1, 't');
  CHECK(f * t3 == t3 - t2);

  // (y3-y2)(y4-y1) has four terms
  auto prod = ht_weight_factor(2, 3) * ht_weight_factor(1, 4);
  CHECK(prod.num_terms() == 4);
  SparsePoly expect('y');
  expect += SparsePoly::variable(3, 1, 'y') * SparsePoly::variable(4, 1, 'y');
  expect = expect - SparsePoly::variable(3, 1, 'y') * SparsePoly::variable(1, 1, 'y');
  expect = expect - SparsePoly::variable(2, 1, 'y') * SparsePoly::variable(4, 1, 'y');
  expect += SparsePoly::variable(2, 1, 'y') * SparsePoly::variable(1, 1, 'y');
  CHECK(prod == expect);
}

TEST_CASE("ring axioms on random sparse polynomials") {
  Rng rng{987654321u};
  for (int it = 0; it < 60; ++it) {
    const bool laurent = it % 2;
    const char var = laurent ? 't' : 'y';
    auto a = random_poly(rng, var, laurent);
    auto b = random_poly(rng, var, laurent);
    auto c = random_poly(rng, var, laurent);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("specialize_to_ordinary") {
  CHECK(ht_weight_factor(2, 3).specialize_to_ordinary() == 0);
  CHECK(kt_weight_factor(2, 3).specialize_to_ordinary() == 0);
  CHECK(SparsePoly::constant(2, 'y').specialize_to_ordinary() == 2);
}

TEST_CASE("specialization is a ring homomorphism") {
  Rng rng{555u};
  for (int it = 0; it < 40; ++it) {
    const bool laurent = it % 2;
    const char var = laurent ? 't' : 'y';
    auto a = random_poly(rng, var, laurent);
    auto b = random_poly(rng, var, laurent);
    CHECK((a + b).specialize_to_ordinary() ==
          a.specialize_to_ordinary() + b.specialize_to_ordinary());
    CHECK((a * b).specialize_to_ordinary() ==
          a.specialize_to_ordinary() * b.specialize_to_ordinary());
  }
}

TEST_CASE("kt_factor_to_ht maps generators to first-order weights") {
  CHECK(kt_factor_to_ht(kt_weight_factor(2, 3)) == ht_weight_factor(2, 3));
  CHECK(kt_factor_to_ht(kt_weight_factor(1, 2)) == ht_weight_factor(1, 2));
  CHECK(kt_factor_to_ht(SparsePoly('t')).is_zero());  // i = j gives the zero factor
  CHECK_THROWS(kt_factor_to_ht(SparsePoly::constant(3, 't')));
  CHECK_THROWS(kt_factor_to_ht(kt_weight_factor(1, 2) * kt_weight_factor(1, 3)));
}

TEST_CASE("canonical printing and parsing") {
  CHECK(ht_weight_factor(2, 3).to_string() == "y3 - y2");
  CHECK(kt_weight_factor(2, 3).to_string() == "1 - t2 t3^-1");
  CHECK(SparsePoly().to_string() == "0");
  auto p = SparsePoly::parse("y3 - y2", 'y');
  CHECK(p == ht_weight_factor(2, 3));
  auto q = SparsePoly::parse("1 - t2 t3^-1", 't');
  CHECK(q == kt_weight_factor(2, 3));
  auto r = SparsePoly::parse("2 y1^2 y2 + 3 - y1", 'y');
  CHECK(r.to_string() == "3 - y1 + 2 y1^2 y2");
  CHECK(SparsePoly::parse(r.to_string(), 'y') == r);
}

TEST_CASE("coefficient variant helpers") {
  Coefficient a = BigInt(2);
  Coefficient b = BigInt(3);
  CHECK(coefficient_to_string(coefficient_add(a, b)) == "5");
  CHECK(!coefficient_is_zero(a));
  CHECK(coefficient_is_zero(Coefficient(BigInt(0))));
  CHECK(specialize_to_ordinary(Coefficient(ht_weight_factor(1, 2))) == 0);
}
