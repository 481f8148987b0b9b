#include <algorithm>

#include "doctest.h"
#include "schubert/indexing.hpp"

using namespace schubert;

TEST_CASE("partition to string matches the border walk") {
  CHECK(partition_to_string(SchubertIndex(2, 5, {2, 0})) == "01001");
  CHECK(partition_to_string(SchubertIndex(2, 4, {})) == "0011");
}

TEST_CASE("string to partition inverts the border walk") {
  auto idx = string_to_partition("01001");
  CHECK(idx.k() == 2);
  CHECK(idx.n() == 5);
  CHECK(idx.parts() == std::vector<int>{2, 0});
  CHECK(string_to_partition("0101").parts() == std::vector<int>{1, 0});
  CHECK(string_to_partition("1100").parts() == std::vector<int>{2, 2});
}

TEST_CASE("string round trips exhaustively for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (mask >> i) & 1 ? '1' : '0';
      auto idx = string_to_partition(s);
      CHECK(partition_to_string(idx) == s);
    }
  }
}

TEST_CASE("brute-force inversion pins a derived conversion") {
  // k=3, n=6, lambda=(2,1,0): find the unique string that inverts to it.
  SchubertIndex target(3, 6, {2, 1, 0});
  std::string found;
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::string s;
    for (int i = 0; i < 6; ++i) s += (mask >> i) & 1 ? '1' : '0';
    if (std::count(s.begin(), s.end(), '1') != 3) continue;
    if (string_to_partition(s) == target) found = s;
  }
  CHECK(partition_to_string(target) == found);
}

TEST_CASE("codim is the partition weight") {
  CHECK(SchubertIndex(2, 4, {1, 0}).codim() == 1);
  CHECK(SchubertIndex(2, 4, {2, 2}).codim() == 4);
  CHECK(SchubertIndex(3, 6, {2, 1, 0}).codim() == 3);
}

TEST_CASE("dual is the reversed string and the box complement") {
  CHECK(dual_string("010212") == "212010");
  CHECK(dual_string("0011") == "1100");
  for (int n = 1; n <= 8; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (mask >> i) & 1 ? '1' : '0';
      CHECK(dual_string(dual_string(s)) == s);
      // lambda-dual oracle: dual_i = (n-k) - lambda_{k+1-i}
      CHECK(partition_to_string(string_to_partition(s).dual()) == dual_string(s));
    }
}

TEST_CASE("the worked dual pair in upper/lower notation") {
  // dual of sigma^{2,1,2,1}_{1,0,0,0} is sigma^{1,2,1,2}_{2,2,2,1}
  FlagString f({2, 4}, 6, "010212");
  auto u = upperlower_from_flagstring(f);
  CHECK(u.delta == std::vector<int>{2, 1, 2, 1});
  CHECK(u.lambda == std::vector<int>{1, 0, 0, 0});
  auto ud = upperlower_from_flagstring(f.dual());
  CHECK(ud.delta == std::vector<int>{1, 2, 1, 2});
  CHECK(ud.lambda == std::vector<int>{2, 2, 2, 1});
}

TEST_CASE("flag string from upper/lower notation") {
  // sigma^{2,1,2}_{2,1,0} in Fl(1,3;6) is sigma_010201
  UpperLowerIndex u{{2, 1, 2}, {2, 1, 0}};
  auto f = flagstring_from_upperlower(u, {1, 3}, 6);
  CHECK(f.digits() == "010201");
  CHECK(upperlower_from_flagstring(f) == u);

  UpperLowerIndex v{{2, 1, 1, 2}, {2, 1, 0, 0}};
  CHECK(flagstring_from_upperlower(v, {2, 4}, 6).digits() == "102021");

  // all-delta=1, lambda=0 degenerate: the single-step string puts the
  // largest digit on the last k positions.
  UpperLowerIndex w{{1, 1}, {0, 0}};
  CHECK(flagstring_from_upperlower(w, {2}, 4).digits() == "0011");
}

TEST_CASE("flag string digit-count invariant holds for random upper/lower inputs") {
  std::vector<std::vector<int>> step_choices = {{1, 3}, {2, 4}, {1, 2, 4}};
  unsigned seed = 12345;
  auto next = [&] { return seed = seed * 1664525u + 1013904223u; };
  for (const auto& steps : step_choices) {
    const int n = 6;
    const int r = static_cast<int>(steps.size());
    const int kr = steps.back();
    for (int it = 0; it < 200; ++it) {
      std::vector<int> delta;
      for (int i = 1; i <= r; ++i) {
        int count = steps[static_cast<size_t>(i - 1)] - (i >= 2 ? steps[static_cast<size_t>(i - 2)] : 0);
        for (int t = 0; t < count; ++t) delta.push_back(i);
      }
      for (size_t i = delta.size(); i > 1; --i) std::swap(delta[i - 1], delta[next() % i]);
      std::vector<int> lambda(static_cast<size_t>(kr));
      int cur = static_cast<int>(next() % static_cast<unsigned>(n - kr + 1));
      for (auto& p : lambda) {
        p = cur;
        if (cur > 0 && next() % 2) cur -= static_cast<int>(next() % static_cast<unsigned>(cur + 1));
      }
      UpperLowerIndex u{delta, lambda};
      auto f = flagstring_from_upperlower(u, steps, n);  // constructor validates counts
      CHECK(f.n() == n);
      CHECK(upperlower_from_flagstring(f) == u);
    }
  }
}

TEST_CASE("codim of flag strings counts inversions") {
  CHECK(FlagString({1, 3}, 6, "010201").codim() == 4);
  CHECK(FlagString({2}, 4, "0101").codim() == 1);
}

TEST_CASE("degeneration order") {
  DegenerationOrder d2(2);
  CHECK(d2.size() == 2);
  CHECK(d2.perm(0) == std::vector<int>{2, 1});
  CHECK(d2.perm(1) == std::vector<int>{1, 2});

  DegenerationOrder d3(3);
  CHECK(d3.size() == 4);
  CHECK(d3.perm(3) == std::vector<int>{1, 2, 3});

  DegenerationOrder d4(4);
  CHECK(d4.size() == 7);
  CHECK(d4.perm(0) == std::vector<int>{4, 3, 2, 1});
  // The full n=4 chain.
  CHECK(d4.perm(1) == std::vector<int>{4, 3, 1, 2});
  CHECK(d4.perm(2) == std::vector<int>{4, 1, 3, 2});
  CHECK(d4.perm(3) == std::vector<int>{4, 1, 2, 3});
  CHECK(d4.perm(4) == std::vector<int>{1, 4, 2, 3});
  CHECK(d4.perm(5) == std::vector<int>{1, 2, 4, 3});
  CHECK(d4.perm(6) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("degeneration order sizes and single-letter drops for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    DegenerationOrder d(n);
    CHECK(d.size() == n * (n - 1) / 2 + 1);
    auto word = DegenerationOrder::reduced_word(n);
    for (int i = 0; i + 1 < d.size(); ++i) {
      // d_i carries one more letter of the reduced word than d_{i+1}.
      auto shorter = d.perm(i + 1);
      const int letter = word[static_cast<size_t>(d.size() - 2 - i)];
      std::swap(shorter[static_cast<size_t>(letter - 1)], shorter[static_cast<size_t>(letter)]);
      CHECK(shorter == d.perm(i));
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS(SchubertIndex(2, 4, {3, 0}));
  CHECK_THROWS(SchubertIndex(2, 4, {1, 2}));
  CHECK_THROWS(string_to_partition("0121"));
  CHECK_THROWS(FlagString({1, 3}, 6, "010202"));
  // colliding jump positions
  CHECK_THROWS(flagstring_from_upperlower(UpperLowerIndex{{1, 2}, {0, 2}}, {1, 2}, 4));
}
