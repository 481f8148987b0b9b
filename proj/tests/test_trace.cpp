#include <map>
#include <set>

#include "doctest.h"
#include "schubert/trace.hpp"

using namespace schubert;

TEST_CASE("step shapes walk the pair order") {
  CHECK(num_degeneration_steps(4) == 6);
  auto s0 = step_shape(4, 0);
  CHECK(s0.empty());
  auto s1 = step_shape(4, 1);
  CHECK(s1.row == 2);
  CHECK(s1.pair == 1);
  auto s2 = step_shape(4, 2);
  CHECK(s2.row == 3);
  CHECK(s2.pair == 1);
  auto s3 = step_shape(4, 3);
  CHECK(s3.row == 3);
  CHECK(s3.pair == 2);
  CHECK(step_shape(4, 6).complete());
  CHECK_THROWS(step_shape(4, 7));
}

TEST_CASE("the worked n=5 partial puzzle reads 01001 and 00011") {
  // Rows 1-3 complete, row 4 filled through its first pair.  Exposed edges:
  // NW boundary ledge(5,1)=0; hedge(4,1)=10; leading ledge(4,2)=10; tops
  // hedge(3,2)=0, hedge(3,3)=1; NE boundary redge(4,4)=1, redge(5,5)=1.
  PartialPuzzle p;
  p.shape = step_shape(5, 4);  // rows 2 and 3 take three steps, then row 4 pair 1
  REQUIRE(p.shape.row == 4);
  REQUIRE(p.shape.pair == 1);
  p.grid = LabelGrid(5);
  p.grid.set_ledge(5, 1, "0");
  p.grid.set_hedge(4, 1, "10");
  p.grid.set_ledge(4, 2, "10");
  p.grid.set_hedge(3, 2, "0");
  p.grid.set_hedge(3, 3, "1");
  p.grid.set_redge(4, 4, "1");
  p.grid.set_redge(5, 5, "1");
  CHECK(read_alpha(p) == "01001");
  CHECK(read_beta(p) == "00011");
}

TEST_CASE("complete puzzles read their own boundaries") {
  const auto& ps = piece_set_for(Theory::H);
  for (const auto& f : enumerate_fillings(4, "0101", "0101", ps)) {
    auto first = truncate_filling(f, ps, 0);
    CHECK(read_alpha(first) == "0101");
    CHECK(read_beta(first) == "0101");
    auto last = truncate_filling(f, ps, num_degeneration_steps(4));
    CHECK(read_alpha(last) == f.gamma);
    CHECK(read_beta(last) == f.gamma);
  }
}

TEST_CASE("sigma_0101^2 fillings trace to their own boundaries") {
  const auto& ps = piece_set_for(Theory::H);
  std::map<std::string, std::vector<TraceEntry>> traces;
  for (const auto& f : enumerate_fillings(4, "0101", "0101", ps))
    traces[f.gamma] = trace_filling(f, ps);
  REQUIRE(traces.size() == 2);
  for (auto& [gamma, tr] : traces) {
    CHECK(tr.size() == 7);
    CHECK(tr.front().alpha == "0101");
    CHECK(tr.front().beta == "0101");
    CHECK(tr.back().alpha == gamma);
    CHECK(tr.back().beta == gamma);
  }
}

TEST_CASE("n=1 trace has one step") {
  const auto& ps = piece_set_for(Theory::H);
  auto fills = enumerate_fillings(1, "1", "1", ps);
  auto tr = trace_filling(fills[0], ps);
  CHECK(tr.size() == 1);
  CHECK(tr[0].alpha == "1");
  CHECK(tr[0].beta == "1");
}

TEST_CASE("endpoint identities for every theory, n <= 4") {
  const std::vector<Theory> theories = {Theory::H, Theory::K, Theory::HT, Theory::KT,
                                        Theory::H2, Theory::H3, Theory::HT2};
  for (Theory th : theories) {
    const auto& ps = th == Theory::K ? piece_set_for(Theory::K, KVariant::Alternate)
                                     : piece_set_for(th);
    const int r = theory_steps(th);
    for (int n = 1; n <= 4; ++n) {
      // enumerate a few content vectors
      std::vector<std::vector<int>> contents;
      if (r == 1) {
        for (int k = 0; k <= n; ++k) contents.push_back({n - k, k});
      } else if (r == 2) {
        for (int k1 = 0; k1 <= n; ++k1)
          for (int k2 = 0; k1 + k2 <= n; ++k2) contents.push_back({n - k1 - k2, k2, k1});
      } else {
        for (int k1 = 0; k1 <= n; ++k1)
          for (int k2 = 0; k1 + k2 <= n; ++k2)
            for (int k3 = 0; k1 + k2 + k3 <= n; ++k3)
              contents.push_back({n - k1 - k2 - k3, k3, k2, k1});
      }
      for (const auto& content : contents) {
        auto classes = boundary_strings(n, content);
        for (const auto& a : classes)
          for (const auto& b : classes)
            for (const auto& f : enumerate_fillings(n, a, b, ps)) {
              auto tr = trace_filling(f, ps);
              CHECK(tr.front().alpha == a);
              CHECK(tr.front().beta == b);
              CHECK(tr.back().alpha == f.gamma);
              CHECK(tr.back().beta == f.gamma);
            }
      }
    }
  }
}

TEST_CASE("multiplicity-1 degeneration for 1-step cohomology, n <= 4") {
  // Distinct one-step extensions of a common partially filled puzzle must
  // read distinct (alpha, beta) pairs: each child variety appears once.
  const auto& ps = piece_set_for(Theory::H);
  auto prefix_key = [&](const Filling& f, int step) {
    auto p = truncate_filling(f, ps, step);
    std::string key;
    for (int r = 1; r <= f.n; ++r)
      for (int c = 1; c <= r; ++c) {
        const size_t i = tri_index(r, c);
        key += p.grid.up_filled[i] ? static_cast<char>('A' + f.up_catalog[i]) : '.';
        if (c < r)
          key += p.grid.down_filled[i] ? static_cast<char>('A' + f.down_catalog[i]) : '.';
      }
    return key;
  };
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      auto classes = boundary_strings(n, {n - k, k});
      for (const auto& a : classes)
        for (const auto& b : classes) {
          auto fillings = enumerate_fillings(n, a, b, ps);
          const int steps = num_degeneration_steps(n);
          for (int i = 0; i < steps; ++i) {
            // parent prefix -> child prefix -> reading
            std::map<std::string, std::map<std::string, std::pair<std::string, std::string>>>
                tree;
            for (const auto& f : fillings) {
              auto child = truncate_filling(f, ps, i + 1);
              tree[prefix_key(f, i)][prefix_key(f, i + 1)] = {read_alpha(child),
                                                              read_beta(child)};
            }
            for (const auto& [parent, kids] : tree) {
              std::set<std::pair<std::string, std::string>> readings;
              for (const auto& [kid, reading] : kids) readings.insert(reading);
              CHECK_MESSAGE(readings.size() == kids.size(),
                            "two children of one partial puzzle share a reading at ", a, " * ",
                            b, " step ", i);
            }
          }
        }
    }
}

TEST_CASE("final-step identity on random pairs across theories, n <= 6") {
  unsigned seed = 777;
  auto next = [&] { return seed = seed * 1664525u + 1013904223u; };
  int runs = 0;
  const auto& ps_list = {Theory::H, Theory::HT, Theory::KT};
  for (Theory th : ps_list) {
    const auto& ps = piece_set_for(th);
    for (int it = 0; it < 40; ++it) {
      const int n = 2 + static_cast<int>(next() % 5);  // 2..6
      const int k = 1 + static_cast<int>(next() % static_cast<unsigned>(n));
      if (k >= n) continue;
      auto classes = boundary_strings(n, {n - k, k});
      const auto& a = classes[next() % classes.size()];
      const auto& b = classes[next() % classes.size()];
      for (const auto& f : enumerate_fillings(n, a, b, ps)) {
        auto tr = trace_filling(f, ps);
        CHECK(tr.back().alpha == tr.back().beta);
        CHECK(tr.back().alpha == f.gamma);
        ++runs;
        if (runs > 1200) return;
      }
    }
  }
  CHECK(runs > 100);
}

TEST_CASE("the KT worked partial readings") {
  // sigma_010^2: the new K_T puzzle's first-step reading is (010, 100).
  const auto& ps = piece_set_for(Theory::KT);
  bool checked1 = false;
  for (const auto& f : enumerate_fillings(3, "010", "010", ps)) {
    if (f.sign != -1) continue;
    auto p = truncate_filling(f, ps, 1);
    CHECK(read_alpha(p) == "010");
    CHECK(read_beta(p) == "100");
    checked1 = true;
  }
  CHECK(checked1);
  // sigma_101^2: the K_T puzzle's first-step reading is (100, 101).
  bool checked2 = false;
  for (const auto& f : enumerate_fillings(3, "101", "101", ps)) {
    if (f.sign != -1) continue;
    auto p = truncate_filling(f, ps, 1);
    CHECK(read_alpha(p) == "100");
    CHECK(read_beta(p) == "101");
    checked2 = true;
  }
  CHECK(checked2);
}


TEST_CASE("two-step leading edge 2(10) follows the bullet rules") {
  // Hand-built n=4 partial puzzle, rows 1-2 complete and row 3 through its
  // first pair.  Exposed edges: NW ledge(4,1)=0; hedge(3,1)=2; leading
  // ledge(3,2)=2(10); top hedge(2,2)=0; NE redge(3,3)=2, redge(4,4)=1.
  // Alpha takes the first leaf of the right subtree (1); beta turns the
  // next 2 into a 1 and then the next 1 (the one just changed) into a 0.
  PartialPuzzle p;
  p.shape = step_shape(4, 2);
  REQUIRE(p.shape.row == 3);
  REQUIRE(p.shape.pair == 1);
  p.grid = LabelGrid(4);
  p.grid.set_ledge(4, 1, "0");
  p.grid.set_hedge(3, 1, "2");
  p.grid.set_ledge(3, 2, "2(10)");
  p.grid.set_hedge(2, 2, "0");
  p.grid.set_redge(3, 3, "2");
  p.grid.set_redge(4, 4, "1");
  CHECK(read_alpha(p) == "0210");
  CHECK(read_beta(p) == "2001");
}

TEST_CASE("two-step leading edge (21)0 turns the next 2 into a 0") {
  // In a real partial puzzle no 1 sits between a (21)0 leading edge and the
  // next 2, so the chain reading (2 -> 1, then 1 -> 0) telescopes to
  // "the next 2 is turned into a 0".
  PartialPuzzle p;
  p.shape = step_shape(4, 2);
  p.grid = LabelGrid(4);
  p.grid.set_ledge(4, 1, "1");
  p.grid.set_hedge(3, 1, "0");
  p.grid.set_ledge(3, 2, "(21)0");
  p.grid.set_hedge(2, 2, "0");
  p.grid.set_redge(3, 3, "2");
  p.grid.set_redge(4, 4, "0");
  CHECK(read_alpha(p) == "1000");
  CHECK(read_beta(p) == "0000");
}

TEST_CASE("trace TSV format") {
  const auto& ps = piece_set_for(Theory::H);
  auto fills = enumerate_fillings(2, "01", "10", ps);
  REQUIRE(!fills.empty());
  auto tsv = trace_to_tsv(trace_filling(fills[0], ps));
  CHECK(tsv.substr(0, 5) == "0\t01\t");
}

TEST_CASE("original K pieces cannot be traced") {
  const auto& ps = piece_set_for(Theory::K, KVariant::Original);
  auto fills = enumerate_fillings(4, "0101", "0101", ps);
  CHECK_THROWS(truncate_filling(fills[0], ps, 1));
}
