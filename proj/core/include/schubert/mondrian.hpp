#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/indexing.hpp"

namespace schubert {

// Squares are intervals of unit cells on the anti-diagonal of the board;
// moving a square anti-diagonally up by one unit is interval shift by +1.
struct MSquare {
  int lo = 0, hi = 0;  // 1-based inclusive
  int side() const { return hi - lo + 1; }
  bool contains(const MSquare& o) const { return lo <= o.lo && o.hi <= hi; }
  bool meets(const MSquare& o) const { return lo <= o.hi && o.lo <= hi; }
  bool touches_or_meets(const MSquare& o) const { return lo <= o.hi + 1 && o.lo <= hi + 1; }
  friend bool operator==(const MSquare&, const MSquare&) = default;
  friend auto operator<=>(const MSquare&, const MSquare&) = default;
};

// An admissible Mondrian tableau of the Grassmannian game.  Coordinates are
// normalized so the outer square is [1, m]; n and k remember the ambient
// Grassmannian.  A squares (left-aligned, excluding the outer square) are
// labeled A_{#D+1}..A_{k-1}, B squares B_1..B_{k-#D-1}, D squares D_1..D_#D.
struct MondrianTableau {
  int k = 0, n = 0;
  int m = 0;  // outer square side
  std::vector<MSquare> A;  // ascending label order (smallest first)
  std::vector<MSquare> B;  // ascending label order (smallest first)
  std::vector<MSquare> D;  // ascending label order

  bool terminal() const;
  std::string to_string() const;  // "A3:[1,4] B1:[3,4] D1:[2,2] outer:[1,4]"

  friend bool operator==(const MondrianTableau&, const MondrianTableau&) = default;
  friend auto operator<=>(const MondrianTableau&, const MondrianTableau&) = default;
};

// Admissibility conditions (1)-(5); returns the violated condition's text or
// nothing when admissible.
std::optional<std::string> admissibility_violation(const MondrianTableau& t);
bool is_admissible(const MondrianTableau& t);

// Places the two tableaux in the n x n board and applies the MM, OS and S
// rules; nullopt when the MM rule fails (the product is zero).
std::optional<MondrianTableau> init_product(const SchubertIndex& lambda,
                                            const SchubertIndex& mu, int k, int n);

// One move of the game: one or two admissible tableaux.
std::vector<MondrianTableau> step(const MondrianTableau& t);

// The partition of a terminal tableau, as a class of G(k,n).
SchubertIndex terminal_class(const MondrianTableau& t);

// Full game: multiset of terminal classes.
using MondrianResult = std::map<SchubertIndex, BigInt>;
MondrianResult play(const SchubertIndex& lambda, const SchubertIndex& mu, int k, int n,
                    std::vector<std::string>* trace_lines = nullptr);

// The quantum Mondrian tableau of degree d associated to sigma_lambda: the
// class of X_lambda^(d) in Fl(k-d, k+d; n).  Collapsed steps (d = 0 or
// k - d = 0) are dropped from the step sequence.
FlagString quantum_tableau(const SchubertIndex& lambda, int d);

// SVG board drawing: anti-diagonal unit cells with the A, B and D squares.
std::string mondrian_to_svg(const MondrianTableau& t);

}  // namespace schubert
