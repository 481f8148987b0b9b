#pragma once

#include <string>
#include <vector>

#include "schubert/engine.hpp"
#include "schubert/pieces.hpp"

namespace schubert {

// Shapes of partially filled puzzles, one per degeneration step.  Step i+1
// extends step i by the pair U(row,pair), D(row,pair) plus, at pair = 1, the
// triangle completing the previous row (and U(n,n) at the very last step).
struct StepShape {
  int n = 0;
  int index = 0;  // 0..C(n,2)
  int row = 0, pair = 0;

  bool empty() const { return index == 0; }
  bool complete() const { return index == n * (n - 1) / 2; }
};

int num_degeneration_steps(int n);  // C(n,2)
StepShape step_shape(int n, int index);

// Edge labels and occupancy of a partially completed puzzle, with labels as
// plain strings so instances can be built by hand in tests.
struct LabelGrid {
  int n = 0;
  std::vector<std::string> lw, le, rw, re, h;  // tri-indexed; "" = unset
  std::vector<uint8_t> up_filled, down_filled, rhombus_top;
  std::vector<uint8_t> lgash, rgash;
  std::vector<std::pair<int, int>> kt_right_anchors;  // second K_T piece cells

  explicit LabelGrid(int side = 0);
  void set_ledge(int r, int c, const std::string& label);
  void set_redge(int r, int c, const std::string& label);
  void set_hedge(int r, int c, const std::string& label);
};

struct PartialPuzzle {
  StepShape shape;
  LabelGrid grid;
};

// Truncates a complete filling to the staircase of the given step, keeping
// composite pieces whole (an equivariant rhombus whose top half lies in the
// staircase contributes its bottom half as a dangling cell).
PartialPuzzle truncate_filling(const Filling& f, const PieceSet& ps, int step);

std::string read_alpha(const PartialPuzzle& p);
std::string read_beta(const PartialPuzzle& p);

struct TraceEntry {
  int step;
  std::string alpha, beta;
};

// One entry per degeneration step d_0..d_{C(n,2)}.  The first entry repeats
// the input pair and the last satisfies alpha = beta = gamma.
std::vector<TraceEntry> trace_filling(const Filling& f, const PieceSet& ps);

std::string trace_to_tsv(const std::vector<TraceEntry>& trace);

}  // namespace schubert
