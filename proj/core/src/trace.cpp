#include "schubert/trace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("trace: ") + msg);
}

// --- label-tree helpers for the reading bullets ---------------------------

std::vector<int> leaves_of(const std::string& label) {
  std::string t = label;
  if (t == "10K") t = "10";
  return label_leaves(t);
}

// Reading a southwest/northeast (/) edge: alpha receives the first leaf of
// the right subtree; beta turns each leaf into the next one, in order.
char slash_alpha_value(const std::string& label) {
  std::string t = label == "10K" ? "10" : label;
  auto split = label_split(t);
  if (!split) return t[0];
  return static_cast<char>('0' + leaves_of(split->second).front());
}

struct TurnOp {
  int pos;        // walk position of the source edge
  char from, to;  // rewrite first matching symbol
  bool earlier;   // search before pos (alpha) instead of after (beta)
};

void slash_beta_turns(const std::string& label, int pos, std::vector<TurnOp>* ops) {
  std::string t = label == "10K" ? "10" : label;
  auto lv = leaves_of(t);
  for (size_t i = 0; i + 1 < lv.size(); ++i)
    ops->push_back({pos, static_cast<char>('0' + lv[i]), static_cast<char>('0' + lv[i + 1]), false});
}

// Reading a northwest/southeast (\) edge: beta receives the first leaf;
// alpha turns each earlier leaf into the previous one.
char backslash_beta_value(const std::string& label) {
  return static_cast<char>('0' + leaves_of(label).front());
}

void backslash_alpha_turns(const std::string& label, int pos, std::vector<TurnOp>* ops) {
  auto lv = leaves_of(label);
  for (size_t i = lv.size(); i-- > 1;)
    ops->push_back({pos, static_cast<char>('0' + lv[i]), static_cast<char>('0' + lv[i - 1]), true});
}

struct Symbol {
  int pos;
  char ch;
};

void apply_ops(std::vector<Symbol>* syms, const std::vector<TurnOp>& ops) {
  for (const auto& op : ops) {
    if (op.earlier) {
      for (auto it = syms->rbegin(); it != syms->rend(); ++it) {
        if (it->pos < op.pos && it->ch == op.from) {
          it->ch = op.to;
          break;
        }
      }
    } else {
      for (auto& s : *syms) {
        if (s.pos > op.pos && s.ch == op.from) {
          s.ch = op.to;
          break;
        }
      }
    }
  }
}

struct Reading {
  std::string alpha, beta;
};

Reading read_both(const PartialPuzzle& p) {
  const LabelGrid& g = p.grid;
  const StepShape& shape = p.shape;
  const int n = g.n;
  std::vector<Symbol> alpha, beta;
  std::vector<TurnOp> alpha_ops, beta_ops;
  int pos = 0;
  std::vector<std::pair<int, int>> kt_swap;  // (walk pos, unused) for 10K leading edges

  auto lab_le = [&](int r, int c) -> const std::string& { return g.le[tri_index(r, c)]; };
  auto lab_lw = [&](int r, int c) -> const std::string& { return g.lw[tri_index(r, c)]; };
  auto lab_re = [&](int r, int c) -> const std::string& { return g.re[tri_index(r, c)]; };
  auto lab_h = [&](int r, int c) -> const std::string& { return g.h[tri_index(r, c)]; };

  auto emit_horizontal = [&](const std::string& label) {
    check(!label.empty(), "unset horizontal edge in the reading walk");
    ++pos;
    if (label.size() == 1) {
      alpha.push_back({pos, label[0]});
      beta.push_back({pos, label[0]});
      return;
    }
    auto split = label_split(label == "10K" ? std::string("10") : label);
    check(split.has_value(), "horizontal label is not a pair");
    // Left component seen as a / edge by alpha, right component as a \ edge
    // by beta, as if an a/b/ab triangle were temporarily glued on.
    alpha.push_back({pos, slash_alpha_value(split->first)});
    slash_beta_turns(split->first, pos, &beta_ops);
    beta.push_back({pos, backslash_beta_value(split->second)});
    backslash_alpha_turns(split->second, pos, &alpha_ops);
  };

  if (shape.empty()) {
    for (int rr = n; rr >= 1; --rr) alpha.push_back({++pos, lab_le(rr, 1)[0]});
    for (int rr = 1; rr <= n; ++rr) beta.push_back({++pos, g.re[tri_index(rr, rr)][0]});
  } else if (shape.complete()) {
    for (int c = 1; c <= n; ++c) emit_horizontal(lab_h(n, c));
  } else {
    const int r = shape.row, c = shape.pair;
    // Northwest boundary below the staircase.
    for (int rr = n; rr >= r + 1; --rr) alpha.push_back({++pos, lab_le(rr, 1)[0]});
    // Bottom edges of the filled pairs, detouring around dangling cells.
    for (int cc = 1; cc <= c; ++cc) {
      if (r < n && g.down_filled[tri_index(r + 1, cc)]) {
        ++pos;
        beta.push_back({pos, backslash_beta_value(lab_re(r + 1, cc))});
        backslash_alpha_turns(lab_re(r + 1, cc), pos, &alpha_ops);
        ++pos;
        // West side: the label the dangling cell shows to the southwest.
        alpha.push_back({pos, slash_alpha_value(lab_lw(r + 1, cc + 1))});
        if (!g.lgash[tri_index(r + 1, cc + 1)]) slash_beta_turns(lab_lw(r + 1, cc + 1), pos, &beta_ops);
      } else {
        emit_horizontal(lab_h(r, cc));
      }
    }
    // Leading edge.
    {
      ++pos;
      const size_t idx = tri_index(r, c + 1);
      if (g.lgash[idx]) {
        alpha.push_back({pos, lab_le(r, c + 1)[0]});  // the 0 side facing the unfilled region
      } else {
        const std::string& lbl = lab_lw(r, c + 1);
        check(!lbl.empty(), "unset leading edge");
        alpha.push_back({pos, slash_alpha_value(lbl)});
        slash_beta_turns(lbl, pos, &beta_ops);
        if (lbl == "10K") kt_swap.push_back({pos, 0});
      }
    }
    // Top edges of the unfilled part of the row, again detouring around
    // dangling cells hanging from the completed row above.
    for (int cc = c + 1; cc <= r - 1; ++cc) {
      if (g.down_filled[tri_index(r, cc)]) {
        ++pos;
        beta.push_back({pos, backslash_beta_value(lab_re(r, cc))});
        backslash_alpha_turns(lab_re(r, cc), pos, &alpha_ops);
        ++pos;
        alpha.push_back({pos, slash_alpha_value(lab_lw(r, cc + 1))});
        if (!g.lgash[tri_index(r, cc + 1)]) slash_beta_turns(lab_lw(r, cc + 1), pos, &beta_ops);
      } else {
        emit_horizontal(lab_h(r - 1, cc));
      }
    }
    // Northeast boundary from the partial row down.
    for (int rr = r; rr <= n; ++rr) beta.push_back({++pos, g.re[tri_index(rr, rr)][0]});

    // Dangling gashes of the second K_T piece turn the first 1 after their
    // attachment point in beta into a 0.
    for (auto [ar, ac] : g.kt_right_anchors) {
      if (!g.down_filled[tri_index(ar, ac)]) continue;  // piece outside the shape
      const int gr = ar + 1, gc = ac + 1;
      if (gr <= n && g.up_filled[tri_index(gr, gc)]) continue;  // gash absorbed
      // Attachment point: the bottom vertex of D(ar,ac); the walk position
      // of the last event weakly left of that vertex.
      int attach = -1;
      if (ar == r && ac <= c) {
        int p2 = n - r;
        for (int cc = 1; cc <= ac; ++cc)
          p2 += (r < n && g.down_filled[tri_index(r + 1, cc)]) ? 2 : 1;
        attach = p2;
      } else if (ar == r - 1 && ac >= c) {
        int p2 = n - r;
        for (int cc = 1; cc <= c; ++cc)
          p2 += (r < n && g.down_filled[tri_index(r + 1, cc)]) ? 2 : 1;
        p2 += 1;  // leading edge
        for (int cc = c + 1; cc <= ac; ++cc)
          p2 += g.down_filled[tri_index(r, cc)] ? 2 : 1;
        attach = p2;
      }
      if (attach >= 0) beta_ops.push_back({attach, '1', '0', false});
    }
  }

  // Apply the rewrite rules in walk order.
  std::stable_sort(alpha_ops.begin(), alpha_ops.end(),
                   [](const TurnOp& a, const TurnOp& b) { return a.pos < b.pos; });
  std::stable_sort(beta_ops.begin(), beta_ops.end(),
                   [](const TurnOp& a, const TurnOp& b) { return a.pos < b.pos; });
  apply_ops(&alpha, alpha_ops);
  apply_ops(&beta, beta_ops);

  Reading out;
  for (const auto& s : alpha) out.alpha.push_back(s.ch);
  for (const auto& s : beta) out.beta.push_back(s.ch);

  // 10K leading edges: the first 1 after the edge is exchanged with the 0
  // immediately to its left.
  for (auto [p2, _] : kt_swap) {
    size_t start = 0;
    for (size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i].pos > p2) { start = i; break; }
    for (size_t i = start; i < out.alpha.size(); ++i) {
      if (out.alpha[i] == '1') {
        check(i > 0 && out.alpha[i - 1] == '0', "10K leading edge not preceded by 0 in alpha");
        std::swap(out.alpha[i], out.alpha[i - 1]);
        break;
      }
    }
  }

  check(out.alpha.size() == static_cast<size_t>(n), "alpha reading has wrong length");
  check(out.beta.size() == static_cast<size_t>(n), "beta reading has wrong length");
  return out;
}

}  // namespace

int num_degeneration_steps(int n) { return n * (n - 1) / 2; }

StepShape step_shape(int n, int index) {
  if (index < 0 || index > num_degeneration_steps(n))
    throw std::invalid_argument("step_shape: index out of range");
  StepShape s;
  s.n = n;
  s.index = index;
  if (index > 0) {
    int i = index;
    for (int r = 2; r <= n; ++r) {
      if (i <= r - 1) {
        s.row = r;
        s.pair = i;
        break;
      }
      i -= r - 1;
    }
  }
  return s;
}

LabelGrid::LabelGrid(int side) : n(side) {
  const size_t m = tri_count(n);
  lw.assign(m, "");
  le.assign(m, "");
  rw.assign(m, "");
  re.assign(m, "");
  h.assign(m, "");
  up_filled.assign(m, 0);
  down_filled.assign(m, 0);
  rhombus_top.assign(m, 0);
  lgash.assign(m, 0);
  rgash.assign(m, 0);
}

void LabelGrid::set_ledge(int r, int c, const std::string& label) {
  lw[tri_index(r, c)] = label;
  le[tri_index(r, c)] = label;
}
void LabelGrid::set_redge(int r, int c, const std::string& label) {
  rw[tri_index(r, c)] = label;
  re[tri_index(r, c)] = label;
}
void LabelGrid::set_hedge(int r, int c, const std::string& label) { h[tri_index(r, c)] = label; }

PartialPuzzle truncate_filling(const Filling& f, const PieceSet& ps, int step) {
  if (ps.has_k_double)
    throw std::invalid_argument(
        "truncate_filling: the original K piece spans beyond the staircase shapes; "
        "use the alternate K pieces for traces");
  PartialPuzzle p;
  p.shape = step_shape(f.n, step);
  p.grid = LabelGrid(f.n);
  LabelGrid& g = p.grid;
  auto text = [&](int8_t lbl) -> std::string {
    return lbl < 0 ? std::string() : ps.label_text(lbl);
  };
  for (int r = 1; r <= f.n; ++r) {
    for (int c = 1; c <= r; ++c) {
      const size_t i = tri_index(r, c);
      g.lw[i] = text(f.ledge_w[i]);
      g.le[i] = text(f.ledge_e[i]);
      g.rw[i] = text(f.redge_w[i]);
      g.re[i] = text(f.redge_e[i]);
      g.h[i] = text(f.hedge[i]);
      g.rhombus_top[i] = f.rhombus_top[i];
      g.lgash[i] = f.ledge_gash[i];
      g.rgash[i] = f.redge_gash[i];
    }
  }
  // Occupancy: staircase cells, then whole composite pieces.
  const StepShape& s = p.shape;
  auto mark_up = [&](int r, int c) { g.up_filled[tri_index(r, c)] = 1; };
  auto mark_down = [&](int r, int c) { g.down_filled[tri_index(r, c)] = 1; };
  if (!s.empty()) {
    const int last_row = s.complete() ? f.n : s.row;
    for (int r = 1; r < last_row; ++r)
      for (int c = 1; c <= r; ++c) {
        mark_up(r, c);
        if (c < r) mark_down(r, c);
      }
    const int pairs = s.complete() ? f.n - 1 : s.pair;
    for (int c = 1; c <= pairs; ++c) {
      mark_up(last_row, c);
      mark_down(last_row, c);
    }
    if (s.complete()) mark_up(f.n, f.n);
  }
  // Equivariant rhombus bottoms dangle below filled tops.
  for (int r = 1; r < f.n; ++r)
    for (int c = 1; c <= r; ++c)
      if (g.up_filled[tri_index(r, c)] && f.rhombus_top[tri_index(r, c)])
        mark_down(r + 1, c);
  // Second K_T piece anchors, for the dangling-gash rule.
  if (ps.has_kt_pieces) {
    for (int r = 2; r <= f.n; ++r)
      for (int c = 1; c < r; ++c)
        if (f.down_catalog[tri_index(r, c)] == ps.kt_right_catalog)
          g.kt_right_anchors.emplace_back(r, c);
  }
  return p;
}

std::string read_alpha(const PartialPuzzle& p) { return read_both(p).alpha; }
std::string read_beta(const PartialPuzzle& p) { return read_both(p).beta; }

std::vector<TraceEntry> trace_filling(const Filling& f, const PieceSet& ps) {
  std::vector<TraceEntry> out;
  const int steps = num_degeneration_steps(f.n);
  for (int i = 0; i <= steps; ++i) {
    PartialPuzzle p = truncate_filling(f, ps, i);
    Reading r = read_both(p);
    out.push_back({i, r.alpha, r.beta});
  }
  return out;
}

std::string trace_to_tsv(const std::vector<TraceEntry>& trace) {
  std::ostringstream os;
  for (const auto& e : trace) os << e.step << '\t' << e.alpha << '\t' << e.beta << '\n';
  return os.str();
}

}  // namespace schubert
