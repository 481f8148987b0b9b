#include "schubert/mondrian.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

MSquare intersect(const MSquare& a, const MSquare& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

MSquare span_of(const MSquare& a, const MSquare& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Index of the unique unnested D square (0-based), or -1 when all nested.
// D_j is unnested when it does not contain every lower-index D square.
int unnested_d(const std::vector<MSquare>& D) {
  for (size_t j = 1; j < D.size(); ++j)
    for (size_t h = 0; h < j; ++h)
      if (!D[j].contains(D[h])) return static_cast<int>(j);
  return -1;
}

void shift(MSquare& s, int by) {
  s.lo += by;
  s.hi += by;
}

}  // namespace

bool MondrianTableau::terminal() const { return A.empty() && B.empty() && unnested_d(D) == -1; }

std::string MondrianTableau::to_string() const {
  std::ostringstream os;
  const int base_a = static_cast<int>(D.size()) + 1;
  for (size_t i = 0; i < A.size(); ++i)
    os << "A" << base_a + static_cast<int>(i) << ":[" << A[i].lo << ',' << A[i].hi << "] ";
  for (size_t i = 0; i < B.size(); ++i)
    os << "B" << i + 1 << ":[" << B[i].lo << ',' << B[i].hi << "] ";
  for (size_t i = 0; i < D.size(); ++i)
    os << "D" << i + 1 << ":[" << D[i].lo << ',' << D[i].hi << "] ";
  os << "outer:[1," << m << "]";
  return os.str();
}

std::optional<std::string> admissibility_violation(const MondrianTableau& t) {
  // (1) the outer square contains the entire tableau.
  auto all_squares = [&] {
    std::vector<MSquare> v = t.A;
    v.insert(v.end(), t.B.begin(), t.B.end());
    v.insert(v.end(), t.D.begin(), t.D.end());
    return v;
  }();
  for (const auto& s : all_squares) {
    if (s.lo < 1 || s.hi > t.m || s.lo > s.hi) return "(1) square outside the outer square";
  }
  // (2) A squares nested, distinct, left aligned, strictly containing all D
  // squares; #A + #D = k counting the outer square as A_k.
  if (static_cast<int>(t.A.size() + t.D.size()) != t.k - 1)
    return "(2) wrong number of A and D squares";
  if (t.A.size() != t.B.size()) return "(3) A and B counts differ";
  for (size_t i = 0; i < t.A.size(); ++i) {
    if (t.A[i].lo != 1) return "(2) A square not left aligned";
    if (i + 1 < t.A.size() && t.A[i].hi >= t.A[i + 1].hi) return "(2) A squares not nested/distinct";
    if (t.A[i].hi >= t.m) return "(2) A square equals the outer square";
    for (const auto& d : t.D)
      if (!(t.A[i].contains(d) && t.A[i].side() > d.side())) return "(2) A square does not strictly contain a D square";
  }
  // (3) B squares nested, distinct, right aligned; no D square inside the
  // largest non-outer B square; MM and S between the A and B chains.
  for (size_t i = 0; i < t.B.size(); ++i) {
    if (t.B[i].hi != t.m) return "(3) B square not right aligned";
    if (i + 1 < t.B.size() && t.B[i].lo <= t.B[i + 1].lo) return "(3) B squares not nested/distinct";
    if (t.B[i].lo <= 1) return "(3) B square equals the outer square";
  }
  if (!t.B.empty())
    for (const auto& d : t.D)
      if (t.B.back().contains(d)) return "(3) D square contained in the largest B square";
  // MM and S among the surviving squares.  With #D = i-1, A-list position p
  // holds A_{i+p}; its MM partner B_{k-i-p+1} survives for p >= 1 and its
  // S partner B_{k-i-p} for p <= size-1.
  for (size_t p = 1; p < t.A.size(); ++p)
    if (!t.A[p].meets(t.B[t.B.size() - p])) return "(3) MM rule fails";
  for (size_t p = 0; p < t.A.size(); ++p)
    if (!t.A[p].touches_or_meets(t.B[t.B.size() - 1 - p])) return "(3) S rule fails";
  // (4) D squares distinct, at most one unnested, with the southwest pattern.
  for (size_t i = 0; i < t.D.size(); ++i)
    for (size_t j = i + 1; j < t.D.size(); ++j)
      if (t.D[i] == t.D[j]) return "(4) D squares not distinct";
  int unn = unnested_d(t.D);
  if (unn != -1) {
    const size_t j = static_cast<size_t>(unn);
    for (size_t h = 0; h < t.D.size(); ++h) {
      if (h == j) continue;
      if (h < j) {
        if (t.D[j].contains(t.D[h])) return "(4) unnested D contains a lower D";
        if (!(t.D[h].lo < t.D[j].lo && t.D[h].hi < t.D[j].hi))
          return "(4) lower D squares must lie southwest of the unnested one";
      } else {
        if (!t.D[h].contains(t.D[j])) return "(4) unnested D not contained in higher D";
      }
      for (size_t s = h + 1; s < t.D.size(); ++s) {
        if (s == j || h == j) continue;
        if (!t.D[s].contains(t.D[h])) return "(4) nested D squares out of order";
      }
    }
    if (j >= 1 && !t.D[j - 1].touches_or_meets(t.D[j]))
      return "(4) D_{j-1} and D_j do not share a square or corner";
    if (unnested_d(std::vector<MSquare>(t.D.begin(), t.D.begin() + static_cast<long>(j))) != -1)
      return "(4) more than one unnested D square";
  }
  // (5) span condition: the k-plane's dimensions inside squares disjoint
  // from S1 must fit in the span alongside S1.  Squares merely overlapping
  // S1 force nothing outside it, so they are not counted (the literal
  // every-square count already fails on the initial tableau of
  // sigma_{2,1} x sigma_{3,2,1} in G(3,6), which the rules produce).
  for (const auto& s1 : all_squares) {
    for (const auto& s2 : all_squares) {
      MSquare sp = span_of(s1, s2);
      int r = 0;
      for (const auto& s : all_squares)
        if (sp.contains(s) && !s.meets(s1)) ++r;
      if (s1.side() > sp.side() - r) return "(5) span condition fails";
    }
  }
  return std::nullopt;
}

bool is_admissible(const MondrianTableau& t) { return !admissibility_violation(t).has_value(); }

std::optional<MondrianTableau> init_product(const SchubertIndex& lambda,
                                            const SchubertIndex& mu, int k, int n) {
  if (lambda.k() != k || lambda.n() != n || mu.k() != k || mu.n() != n)
    throw std::invalid_argument("init_product: classes must live in G(k,n)");
  std::vector<MSquare> A(static_cast<size_t>(k)), B(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    A[static_cast<size_t>(j - 1)] = {1, n - k + j - lambda.part(j - 1)};
    B[static_cast<size_t>(j - 1)] = {k - j + 1 + mu.part(j - 1), n};
  }
  // MM rule: A_i must meet B_{k-i+1}.
  for (int i = 1; i <= k; ++i)
    if (!A[static_cast<size_t>(i - 1)].meets(B[static_cast<size_t>(k - i)])) return std::nullopt;
  // OS rule: restrict everything to the outer square.
  MSquare outer = intersect(A.back(), B.back());
  for (auto& s : A) s = intersect(s, outer);
  for (auto& s : B) s = intersect(s, outer);
  // S rule: delete the columns between A_i and B_{k-i} when they are apart.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= k - 1; ++i) {
      const MSquare& a = A[static_cast<size_t>(i - 1)];
      const MSquare& b = B[static_cast<size_t>(k - i - 1)];
      if (a.hi + 1 < b.lo) {
        const int cut_lo = a.hi + 1, cut_hi = b.lo - 1, cut = cut_hi - cut_lo + 1;
        auto remove_cols = [&](MSquare& s) {
          int lo = s.lo, hi = s.hi;
          if (lo > cut_hi) lo -= cut;
          else if (lo >= cut_lo) lo = cut_lo;
          if (hi >= cut_hi) hi -= cut;
          else if (hi >= cut_lo) hi = cut_lo - 1;
          s = {lo, hi};
        };
        for (auto& s : A) remove_cols(s);
        for (auto& s : B) remove_cols(s);
        remove_cols(outer);
        changed = true;
      }
    }
  }
  MondrianTableau t;
  t.k = k;
  t.n = n;
  t.m = outer.side();
  const int base = outer.lo - 1;
  for (int j = 1; j <= k - 1; ++j) {
    MSquare a = A[static_cast<size_t>(j - 1)];
    MSquare b = B[static_cast<size_t>(j - 1)];
    t.A.push_back({a.lo - base, a.hi - base});
    t.B.push_back({b.lo - base, b.hi - base});
  }
  if (auto why = admissibility_violation(t))
    throw std::logic_error("init_product produced an inadmissible tableau: " + *why +
                           " [" + t.to_string() + "]");
  return t;
}

namespace {

void renormalize_after_left_cut(MondrianTableau& t) {
  // The outer square lost its first column; every square is clipped to
  // [2, m] and shifted down by one.
  for (auto* list : {&t.A, &t.B, &t.D})
    for (auto& s : *list) {
      s.lo = std::max(s.lo, 2) - 1;
      s.hi = s.hi - 1;
    }
  t.m -= 1;
}

}  // namespace

std::vector<MondrianTableau> step(const MondrianTableau& t) {
  if (auto why = admissibility_violation(t))
    throw std::invalid_argument("step: inadmissible input: " + *why + " [" + t.to_string() + "]");
  if (t.terminal()) throw std::invalid_argument("step: tableau is terminal");

  std::vector<MondrianTableau> out;
  const int unn = unnested_d(t.D);

  if (unn == -1) {
    // Active square A_i (the smallest A square), paired with B_{k-i}.
    const int i = static_cast<int>(t.D.size()) + 1;
    MondrianTableau moved = t;
    MSquare active = moved.A.front();
    const int old_lo = active.lo;
    shift(active, +1);
    moved.A.front() = active;
    for (auto& d : moved.D)
      if (d.lo == old_lo) shift(d, +1);

    const MSquare b = moved.B.back();  // B_{k-i}

    // Tableau 1: replace A_i and B_{k-i} by their new intersection D_i.
    {
      MondrianTableau t1 = moved;
      t1.A.erase(t1.A.begin());
      t1.B.pop_back();
      MSquare di = intersect(active, b);
      t1.D.push_back(di);
      if (!t1.B.empty()) {
        const MSquare& next_b = t1.B.back();  // B_{k-i-1}
        if (di.hi + 1 < next_b.lo) {
          const int slide = next_b.lo - 1 - di.hi;
          for (auto& d : t1.D) shift(d, slide);
        }
      }
      out.push_back(std::move(t1));
    }
    // Tableau 2: shrink the outer square to the new span of A_i and B_{k-i};
    // skipped when A_i or B_{k-i} were as large as possible.
    const bool a_maxed =
        (t.A.size() >= 2 ? t.A[1].side() : t.m) == t.A.front().side() + 1;
    const bool b_maxed = t.B.back().side() == t.m - i;
    if (!a_maxed && !b_maxed) {
      MondrianTableau t2 = moved;
      renormalize_after_left_cut(t2);
      out.push_back(std::move(t2));
    }
  } else {
    // Active square D_{j-1}, merged toward the unique unnested D_j.
    const size_t j = static_cast<size_t>(unn);  // 0-based position of D_j
    MondrianTableau moved = t;
    MSquare active = moved.D[j - 1];
    const int old_lo = active.lo;
    shift(active, +1);
    moved.D[j - 1] = active;
    for (size_t h = 0; h < j - 1; ++h)
      if (moved.D[h].lo == old_lo) shift(moved.D[h], +1);

    const MSquare dj = moved.D[j];

    // Tableau 1: intersection becomes D_{j-1}, the old span becomes D_j.
    {
      MondrianTableau t1 = moved;
      t1.D[j - 1] = intersect(active, dj);
      t1.D[j] = span_of(MSquare{old_lo, old_lo + active.side() - 1}, dj);
      if (j >= 2 && !t1.D[j - 2].touches_or_meets(t1.D[j - 1])) {
        const int slide = t1.D[j - 1].lo - 1 - t1.D[j - 2].hi;
        for (size_t h = 0; h + 1 <= j - 1; ++h) shift(t1.D[h], slide);
      }
      out.push_back(std::move(t1));
    }
    // Tableau 2: keep the moved squares; dropped exactly when D_{j-1} and
    // D_j are as large as possible: the span of D_j and D_{j-1} exceeds the
    // side of D_j by less than j-1, or the move made D_{j-1} contain D_j.
    {
      MondrianTableau t2 = moved;
      const bool swallowed = t2.D[j - 1].contains(t2.D[j]);
      const int slack = span_of(t2.D[j - 1], t2.D[j]).side() - t2.D[j].side();
      if (!swallowed && slack >= static_cast<int>(j))
        out.push_back(std::move(t2));
    }
  }

  for (const auto& child : out)
    if (auto why = admissibility_violation(child))
      throw std::logic_error("step produced an inadmissible tableau: " + *why + " [" +
                             child.to_string() + "] from [" + t.to_string() + "]");
  return out;
}

SchubertIndex terminal_class(const MondrianTableau& t) {
  if (!t.terminal()) throw std::invalid_argument("terminal_class: tableau is not terminal");
  std::vector<int> sizes;
  for (const auto& d : t.D) sizes.push_back(d.side());
  sizes.push_back(t.m);
  std::vector<int> lambda;
  for (int j = 1; j <= t.k; ++j)
    lambda.push_back(t.n - t.k + j - sizes[static_cast<size_t>(j - 1)]);
  return SchubertIndex(t.k, t.n, lambda);
}

MondrianResult play(const SchubertIndex& lambda, const SchubertIndex& mu, int k, int n,
                    std::vector<std::string>* trace_lines) {
  MondrianResult result;
  auto start = init_product(lambda, mu, k, n);
  if (!start) return result;
  const long max_moves = static_cast<long>(n) * k * (n * (n - 1) / 2);
  // Depth-first resolution of the game tree.
  std::vector<std::pair<MondrianTableau, long>> stack;
  stack.emplace_back(*start, 0);
  while (!stack.empty()) {
    auto [cur, depth] = stack.back();
    stack.pop_back();
    if (trace_lines) trace_lines->push_back(cur.to_string());
    if (depth > max_moves)
      throw std::logic_error("play: game exceeded the move bound; rules are inconsistent");
    if (cur.terminal()) {
      result[terminal_class(cur)] += 1;
      continue;
    }
    auto children = step(cur);
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.emplace_back(std::move(*it), depth + 1);
  }
  return result;
}

std::string mondrian_to_svg(const MondrianTableau& t) {
  // Square [lo,hi] spans anti-diagonal cells lo..hi: in board coordinates
  // its corners are (lo-1, lo-1) and (hi, hi) with y drawn downward from m.
  const double u = 36.0;
  const double w = t.m * u;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 20 << "\" height=\""
     << w + 20 << "\" viewBox=\"-10 -10 " << w + 20 << ' ' << w + 20 << "\">\n";
  for (int i = 1; i <= t.m; ++i) {
    double x = (i - 1) * u, y = w - i * u;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << u << "\" height=\"" << u
       << "\" fill=\"#f2f2f2\" stroke=\"#ccc\"/>\n";
  }
  auto draw = [&](const MSquare& s, const char* color, const std::string& label) {
    double x = (s.lo - 1) * u, y = w - s.hi * u, side = s.side() * u;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << side << "\" height=\""
       << side << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << x + 4 << "\" y=\"" << y + 14 << "\" fill=\"" << color
       << "\" font-size=\"12\" font-family=\"monospace\">" << label << "</text>\n";
  };
  draw(MSquare{1, t.m}, "#888", "outer");
  const int base_a = static_cast<int>(t.D.size()) + 1;
  for (size_t i = 0; i < t.A.size(); ++i)
    draw(t.A[i], "#b22", "A" + std::to_string(base_a + static_cast<int>(i)));
  for (size_t i = 0; i < t.B.size(); ++i)
    draw(t.B[i], "#22b", "B" + std::to_string(i + 1));
  for (size_t i = 0; i < t.D.size(); ++i)
    draw(t.D[i], "#282", "D" + std::to_string(i + 1));
  os << "</svg>\n";
  return os.str();
}

FlagString quantum_tableau(const SchubertIndex& lambda, int d) {
  const int k = lambda.k(), n = lambda.n();
  if (d < 0 || d > k || k + d > n)
    throw std::invalid_argument("quantum_tableau: need 0 <= d <= k and k + d <= n");
  // Jump positions of V_2: the p_j of sigma_lambda plus the d largest free
  // positions; jump positions of V_1: p_{d+1}, ..., p_k.
  std::set<int> p;
  for (int j = 1; j <= k; ++j) p.insert(n - k + j - lambda.part(j - 1));
  std::set<int> s2 = p;
  for (int pos = n; pos >= 1 && static_cast<int>(s2.size()) < k + d; --pos) s2.insert(pos);
  std::set<int> s1;
  {
    int j = 0;
    for (int pos = 1; pos <= n; ++pos) {
      if (p.count(pos)) {
        ++j;
        if (j >= d + 1) s1.insert(pos);
      }
    }
  }
  if (static_cast<int>(s2.size()) != k + d || static_cast<int>(s1.size()) != k - d)
    throw std::logic_error("quantum_tableau: jump set construction failed");
  std::vector<int> steps;
  if (k - d > 0) steps.push_back(k - d);
  if (k + d != k - d) steps.push_back(k + d);
  const int r = static_cast<int>(steps.size());
  std::string digits(static_cast<size_t>(n), '0');
  for (int pos = 1; pos <= n; ++pos) {
    if (s1.count(pos))
      digits[static_cast<size_t>(pos - 1)] = static_cast<char>('0' + r);
    else if (s2.count(pos))
      digits[static_cast<size_t>(pos - 1)] = '1';
  }
  return FlagString(steps, n, digits);
}

}  // namespace schubert
