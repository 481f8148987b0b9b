#include "schubert/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace schubert {

namespace {

constexpr int8_t kUnset = -1;

struct CellRef {
  bool up;
  int r, c;
};

std::vector<CellRef> scan_order(int n) {
  std::vector<CellRef> cells;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= r; ++c) {
      cells.push_back({true, r, c});
      if (c < r) cells.push_back({false, r, c});
    }
  }
  return cells;
}

// Backtracking filler.  State is plain vectors so frontier nodes can be
// copied for the parallel sweep.
struct Filler {
  const PieceSet* ps = nullptr;
  int n = 0;
  std::string alpha, beta;
  std::optional<std::string> gamma;

  std::vector<int8_t> lw, le, rw, re, h;
  std::vector<int16_t> up_cat, down_cat;
  std::vector<uint8_t> rhombus_top;
  std::vector<uint8_t> lgash, rgash;
  int neg_pieces = 0;
  std::vector<std::pair<int, int>> eqvar;

  // Candidate tables specialized per piece set.
  std::vector<std::vector<UpCand>> up_by_left;
  std::vector<std::vector<DownCand>> down_by_key;  // key = top * L + west
  std::vector<std::vector<RhombusCand>> rhombus_by_nw;
  std::vector<std::vector<KRhombusCand>> krh_by_left;
  int num_labels = 0;
  Label l0 = -1, l1 = -1, l10 = -1;

  struct Undo {
    enum Kind : uint8_t { Edge, Cell, Flag, Eqvar, Sign } kind;
    int slot;
    int8_t old_value;
    int array;  // 0=lw 1=le 2=rw 3=re 4=h 5=upcat 6=downcat 7=rhombustop 8=lgash 9=rgash
  };
  std::vector<Undo> trail;

  std::function<void(const Filler&)> emit;

  void init(const PieceSet& pieces, int side, const std::string& a, const std::string& b,
            const std::optional<std::string>& g) {
    ps = &pieces;
    n = side;
    alpha = a;
    beta = b;
    gamma = g;
    const size_t m = tri_count(n);
    lw.assign(m, kUnset);
    le.assign(m, kUnset);
    rw.assign(m, kUnset);
    re.assign(m, kUnset);
    h.assign(m, kUnset);
    up_cat.assign(m, -1);
    down_cat.assign(m, -1);
    rhombus_top.assign(m, 0);
    lgash.assign(m, 0);
    rgash.assign(m, 0);

    num_labels = static_cast<int>(ps->labels().size());
    up_by_left.assign(static_cast<size_t>(num_labels), {});
    for (const auto& cand : ps->up) up_by_left[static_cast<size_t>(cand.left)].push_back(cand);
    down_by_key.assign(static_cast<size_t>(num_labels) * num_labels, {});
    for (const auto& cand : ps->down)
      down_by_key[static_cast<size_t>(cand.top) * num_labels + cand.west].push_back(cand);
    rhombus_by_nw.assign(static_cast<size_t>(num_labels), {});
    for (const auto& cand : ps->rhombi) rhombus_by_nw[static_cast<size_t>(cand.nw)].push_back(cand);
    krh_by_left.assign(static_cast<size_t>(num_labels), {});
    for (const auto& cand : ps->k_rhombi) krh_by_left[static_cast<size_t>(cand.uleft)].push_back(cand);
    auto maybe = [&](const char* t) -> Label {
      for (int i = 0; i < num_labels; ++i)
        if (ps->labels()[static_cast<size_t>(i)] == t) return i;
      return -1;
    };
    l0 = maybe("0");
    l1 = maybe("1");
    l10 = maybe("10");

    // Seed the boundary labels.
    for (int r = 1; r <= n; ++r) {
      Label a_lbl = digit_label(alpha[static_cast<size_t>(n - r)]);
      set_raw(0, tri_index(r, 1), static_cast<int8_t>(a_lbl));
      set_raw(1, tri_index(r, 1), static_cast<int8_t>(a_lbl));
      Label b_lbl = digit_label(beta[static_cast<size_t>(r - 1)]);
      set_raw(2, tri_index(r, r), static_cast<int8_t>(b_lbl));
      set_raw(3, tri_index(r, r), static_cast<int8_t>(b_lbl));
    }
    if (gamma) {
      for (int c = 1; c <= n; ++c)
        set_raw(4, tri_index(n, c), static_cast<int8_t>(digit_label((*gamma)[static_cast<size_t>(c - 1)])));
    }
  }

  Label digit_label(char ch) const {
    for (int i = 0; i < num_labels; ++i) {
      const auto& t = ps->labels()[static_cast<size_t>(i)];
      if (t.size() == 1 && t[0] == ch) return i;
    }
    throw std::invalid_argument(std::string("boundary digit '") + ch + "' is not a piece label");
  }

  int8_t* array_ptr(int which) {
    switch (which) {
      case 0: return lw.data();
      case 1: return le.data();
      case 2: return rw.data();
      case 3: return re.data();
      case 4: return h.data();
      default: return nullptr;
    }
  }

  void set_raw(int which, size_t idx, int8_t value) { array_ptr(which)[idx] = value; }

  bool set_half(int which, size_t idx, int lbl) {
    int8_t* slot = array_ptr(which) + idx;
    if (*slot == lbl) return true;
    if (*slot != kUnset) return false;
    trail.push_back({Undo::Edge, static_cast<int>(idx), *slot, which});
    *slot = static_cast<int8_t>(lbl);
    return true;
  }

  // Overrides an already-set side (gash semantics).
  void force_half(int which, size_t idx, int lbl) {
    int8_t* slot = array_ptr(which) + idx;
    trail.push_back({Undo::Edge, static_cast<int>(idx), *slot, which});
    *slot = static_cast<int8_t>(lbl);
  }

  bool set_edge(int west_arr, int east_arr, size_t idx, int lbl) {
    return set_half(west_arr, idx, lbl) && set_half(east_arr, idx, lbl);
  }

  // Writes a / or \ edge from one of its sides.  A previously declared gash
  // keeps the two sides independent, so only the writer's side is touched.
  bool set_ledge_from(size_t idx, int lbl, bool west_side) {
    if (lgash[idx]) return set_half(west_side ? 0 : 1, idx, lbl);
    return set_half(0, idx, lbl) && set_half(1, idx, lbl);
  }
  bool set_redge_from(size_t idx, int lbl, bool west_side) {
    if (rgash[idx]) return set_half(west_side ? 2 : 3, idx, lbl);
    return set_half(2, idx, lbl) && set_half(3, idx, lbl);
  }

  void set_cell(bool up_cell, size_t idx, int16_t cat) {
    auto& arr = up_cell ? up_cat : down_cat;
    trail.push_back({Undo::Cell, static_cast<int>(idx), static_cast<int8_t>(0),
                     up_cell ? 5 : 6});
    arr[idx] = cat;
  }

  void set_flag(std::vector<uint8_t>& arr, int which, size_t idx) {
    trail.push_back({Undo::Flag, static_cast<int>(idx), static_cast<int8_t>(arr[idx]), which});
    arr[idx] = 1;
  }

  void push_eqvar(int i, int j) {
    eqvar.emplace_back(i, j);
    trail.push_back({Undo::Eqvar, 0, 0, 0});
  }

  void push_sign() {
    ++neg_pieces;
    trail.push_back({Undo::Sign, 0, 0, 0});
  }

  void rollback(size_t mark) {
    while (trail.size() > mark) {
      const Undo& u = trail.back();
      switch (u.kind) {
        case Undo::Edge: array_ptr(u.array)[static_cast<size_t>(u.slot)] = u.old_value; break;
        case Undo::Cell:
          (u.array == 5 ? up_cat : down_cat)[static_cast<size_t>(u.slot)] = -1;
          break;
        case Undo::Flag: {
          auto& arr = u.array == 7 ? rhombus_top : (u.array == 8 ? lgash : rgash);
          arr[static_cast<size_t>(u.slot)] = static_cast<uint8_t>(u.old_value);
          break;
        }
        case Undo::Eqvar: eqvar.pop_back(); break;
        case Undo::Sign: --neg_pieces; break;
      }
      trail.pop_back();
    }
  }

  bool plain_bottom_ok(Label lbl) const {
    const auto& t = ps->label_text(lbl);
    return t.size() == 1 && ps->boundary_allows(t[0]);
  }

  void solve(const std::vector<CellRef>& cells, size_t index, size_t stop_depth,
             std::vector<Filler>* frontier) {
    if (frontier && index >= stop_depth) {
      frontier->push_back(*this);
      return;
    }
    if (index == cells.size()) {
      emit(*this);
      return;
    }
    const CellRef cell = cells[index];
    const size_t idx = tri_index(cell.r, cell.c);
    if (cell.up) {
      if (up_cat[idx] != -1) {  // pre-filled by a composite piece
        solve(cells, index + 1, stop_depth, frontier);
        return;
      }
      place_up(cells, index, cell.r, cell.c, stop_depth, frontier);
    } else {
      if (down_cat[idx] != -1) {
        solve(cells, index + 1, stop_depth, frontier);
        return;
      }
      place_down(cells, index, cell.r, cell.c, stop_depth, frontier);
    }
  }

  void place_up(const std::vector<CellRef>& cells, size_t index, int r, int c,
                size_t stop_depth, std::vector<Filler>* frontier) {
    const size_t idx = tri_index(r, c);
    const int8_t left = le[idx];
    if (left == kUnset) throw std::logic_error("engine: up cell reached with unset left edge");
    for (const auto& cand : up_by_left[static_cast<size_t>(left)]) {
      if (r == n && !plain_bottom_ok(cand.bottom)) continue;
      const size_t mark = trail.size();
      if (set_redge_from(idx, cand.right, true) && set_half(4, idx, cand.bottom)) {
        set_cell(true, idx, static_cast<int16_t>(cand.catalog));
        solve(cells, index + 1, stop_depth, frontier);
      }
      rollback(mark);
    }
    // Vertical equivariant rhombus occupying U(r,c) and D(r+1,c).
    if (r < n) {
      for (const auto& cand : rhombus_by_nw[static_cast<size_t>(left)]) {
        const size_t below = tri_index(r + 1, c);
        if (down_cat[below] != -1) continue;
        const size_t mark = trail.size();
        if (set_redge_from(idx, cand.ne, true) && set_half(4, idx, cand.internal_h) &&
            set_redge_from(below, cand.sw, false) &&
            set_ledge_from(tri_index(r + 1, c + 1), cand.se, true)) {
          set_cell(true, idx, static_cast<int16_t>(cand.catalog));
          set_cell(false, below, static_cast<int16_t>(cand.catalog));
          set_flag(rhombus_top, 7, idx);
          push_eqvar(c, n - r + c);
          solve(cells, index + 1, stop_depth, frontier);
        }
        rollback(mark);
      }
    }
    // Alternate K-theory rhombus occupying U(r,c) and D(r,c).
    if (c < r) {
      for (const auto& cand : krh_by_left[static_cast<size_t>(left)]) {
        if (r == n && !plain_bottom_ok(cand.ubottom)) continue;
        const size_t dcell = tri_index(r, c);
        if (down_cat[dcell] != -1) continue;
        const size_t mark = trail.size();
        if (set_half(4, idx, cand.ubottom) && set_edge(2, 3, idx, cand.internal) &&
            h[tri_index(r - 1, c)] == cand.dtop &&
            set_ledge_from(tri_index(r, c + 1), cand.deast, true)) {
          set_cell(true, idx, static_cast<int16_t>(cand.catalog));
          set_cell(false, dcell, static_cast<int16_t>(cand.catalog));
          if (cand.sign < 0) push_sign();
          solve(cells, index + 1, stop_depth, frontier);
        }
        rollback(mark);
      }
    }
  }

  void place_down(const std::vector<CellRef>& cells, size_t index, int r, int c,
                  size_t stop_depth, std::vector<Filler>* frontier) {
    const size_t idx = tri_index(r, c);
    const int8_t top = h[tri_index(r - 1, c)];
    const int8_t west = re[idx];
    if (top == kUnset || west == kUnset)
      throw std::logic_error("engine: down cell reached with unset constraints");
    for (const auto& cand :
         down_by_key[static_cast<size_t>(top) * num_labels + static_cast<size_t>(west)]) {
      const size_t mark = trail.size();
      if (set_ledge_from(tri_index(r, c + 1), cand.east, true)) {
        set_cell(false, idx, static_cast<int16_t>(cand.catalog));
        solve(cells, index + 1, stop_depth, frontier);
      }
      rollback(mark);
    }
    if (ps->has_k_double) try_k_double(cells, index, r, c, stop_depth, frontier);
    if (ps->has_kt_pieces && r < n) {
      try_kt_left(cells, index, r, c, stop_depth, frontier);
      try_kt_right(cells, index, r, c, stop_depth, frontier);
    }
  }

  // Original K-theory piece: the size-2 down triangle covering D(r,c),
  // U(r,c+1), D(r,c+1) and D(r+1,c+1).  Boundary labels: top 0,1; SW side
  // 1,0; SE side 0,1 (top to bottom).  Internal edges are set to 10.
  void try_k_double(const std::vector<CellRef>& cells, size_t index, int r, int c,
                    size_t stop_depth, std::vector<Filler>* frontier) {
    if (c + 1 > r - 1 || r + 1 > n) return;
    const size_t d0 = tri_index(r, c);
    const size_t u1 = tri_index(r, c + 1);
    const size_t d1 = tri_index(r, c + 1);
    const size_t d2 = tri_index(r + 1, c + 1);
    if (up_cat[u1] != -1 || down_cat[d1] != -1 || down_cat[d2] != -1) return;
    if (h[tri_index(r - 1, c)] != l0 || re[d0] != l1) return;
    if (h[tri_index(r - 1, c + 1)] != l1) return;
    const size_t mark = trail.size();
    if (set_edge(0, 1, tri_index(r, c + 1), l10) && set_edge(2, 3, u1, l10) &&
        set_half(4, u1, l10) && set_edge(0, 1, tri_index(r, c + 2), l0) &&
        set_edge(2, 3, d2, l0) && set_edge(0, 1, tri_index(r + 1, c + 2), l1)) {
      set_cell(false, d0, static_cast<int16_t>(ps->k_double_catalog));
      set_cell(true, u1, static_cast<int16_t>(ps->k_double_catalog));
      set_cell(false, d1, static_cast<int16_t>(ps->k_double_catalog));
      set_cell(false, d2, static_cast<int16_t>(ps->k_double_catalog));
      push_sign();
      solve(cells, index + 1, stop_depth, frontier);
    }
    rollback(mark);
  }

  // First equivariant K piece: sits at D(r,c) immediately right of an
  // equivariant rhombus.  Top and left are 1; its right edge and the edge
  // dangling southwest below it are gashes (west/east labels 1/0 and 0/1).
  void try_kt_left(const std::vector<CellRef>& cells, size_t index, int r, int c,
                   size_t stop_depth, std::vector<Filler>* frontier) {
    const size_t idx = tri_index(r, c);
    if (!rhombus_top[idx]) return;
    if (h[tri_index(r - 1, c)] != l1 || re[idx] != l1) return;
    const size_t upper = tri_index(r, c + 1);
    const size_t lower = tri_index(r + 1, c + 1);
    if (le[lower] != l0) return;  // rhombus SE side, set when the rhombus was placed
    const size_t mark = trail.size();
    if (set_half(0, upper, l1) && set_half(1, upper, l0)) {
      force_half(1, lower, l1);
      set_flag(lgash, 8, upper);
      set_flag(lgash, 8, lower);
      set_cell(false, idx, static_cast<int16_t>(ps->kt_left_catalog));
      push_sign();
      solve(cells, index + 1, stop_depth, frontier);
    }
    rollback(mark);
  }

  // Second equivariant K piece at D(r,c): top 0, east 0; its west edge and
  // the edge dangling southeast are gashes.  Placeable only when the
  // already-determined edges to its right are a run of horizontal 0s
  // followed by a 1.  The cell to its west must be the 1/1/1 triangle: the
  // piece subtracts the intersection of the two branches of the ordinary
  // rule, which exist only there (left edge 10 admits a single filling, and
  // counting it breaks the t -> 1 specialization at n = 5).
  void try_kt_right(const std::vector<CellRef>& cells, size_t index, int r, int c,
                    size_t stop_depth, std::vector<Filler>* frontier) {
    const size_t idx = tri_index(r, c);
    if (h[tri_index(r - 1, c)] != l0 || rw[idx] != l1) return;
    if (le[idx] != l1) return;
    // Scan rightward: the first non-0 among the determined horizontal edges
    // (or the row's beta edge after them) must be a 1.
    bool ok = beta[static_cast<size_t>(r - 1)] == '1';
    for (int cc = c + 1; cc <= r - 1; ++cc) {
      const int8_t lbl = h[tri_index(r - 1, cc)];
      if (lbl == l0) continue;
      ok = (lbl == l1);
      break;
    }
    if (!ok) return;
    const size_t lower = tri_index(r + 1, c + 1);
    const size_t mark = trail.size();
    force_half(3, idx, l0);
    if (set_edge(0, 1, tri_index(r, c + 1), l0) && set_half(2, lower, l0) &&
        set_half(3, lower, l1)) {
      set_flag(rgash, 9, idx);
      set_flag(rgash, 9, lower);
      set_cell(false, idx, static_cast<int16_t>(ps->kt_right_catalog));
      push_sign();
      solve(cells, index + 1, stop_depth, frontier);
    }
    rollback(mark);
  }

  Filling snapshot() const {
    Filling f;
    f.n = n;
    f.alpha = alpha;
    f.beta = beta;
    f.gamma.resize(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c)
      f.gamma[static_cast<size_t>(c - 1)] = ps->label_text(h[tri_index(n, c)])[0];
    f.sign = (neg_pieces % 2 == 0) ? 1 : -1;
    f.eqvar = eqvar;
    f.ledge_w = lw;
    f.ledge_e = le;
    f.redge_w = rw;
    f.redge_e = re;
    f.hedge = h;
    f.up_catalog = up_cat;
    f.down_catalog = down_cat;
    f.rhombus_top = rhombus_top;
    f.ledge_gash = lgash;
    f.redge_gash = rgash;
    return f;
  }
};

void validate_boundary(const std::string& s, int n, const PieceSet& ps, const char* which) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument(std::string(which) + ": length must equal n");
  for (char c : s)
    if (!ps.boundary_allows(c))
      throw std::invalid_argument(std::string(which) + ": label '" + c +
                                  "' outside the boundary alphabet");
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCHUBERT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<Filling> enumerate_fillings(int n, const std::string& alpha,
                                        const std::string& beta, const PieceSet& pieces,
                                        const EnumerateOptions& opts) {
  if (n < 1) throw std::invalid_argument("enumerate_fillings: n >= 1");
  validate_boundary(alpha, n, pieces, "alpha");
  validate_boundary(beta, n, pieces, "beta");
  if (opts.gamma_filter) validate_boundary(*opts.gamma_filter, n, pieces, "gamma");

  const auto cells = scan_order(n);
  Filler root;
  root.init(pieces, n, alpha, beta, opts.gamma_filter);

  const unsigned threads = resolve_thread_count(opts.threads);
  std::vector<Filling> out;

  // Small grids finish faster than threads can be spawned.
  if (threads <= 1 || n < 7) {
    root.emit = [&](const Filler& f) { out.push_back(f.snapshot()); };
    root.solve(cells, 0, cells.size() + 1, nullptr);
    return out;
  }

  // Split the search tree at a fixed depth; each frontier node is finished
  // serially and results are concatenated in frontier order, so the output
  // is identical for every thread count.
  const size_t split_depth = std::min(cells.size(), static_cast<size_t>(9));
  std::vector<Filler> frontier;
  root.emit = [](const Filler&) {};
  root.solve(cells, 0, split_depth, &frontier);

  std::vector<std::vector<Filling>> results(frontier.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= frontier.size()) return;
      Filler f = frontier[i];
      f.emit = [&results, i](const Filler& done) { results[i].push_back(done.snapshot()); };
      f.solve(cells, split_depth, cells.size() + 1, nullptr);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& chunk : results)
    for (auto& f : chunk) out.push_back(std::move(f));
  return out;
}

Coefficient filling_weight(const Filling& f, const PieceSet& pieces) {
  switch (pieces.ring) {
    case RingKind::Integer:
      if (!f.eqvar.empty())
        throw std::logic_error("integer-ring filling carries equivariant factors");
      return BigInt(f.sign);
    case RingKind::Poly: {
      SparsePoly w = SparsePoly::constant(f.sign, 'y');
      for (auto [i, j] : f.eqvar) {
        if (j <= i) throw std::logic_error("equivariant factor with j <= i");
        w *= ht_weight_factor(i, j);
      }
      return w;
    }
    case RingKind::Laurent: {
      SparsePoly w = SparsePoly::constant(f.sign, 't');
      for (auto [i, j] : f.eqvar) {
        if (j <= i) throw std::logic_error("equivariant factor with j <= i");
        w *= kt_weight_factor(i, j);
      }
      return w;
    }
  }
  throw std::logic_error("unknown ring");
}

Expansion expand_product(const std::string& alpha, const std::string& beta,
                         const PieceSet& pieces, const EnumerateOptions& opts) {
  const int n = static_cast<int>(alpha.size());
  Expansion result;
  for (const auto& f : enumerate_fillings(n, alpha, beta, pieces, opts)) {
    Coefficient w = filling_weight(f, pieces);
    auto it = result.find(f.gamma);
    if (it == result.end())
      result.emplace(f.gamma, std::move(w));
    else
      it->second = coefficient_add(it->second, w);
  }
  for (auto it = result.begin(); it != result.end();)
    it = coefficient_is_zero(it->second) ? result.erase(it) : std::next(it);
  return result;
}

Coefficient coefficient(const std::string& alpha, const std::string& beta,
                        const std::string& gamma, const PieceSet& pieces,
                        const EnumerateOptions& opts) {
  EnumerateOptions filtered = opts;
  filtered.gamma_filter = gamma;
  Expansion e = expand_product(alpha, beta, pieces, filtered);
  if (auto it = e.find(gamma); it != e.end()) return it->second;
  if (pieces.ring == RingKind::Integer) return BigInt(0);
  return SparsePoly(pieces.ring == RingKind::Poly ? 'y' : 't');
}

std::map<std::string, BigInt> expand_int(const std::string& alpha, const std::string& beta,
                                         const PieceSet& pieces, const EnumerateOptions& opts) {
  std::map<std::string, BigInt> out;
  for (const auto& [g, c] : expand_product(alpha, beta, pieces, opts))
    out.emplace(g, std::get<BigInt>(c));
  return out;
}

std::map<std::string, SparsePoly> expand_poly(const std::string& alpha, const std::string& beta,
                                              const PieceSet& pieces,
                                              const EnumerateOptions& opts) {
  std::map<std::string, SparsePoly> out;
  for (const auto& [g, c] : expand_product(alpha, beta, pieces, opts))
    out.emplace(g, std::get<SparsePoly>(c));
  return out;
}

std::vector<std::string> boundary_strings(int n, const std::vector<int>& digit_counts) {
  int total = 0;
  for (int c : digit_counts) total += c;
  if (total != n) throw std::invalid_argument("boundary_strings: counts must sum to n");
  std::string start;
  for (size_t d = 0; d < digit_counts.size(); ++d)
    start += std::string(static_cast<size_t>(digit_counts[d]), static_cast<char>('0' + d));
  std::sort(start.begin(), start.end());
  std::vector<std::string> out;
  do {
    out.push_back(start);
  } while (std::next_permutation(start.begin(), start.end()));
  return out;
}

void verify_engine_conventions() {
  // Base case: sigma_0101^2 = sigma_0110 + sigma_1001 in G(2,4).
  const PieceSet& h = piece_set_for(Theory::H);
  auto basic = expand_int("0101", "0101", h);
  if (basic.size() != 2 || basic["0110"] != 1 || basic["1001"] != 1)
    throw std::logic_error("engine self-test failed on sigma_0101^2");
  // The second puzzle of sigma_010^2 carries weight y3-y2, not y2-y1; this
  // pins the boundary reading orientation (the mirrored convention fails).
  auto ht = expand_poly("010", "010", piece_set_for(Theory::HT));
  if (ht.size() != 2 || !(ht["010"] == ht_weight_factor(2, 3)) ||
      !(ht["100"] == SparsePoly::constant(1, 'y')))
    throw std::logic_error("engine self-test failed on the equivariant weight orientation");
}

}  // namespace schubert
