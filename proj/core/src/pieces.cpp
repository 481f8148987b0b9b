#include "schubert/pieces.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace schubert {

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::H: return "h";
    case Theory::K: return "k";
    case Theory::HT: return "ht";
    case Theory::KT: return "kt";
    case Theory::H2: return "h2";
    case Theory::H3: return "h3";
    case Theory::HT2: return "ht2";
  }
  return "?";
}

std::optional<Theory> theory_from_name(const std::string& name) {
  if (name == "h") return Theory::H;
  if (name == "k") return Theory::K;
  if (name == "ht") return Theory::HT;
  if (name == "kt") return Theory::KT;
  if (name == "h2") return Theory::H2;
  if (name == "h3") return Theory::H3;
  if (name == "ht2") return Theory::HT2;
  return std::nullopt;
}

int theory_steps(Theory t) {
  switch (t) {
    case Theory::H2:
    case Theory::HT2: return 2;
    case Theory::H3: return 3;
    default: return 1;
  }
}

// ---------------------------------------------------------------------------
// Label trees
// ---------------------------------------------------------------------------

namespace {

struct TreeParser {
  const std::string& s;
  size_t pos = 0;

  // Parses one node: digit or "(node)"-wrapped subtree followed by more.
  // Returns false on malformed input.
  bool parse_node(std::vector<int>* leaves, std::string* serial, bool top) {
    std::vector<std::string> parts;
    while (pos < s.size() && s[pos] != ')') {
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        parts.push_back(std::string(1, s[pos]));
        if (leaves) leaves->push_back(s[pos] - '0');
        ++pos;
      } else if (s[pos] == '(') {
        ++pos;
        std::string sub;
        if (!parse_node(leaves, &sub, false)) return false;
        if (pos >= s.size() || s[pos] != ')') return false;
        ++pos;
        parts.push_back("(" + sub + ")");
      } else {
        return false;
      }
    }
    if (parts.empty()) return false;
    // Left-association would be ambiguous; the grammar only ever produces
    // binary nodes, so more than two children at one level is rejected.
    if (parts.size() > 2) return false;
    if (serial) {
      *serial = parts.size() == 1 ? parts[0] : parts[0] + parts[1];
    }
    if (top && pos != s.size()) return false;
    return true;
  }
};

int paren_count_between(const std::string& text, size_t a, size_t b) {
  int count = 0;
  for (size_t i = a + 1; i < b; ++i)
    if (text[i] == '(' || text[i] == ')') ++count;
  return count;
}

}  // namespace

bool parse_label_tree(const std::string& text, std::vector<int>* leaves,
                      std::string* left, std::string* right) {
  if (text.empty()) return false;
  TreeParser p{text};
  std::vector<int> lv;
  if (!p.parse_node(&lv, nullptr, true)) return false;
  if (leaves) *leaves = lv;
  if (left || right) {
    // Re-scan for the top-level split point.
    int depth = 0;
    size_t split = std::string::npos;
    size_t first_end = 0;
    if (text[0] == '(') {
      for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') {
          --depth;
          if (depth == 0) { first_end = i + 1; break; }
        }
      }
    } else {
      first_end = 1;
    }
    if (first_end < text.size()) split = first_end;
    if (split == std::string::npos) {
      if (left) left->clear();
      if (right) right->clear();
    } else {
      auto strip = [](std::string t) {
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
        return t;
      };
      if (left) *left = strip(text.substr(0, split));
      if (right) *right = strip(text.substr(split));
    }
  }
  return true;
}

std::vector<int> label_leaves(const std::string& text) {
  std::vector<int> leaves;
  if (!parse_label_tree(text, &leaves, nullptr, nullptr))
    throw std::invalid_argument("label_leaves: malformed label '" + text + "'");
  return leaves;
}

std::optional<std::pair<std::string, std::string>> label_split(const std::string& text) {
  std::string left, right;
  if (!parse_label_tree(text, nullptr, &left, &right))
    throw std::invalid_argument("label_split: malformed label '" + text + "'");
  if (left.empty() && right.empty()) return std::nullopt;
  if (right.empty()) return std::nullopt;
  return std::make_pair(left, right);
}

bool label_tree_valid(const std::string& text, int max_digit) {
  std::vector<int> leaves;
  if (!parse_label_tree(text, &leaves, nullptr, nullptr)) return false;
  std::vector<size_t> leaf_pos;
  for (size_t i = 0; i < text.size(); ++i)
    if (std::isdigit(static_cast<unsigned char>(text[i]))) leaf_pos.push_back(i);
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] < 0 || leaves[i] > max_digit) return false;
    if (i + 1 < leaves.size()) {
      if (leaves[i] < leaves[i + 1]) return false;
      if (leaves[i] == leaves[i + 1] &&
          paren_count_between(text, leaf_pos[i], leaf_pos[i + 1]) != 3)
        return false;
    }
  }
  // A digit may appear at most twice.
  std::vector<int> count(10, 0);
  for (int d : leaves)
    if (++count[static_cast<size_t>(d)] > 2) return false;
  return true;
}

namespace {

// All binary-tree serializations over the given decreasing leaf sequence.
std::vector<std::string> tree_serializations(const std::vector<int>& leaves, size_t lo, size_t hi) {
  std::vector<std::string> out;
  if (hi - lo == 1) {
    out.push_back(std::string(1, static_cast<char>('0' + leaves[lo])));
    return out;
  }
  for (size_t mid = lo + 1; mid < hi; ++mid) {
    for (const auto& l : tree_serializations(leaves, lo, mid)) {
      for (const auto& r : tree_serializations(leaves, mid, hi)) {
        std::string ls = (mid - lo == 1) ? l : "(" + l + ")";
        std::string rs = (hi - mid == 1) ? r : "(" + r + ")";
        out.push_back(ls + rs);
      }
    }
  }
  return out;
}

const std::vector<std::string> kThreeStepExtraLabels = {
    "(3(2(10)))0", "(3(21))(10)", "(32)((21)0)", "3(((32)1)0)"};

}  // namespace

std::vector<std::string> valid_labels(int r) {
  if (r < 1 || r > 3)
    throw std::invalid_argument("valid_labels: the label grammar is defined for r in {1,2,3} only");
  std::vector<std::string> out;
  // Decreasing leaf sequences = subsets of {0..r} listed in decreasing order.
  std::vector<int> digits;
  for (int d = 0; d <= r; ++d) digits.push_back(d);
  const int m = r + 1;
  std::vector<std::vector<std::string>> by_len(static_cast<size_t>(m) + 1);
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> leaves;
    for (int d = r; d >= 0; --d)
      if (mask & (1 << d)) leaves.push_back(d);
    for (const auto& s : tree_serializations(leaves, 0, leaves.size()))
      by_len[leaves.size()].push_back(s);
  }
  for (auto& bucket : by_len) {
    std::sort(bucket.begin(), bucket.end());
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  if (r == 3)
    out.insert(out.end(), kThreeStepExtraLabels.begin(), kThreeStepExtraLabels.end());
  return out;
}

// ---------------------------------------------------------------------------
// PieceSet
// ---------------------------------------------------------------------------

Label PieceSet::label_id(const std::string& text) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text) return static_cast<Label>(i);
  throw std::invalid_argument("PieceSet: unknown label '" + text + "'");
}

Label PieceSet::add_label(const std::string& text) {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text) return static_cast<Label>(i);
  labels_.push_back(text);
  return static_cast<Label>(labels_.size() - 1);
}

bool PieceSet::is_plain_digit(Label l) const {
  const std::string& t = label_text(l);
  return t.size() == 1 && std::isdigit(static_cast<unsigned char>(t[0]));
}

bool PieceSet::boundary_allows(char digit) const {
  return boundary_.find(digit) != std::string::npos;
}

void PieceSet::add_triangle(const std::string& a, const std::string& b, const std::string& c,
                            bool rotatable) {
  const int cat = static_cast<int>(catalog.size());
  catalog.push_back({CatalogPiece::Shape::Triangle, {a, b, c}, +1, rotatable, false, ""});
  Label la = add_label(a), lb = add_label(b), lc = add_label(c);
  const Label e[3] = {la, lb, lc};
  std::set<std::tuple<Label, Label, Label>> ups, downs;
  const int nrot = rotatable ? 3 : 1;
  for (int rot = 0; rot < nrot; ++rot) {
    // Clockwise reading: up triangles as (left, right, bottom), down
    // triangles as (top, east, west).
    ups.insert({e[rot % 3], e[(rot + 1) % 3], e[(rot + 2) % 3]});
    if (rotatable) downs.insert({e[rot % 3], e[(rot + 1) % 3], e[(rot + 2) % 3]});
  }
  for (auto [x, y, z] : ups) up.push_back({x, y, z, cat});
  for (auto [t, east, west] : downs) down.push_back({t, west, east, cat});
}

void PieceSet::add_vertical_rhombus(const std::string& nw, const std::string& ne,
                                    const std::string& sw, const std::string& se,
                                    const std::string& internal) {
  const int cat = static_cast<int>(catalog.size());
  catalog.push_back({CatalogPiece::Shape::VerticalRhombus, {nw, ne, sw, se}, +1, false, true, ""});
  rhombi.push_back({add_label(nw), add_label(ne), add_label(sw), add_label(se),
                    add_label(internal), cat});
}

PieceSet pieces_cohomology_1step() {
  PieceSet ps;
  ps.theory = Theory::H;
  ps.ring = RingKind::Integer;
  ps.set_boundary("01");
  ps.add_triangle("0", "0", "0");
  ps.add_triangle("1", "1", "1");
  ps.add_triangle("1", "0", "10");
  return ps;
}

PieceSet pieces_ktheory(KVariant variant) {
  PieceSet ps = pieces_cohomology_1step();
  ps.theory = Theory::K;
  ps.kvariant = variant;
  if (variant == KVariant::Original) {
    // The size-2 down triangle: top edges 0,1; SW side 1,0; SE side 0,1;
    // counted with sign -1; may not be rotated.
    ps.has_k_double = true;
    ps.k_double_catalog = static_cast<int>(ps.catalog.size());
    ps.catalog.push_back({CatalogPiece::Shape::KDouble,
                          {"0", "1", "1", "0", "0", "1"}, -1, false, false, ""});
  } else {
    const int base = static_cast<int>(ps.catalog.size());
    auto add_k_rhombus = [&](const std::string& uleft, const std::string& ubottom,
                             const std::string& dtop, const std::string& deast,
                             const std::string& internal, int sign) {
      const int cat = static_cast<int>(ps.catalog.size());
      ps.catalog.push_back({CatalogPiece::Shape::KRhombus,
                            {uleft, internal, ubottom, dtop, deast}, sign, false, false, ""});
      ps.k_rhombi.push_back({ps.add_label(uleft), ps.add_label(ubottom), ps.add_label(dtop),
                             ps.add_label(deast), ps.add_label(internal), sign, cat});
    };
    add_k_rhombus("1", "1", "0", "10K", "10", -1);
    add_k_rhombus("10K", "0", "0", "10K", "1", +1);
    add_k_rhombus("10K", "10", "1", "0", "10", +1);
    (void)base;
  }
  return ps;
}

PieceSet pieces_equivariant_1step() {
  PieceSet ps = pieces_cohomology_1step();
  ps.theory = Theory::HT;
  ps.ring = RingKind::Poly;
  ps.add_vertical_rhombus("0", "1", "1", "0", "01");
  return ps;
}

PieceSet pieces_equivariant_K_1step() {
  PieceSet ps = pieces_equivariant_1step();
  ps.theory = Theory::KT;
  ps.ring = RingKind::Laurent;
  ps.has_kt_pieces = true;
  ps.kt_left_catalog = static_cast<int>(ps.catalog.size());
  ps.catalog.push_back({CatalogPiece::Shape::KTGashLeft,
                        {"1", "1", "1/0", "0/1"}, -1, false, false,
                        "right_of_equivariant_rhombus"});
  ps.kt_right_catalog = static_cast<int>(ps.catalog.size());
  ps.catalog.push_back({CatalogPiece::Shape::KTGashRight,
                        {"0", "0", "1/0", "0/1"}, -1, false, false,
                        "zero_run_then_one"});
  return ps;
}

PieceSet pieces_twostep() {
  PieceSet ps;
  ps.theory = Theory::H2;
  ps.ring = RingKind::Integer;
  ps.set_boundary("012");
  for (const auto& x : {"0", "1", "2"}) ps.add_triangle(x, x, x);
  for (const auto& ab : valid_labels(2)) {
    auto split = label_split(ab);
    if (!split) continue;
    ps.add_triangle(split->first, split->second, ab);
  }
  return ps;
}

PieceSet pieces_threestep() {
  PieceSet ps;
  ps.theory = Theory::H3;
  ps.ring = RingKind::Integer;
  ps.set_boundary("0123");
  for (const auto& x : {"0", "1", "2", "3"}) ps.add_triangle(x, x, x);
  for (const auto& ab : valid_labels(3)) {
    auto split = label_split(ab);
    if (!split) continue;
    ps.add_triangle(split->first, split->second, ab);
  }
  return ps;
}

PieceSet pieces_equivariant_twostep() {
  PieceSet ps = pieces_twostep();
  ps.theory = Theory::HT2;
  ps.ring = RingKind::Poly;
  // The six equivariant two-step pieces: diamonds with NW=a, NE=b, SW=b, SE=a.
  const std::pair<const char*, const char*> kDiamonds[] = {
      {"0", "1"}, {"0", "2"}, {"1", "2"}, {"10", "2"}, {"0", "21"}, {"10", "21"}};
  for (const auto& [a, b] : kDiamonds) {
    std::string internal = std::string(a) + "|" + b;
    ps.add_vertical_rhombus(a, b, b, a, internal);
  }
  return ps;
}

const PieceSet& piece_set_for(Theory t, KVariant kv) {
  static std::mutex mu;
  static std::map<std::pair<Theory, KVariant>, PieceSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t, t == Theory::K ? kv : KVariant::Original);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  PieceSet ps;
  switch (t) {
    case Theory::H: ps = pieces_cohomology_1step(); break;
    case Theory::K: ps = pieces_ktheory(kv); break;
    case Theory::HT: ps = pieces_equivariant_1step(); break;
    case Theory::KT: ps = pieces_equivariant_K_1step(); break;
    case Theory::H2: ps = pieces_twostep(); break;
    case Theory::H3: ps = pieces_threestep(); break;
    case Theory::HT2: ps = pieces_equivariant_twostep(); break;
  }
  return cache.emplace(key, std::move(ps)).first->second;
}

std::string PieceSet::to_json() const {
  nlohmann::json j;
  j["theory"] = theory_name(theory);
  j["ring"] = ring == RingKind::Integer ? "integer" : ring == RingKind::Poly ? "poly" : "laurent";
  std::vector<std::string> bnd;
  for (char c : boundary_) bnd.push_back(std::string(1, c));
  j["boundary_alphabet"] = bnd;
  j["labels"] = labels_;
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : catalog) {
    nlohmann::json e;
    switch (p.shape) {
      case CatalogPiece::Shape::Triangle:
        e["shape"] = "triangle";
        e["edges"] = {{"a", p.edges[0]}, {"b", p.edges[1]}, {"c", p.edges[2]}};
        break;
      case CatalogPiece::Shape::VerticalRhombus:
        e["shape"] = "vertical_rhombus";
        e["edges"] = {{"nw", p.edges[0]}, {"ne", p.edges[1]}, {"sw", p.edges[2]}, {"se", p.edges[3]}};
        break;
      case CatalogPiece::Shape::KDouble:
        e["shape"] = "k_double_triangle";
        e["edges"] = {{"top", {p.edges[0], p.edges[1]}},
                      {"sw", {p.edges[2], p.edges[3]}},
                      {"se", {p.edges[4], p.edges[5]}}};
        break;
      case CatalogPiece::Shape::KRhombus:
        e["shape"] = "k_rhombus";
        e["edges"] = {{"uleft", p.edges[0]}, {"internal", p.edges[1]}, {"ubottom", p.edges[2]},
                      {"dtop", p.edges[3]}, {"deast", p.edges[4]}};
        break;
      case CatalogPiece::Shape::KTGashLeft:
        e["shape"] = "kt_gash_left";
        e["edges"] = {{"top", p.edges[0]}, {"west", p.edges[1]},
                      {"east_gash", p.edges[2]}, {"dangling_gash", p.edges[3]}};
        break;
      case CatalogPiece::Shape::KTGashRight:
        e["shape"] = "kt_gash_right";
        e["edges"] = {{"top", p.edges[0]}, {"east", p.edges[1]},
                      {"west_gash", p.edges[2]}, {"dangling_gash", p.edges[3]}};
        break;
    }
    e["coefficient"] = p.equivariant ? "eqvar" : (p.sign == 1 ? "1" : "-1");
    e["rotatable"] = p.rotatable;
    if (!p.predicate.empty()) e["predicate"] = p.predicate;
    pieces.push_back(e);
  }
  j["pieces"] = pieces;
  return j.dump(2);
}

}  // namespace schubert
