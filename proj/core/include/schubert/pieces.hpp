#pragma once

#include <optional>
#include <string>
#include <vector>

namespace schubert {

enum class Theory { H, K, HT, KT, H2, H3, HT2 };
enum class RingKind { Integer, Poly, Laurent };
enum class KVariant { Original, Alternate };

std::string theory_name(Theory t);
std::optional<Theory> theory_from_name(const std::string& name);
int theory_steps(Theory t);  // 1, 2 or 3

// Edge labels are ids into PieceSet::labels(); plain digits get their own value.
using Label = int;

// ---------------------------------------------------------------------------
// Label trees ("2(10)", "(21)0", ...): binary trees with digit leaves that
// strictly decrease left to right, except that a digit may repeat when the
// two copies are separated by exactly three parentheses.
// ---------------------------------------------------------------------------

bool parse_label_tree(const std::string& text, std::vector<int>* leaves,
                      std::string* left, std::string* right);
bool label_tree_valid(const std::string& text, int max_digit);
std::vector<int> label_leaves(const std::string& text);
// Top-level split of a composite label; nullopt for single digits.
std::optional<std::pair<std::string, std::string>> label_split(const std::string& text);

// All serialized labels of the r-step grammar (r in {1,2,3}); for r = 3 the
// four repetition-rule labels used by the extra pieces are appended.
std::vector<std::string> valid_labels(int r);

// ---------------------------------------------------------------------------
// Piece catalogs
// ---------------------------------------------------------------------------

// Catalog entry as specified (pre-orientation); the filler consumes the
// expanded tables below.
struct CatalogPiece {
  enum class Shape { Triangle, VerticalRhombus, KDouble, KRhombus, KTGashLeft, KTGashRight };
  Shape shape = Shape::Triangle;
  std::vector<std::string> edges;  // clockwise for triangles; nw/ne/sw/se for rhombi
  int sign = 1;
  bool rotatable = false;
  bool equivariant = false;
  std::string predicate;  // "", "right_of_equivariant_rhombus", "zero_run_then_one"
};

struct UpCand { Label left, right, bottom; int catalog; };
struct DownCand { Label top, west, east; int catalog; };  // west = \ edge, east = / edge
// Vertical rhombus U(r,c)+D(r+1,c); carries the EQVAR(i,j) weight marker.
struct RhombusCand { Label nw, ne, sw, se, internal_h; int catalog; };
// Horizontal rhombus U(r,c)+D(r,c) of the alternate K-theory pieces.
struct KRhombusCand { Label uleft, ubottom, dtop, deast, internal; int sign; int catalog; };

class PieceSet {
 public:
  Theory theory = Theory::H;
  RingKind ring = RingKind::Integer;
  KVariant kvariant = KVariant::Original;

  const std::vector<std::string>& labels() const { return labels_; }
  Label label_id(const std::string& text) const;        // throws if unknown
  Label add_label(const std::string& text);
  const std::string& label_text(Label l) const { return labels_.at(static_cast<size_t>(l)); }
  bool is_plain_digit(Label l) const;

  // Boundary alphabet as digit characters.
  const std::string& boundary_alphabet() const { return boundary_; }
  bool boundary_allows(char digit) const;

  std::vector<CatalogPiece> catalog;
  std::vector<UpCand> up;
  std::vector<DownCand> down;
  std::vector<RhombusCand> rhombi;
  std::vector<KRhombusCand> k_rhombi;
  bool has_k_double = false;
  int k_double_catalog = -1;
  bool has_kt_pieces = false;
  int kt_left_catalog = -1;   // piece placed right of an equivariant rhombus
  int kt_right_catalog = -1;  // piece with the zero-run placement rule

  // Serialized JSON form of the catalog (shape, oriented edge labels,
  // coefficient tag, predicate id), for test fixtures and the renderer.
  std::string to_json() const;

  friend PieceSet pieces_cohomology_1step();
  friend PieceSet pieces_ktheory(KVariant variant);
  friend PieceSet pieces_equivariant_1step();
  friend PieceSet pieces_equivariant_K_1step();
  friend PieceSet pieces_twostep();
  friend PieceSet pieces_threestep();
  friend PieceSet pieces_equivariant_twostep();

 private:
  std::vector<std::string> labels_;
  std::string boundary_;

  void set_boundary(const std::string& digits) { boundary_ = digits; }
  void add_triangle(const std::string& a, const std::string& b, const std::string& c,
                    bool rotatable = true);
  void add_vertical_rhombus(const std::string& nw, const std::string& ne,
                            const std::string& sw, const std::string& se,
                            const std::string& internal);
};

PieceSet pieces_cohomology_1step();
PieceSet pieces_ktheory(KVariant variant);
PieceSet pieces_equivariant_1step();
PieceSet pieces_equivariant_K_1step();
PieceSet pieces_twostep();
PieceSet pieces_threestep();
PieceSet pieces_equivariant_twostep();

const PieceSet& piece_set_for(Theory t, KVariant kv = KVariant::Original);

}  // namespace schubert
