#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubert/coeffs.hpp"
#include "schubert/pieces.hpp"

namespace schubert {

// Triangular grid of side n.  Up cells U(r,c) for 1<=c<=r<=n, down cells
// D(r,c) for 1<=c<=r-1.  Edge arrays (one slot per U cell):
//   ledge(r,c): / edge shared by D(r,c-1) [west] and U(r,c) [east]
//   redge(r,c): \ edge shared by U(r,c) [west] and D(r,c) [east]
//   hedge(r,c): horizontal edge shared by U(r,c) [above] and D(r+1,c) [below]
// The two sides of a / or \ edge carry independent labels; they differ only
// across the gashes of the equivariant K-theory pieces.
inline size_t tri_index(int r, int c) {
  return static_cast<size_t>(r) * (r - 1) / 2 + static_cast<size_t>(c - 1);
}
inline size_t tri_count(int n) { return static_cast<size_t>(n) * (n + 1) / 2; }

// A complete filling of the grid: piece assignment per cell, the two-sided
// edge labels, the accumulated sign and the equivariant weight positions.
struct Filling {
  int n = 0;
  std::string alpha, beta, gamma;
  int sign = 1;
  std::vector<std::pair<int, int>> eqvar;  // (i, j) with i < j, one per rhombus

  std::vector<int8_t> ledge_w, ledge_e, redge_w, redge_e, hedge;
  std::vector<int16_t> up_catalog, down_catalog;  // -1 where covered by a composite anchor
  std::vector<uint8_t> rhombus_top;               // U(r,c) is an equivariant rhombus top
  std::vector<uint8_t> ledge_gash, redge_gash;

  int8_t le(int r, int c) const { return ledge_e[tri_index(r, c)]; }
  int8_t lw(int r, int c) const { return ledge_w[tri_index(r, c)]; }
  int8_t re(int r, int c) const { return redge_e[tri_index(r, c)]; }
  int8_t rw(int r, int c) const { return redge_w[tri_index(r, c)]; }
  int8_t h(int r, int c) const { return hedge[tri_index(r, c)]; }
  bool is_rhombus_top(int r, int c) const { return rhombus_top[tri_index(r, c)] != 0; }
};

struct EnumerateOptions {
  std::optional<std::string> gamma_filter;
  unsigned threads = 0;  // 0 = SCHUBERT_THREADS env var or hardware concurrency
};

// All fillings with NW boundary alpha (read upward from the SW corner), NE
// boundary beta (read downward from the apex) and, when the filter is given,
// S boundary gamma (left to right).  Exhaustive, duplicate-free, and in a
// deterministic order independent of the thread count.
std::vector<Filling> enumerate_fillings(int n, const std::string& alpha,
                                        const std::string& beta, const PieceSet& pieces,
                                        const EnumerateOptions& opts = {});

using Expansion = std::map<std::string, Coefficient>;

// Folds each filling's coefficient (sign times the product of resolved
// equivariant factors) into a gamma -> coefficient map; zero entries removed.
Expansion expand_product(const std::string& alpha, const std::string& beta,
                         const PieceSet& pieces, const EnumerateOptions& opts = {});

Coefficient coefficient(const std::string& alpha, const std::string& beta,
                        const std::string& gamma, const PieceSet& pieces,
                        const EnumerateOptions& opts = {});

Coefficient filling_weight(const Filling& f, const PieceSet& pieces);

// Integer-ring helpers for the sweeps.
std::map<std::string, BigInt> expand_int(const std::string& alpha, const std::string& beta,
                                         const PieceSet& pieces,
                                         const EnumerateOptions& opts = {});
std::map<std::string, SparsePoly> expand_poly(const std::string& alpha, const std::string& beta,
                                              const PieceSet& pieces,
                                              const EnumerateOptions& opts = {});

// All boundary strings of the piece set's space on n letters with the given
// content; for 1-step theories these are the 0/1 strings with k ones.
std::vector<std::string> boundary_strings(int n, const std::vector<int>& digit_counts);

// Checks the pinned reading conventions (the sigma_0101^2 base case and
// the equivariant weight orientation); throws std::logic_error on failure.
void verify_engine_conventions();

unsigned resolve_thread_count(unsigned requested);

}  // namespace schubert
