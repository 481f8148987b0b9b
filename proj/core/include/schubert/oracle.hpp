#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/coeffs.hpp"
#include "schubert/indexing.hpp"

namespace schubert {

// Classical computations used to validate the puzzle and Mondrian rules.
// Everything here is independent of the engine by construction.

using SchurExpansion = std::map<SchubertIndex, BigInt>;

// Number of Littlewood-Richardson skew tableaux of shape nu/lambda and
// content mu, all three partitions inside the k x (n-k) box.
BigInt lr_tableaux(const SchubertIndex& lambda, const SchubertIndex& mu,
                   const SchubertIndex& nu, int k, int n);

// Pieri: multiply the special class sigma_p into sigma_mu, clipped to the box.
SchurExpansion pieri_multiply(int p, const SchubertIndex& mu, int k, int n);

// Giambelli: expand the k x k determinant of special classes by cofactors and
// multiply out with iterated Pieri; reduces to {lambda: 1} inside the box.
SchurExpansion giambelli_expand(const SchubertIndex& lambda, int k, int n);

// Full product via the determinantal route: expand lambda into signed
// monomials in special classes, then absorb them into mu by iterated Pieri.
SchurExpansion giambelli_product(const SchubertIndex& lambda, const SchubertIndex& mu,
                                 int k, int n);

// Product of two Grassmannian classes via LR tableau counts.
SchurExpansion lr_product(const SchubertIndex& lambda, const SchubertIndex& mu, int k, int n);

// ---------------------------------------------------------------------------
// Flag varieties: exact structure constants through Schubert polynomials.
// ---------------------------------------------------------------------------

// One-line permutations with values 1..m.
using Perm = std::vector<int>;

int perm_length(const Perm& w);
std::vector<int> perm_code(const Perm& w);
Perm perm_from_code(const std::vector<int>& code);

// Schubert polynomial S_w in variables x_1, x_2, ... (memoized).
const SparsePoly& schubert_polynomial(const Perm& w);

// Divided difference (P - s_i P)/(x_i - x_{i+1}).
SparsePoly divided_difference(const SparsePoly& p, int i);

// The permutation indexing X_w for a flag string: positions of digit 0 in
// increasing order, then digit 1, and so on.  perm_length equals codim.
Perm flag_string_to_perm(const FlagString& f);
FlagString perm_to_flag_string(const Perm& w, const std::vector<int>& steps, int n);

// Exact structure constants of the partial flag variety: the product
// S_u * S_v expanded in the Schubert basis by leading-monomial elimination.
// All coefficients are verified nonnegative and the remainder must vanish.
std::map<FlagString, BigInt> flag_structure_constants(const FlagString& a, const FlagString& b);

// String-keyed convenience wrapper for sweeps.
std::map<std::string, BigInt> flag_structure_constants_str(const std::string& a,
                                                           const std::string& b,
                                                           const std::vector<int>& steps, int n);

}  // namespace schubert
