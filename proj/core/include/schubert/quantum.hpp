#pragma once

#include <map>
#include <vector>

#include "schubert/bigint.hpp"
#include "schubert/indexing.hpp"
#include "schubert/mondrian.hpp"

namespace schubert {

// Three-point genus-zero Gromov-Witten invariants of G(k,n) via the two-step
// reduction: I_d(lambda, mu, nu) is the coefficient of the dual of the
// quantum tableau of nu in the two-step puzzle expansion of the quantum
// tableaux of lambda and mu in Fl(k-d, k+d; n).  For n <= 6 every value is
// cross-checked against the Schubert-polynomial flag oracle; a disagreement
// aborts with a counterexample dump.

bool degree_condition(const SchubertIndex& lambda, const SchubertIndex& mu,
                      const SchubertIndex& nu, int k, int n, int d);

BigInt gw_invariant(const SchubertIndex& lambda, const SchubertIndex& mu,
                    const SchubertIndex& nu, int k, int n, int d);

// True when the m-pointed invariant provably vanishes by the subscroll bound
// sum max(lambda_i^j - d, 0) > (k+d)(n-k-d).  Preconditions (m >= 3, 2k <= n,
// d+k <= n, and the dimension equation) are reported distinctly.
bool vanishing_predicate(const std::vector<SchubertIndex>& classes, int k, int n, int d);

// (degree, class) -> coefficient; the d = 0 layer is the classical expansion.
using QuantumExpansion = std::map<std::pair<int, SchubertIndex>, BigInt>;

QuantumExpansion quantum_product(const SchubertIndex& lambda, const SchubertIndex& mu,
                                 int k, int n);

std::vector<SchubertIndex> partitions_in_box(int k, int n, int codim);

}  // namespace schubert
