#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

// Indexing and numerology for orthogonal Grassmannian Schubert classes.
// Classes of OG(k,2m+1) are pairs (lambda, mu) of strictly decreasing
// partitions with mu a subpartition of the partition associated to lambda.

using Rational = boost::multiprecision::cpp_rational;

// Removes the integers m - lambda_1, ..., m - lambda_s from (m-1, ..., 0).
std::vector<int> associated_partition(const std::vector<int>& lambda, int m);

// dis(lambda, mu) = (m-k)s + sum_{j=s+1}^k (m-k+j-i_j), where the parts of
// mu occur as positions i_j inside the associated partition.
int discrepancy(const std::vector<int>& lambda, const std::vector<int>& mu, int k, int m);

struct OGIndex {
  int k = 0, n = 0;
  std::vector<int> lambda;  // strictly decreasing, length s
  std::vector<int> mu;      // strictly decreasing, length k - s
  bool even_type = false;   // type D bookkeeping only
  int parity = 0;           // dim-of-intersection parity class when n is even

  int m() const { return even_type ? n / 2 : (n - 1) / 2; }
  int codim() const;  // |lambda| + discrepancy
  std::string to_string() const;  // "lambda|mu"
};

// Lemma: 2^{s(u)+s(v)} b_{u,v}^w = 2^{s(w)} c_{u,v}^w.  The sign-change
// counts are inputs; the result is exact and may be a non-integer rational.
Rational typeB_from_typeC(const Rational& c, int s_u, int s_v, int s_w);

}  // namespace schubert
