#include "schubert/og.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_strictly_decreasing(const std::vector<int>& v, const char* what) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    require(v[i] > v[i + 1], std::string(what) + " must be strictly decreasing");
}

}  // namespace

std::vector<int> associated_partition(const std::vector<int>& lambda, int m) {
  check_strictly_decreasing(lambda, "lambda");
  for (int p : lambda) require(p >= 1 && p <= m, "lambda parts must lie in 1..m");
  std::vector<bool> removed(static_cast<size_t>(m), false);
  for (int p : lambda) removed[static_cast<size_t>(m - p)] = true;  // value m-p in 0..m-1
  std::vector<int> out;
  for (int v = m - 1; v >= 0; --v)
    if (!removed[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

int discrepancy(const std::vector<int>& lambda, const std::vector<int>& mu, int k, int m) {
  const int s = static_cast<int>(lambda.size());
  require(s + static_cast<int>(mu.size()) == k, "discrepancy: |lambda| + |mu| parts must equal k");
  check_strictly_decreasing(mu, "mu");
  const std::vector<int> assoc = associated_partition(lambda, m);
  // The parts of mu occur as assoc positions i_j, indexed s+1..m.
  int dis = (m - k) * s;
  for (size_t t = 0; t < mu.size(); ++t) {
    int i_j = -1;
    for (size_t a = 0; a < assoc.size(); ++a)
      if (assoc[a] == mu[t]) {
        i_j = static_cast<int>(a) + s + 1;
        break;
      }
    require(i_j != -1, "discrepancy: mu is not a subpartition of the associated partition");
    const int j = s + 1 + static_cast<int>(t);
    dis += m - k + j - i_j;
  }
  return dis;
}

int OGIndex::codim() const {
  int sum = std::accumulate(lambda.begin(), lambda.end(), 0);
  return sum + discrepancy(lambda, mu, k, m());
}

std::string OGIndex::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << lambda[i];
  }
  os << '|';
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ',';
    os << mu[i];
  }
  return os.str();
}

Rational typeB_from_typeC(const Rational& c, int s_u, int s_v, int s_w) {
  require(s_u >= 0 && s_v >= 0 && s_w >= 0, "typeB_from_typeC: counts must be nonnegative");
  // b = 2^{s_w - s_u - s_v} c, exact.
  const int e = s_w - s_u - s_v;
  Rational factor = 1;
  for (int i = 0; i < std::abs(e); ++i) factor *= 2;
  if (e >= 0) return Rational(c * factor);
  return Rational(c / factor);
}

}  // namespace schubert
