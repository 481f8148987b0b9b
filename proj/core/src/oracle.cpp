#include "schubert/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schubert {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Counts LR skew tableaux by filling nu/lambda row by row, right to left, so
// the lattice condition on the reverse reading word can be checked as we go.
struct LRCounter {
  const std::vector<int>&nu, &lambda, &mu;
  int rows;
  std::vector<std::vector<int>> entry;  // 0 = empty
  std::vector<int> count;               // multiplicity of each value so far
  BigInt total = 0;

  LRCounter(const std::vector<int>& nu_, const std::vector<int>& lambda_,
            const std::vector<int>& mu_)
      : nu(nu_), lambda(lambda_), mu(mu_), rows(static_cast<int>(nu_.size())) {
    entry.resize(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) entry[static_cast<size_t>(r)].assign(static_cast<size_t>(nu[static_cast<size_t>(r)]), 0);
    count.assign(mu.size() + 2, 0);
  }

  int lam(int r) const {
    return r < static_cast<int>(lambda.size()) ? lambda[static_cast<size_t>(r)] : 0;
  }

  void fill(int r, int col) {
    if (r == rows) {
      total += 1;
      return;
    }
    if (col < lam(r)) {
      fill(r + 1, r + 1 < rows ? nu[static_cast<size_t>(r + 1)] - 1 : 0);
      return;
    }
    const int m = static_cast<int>(mu.size());
    for (int v = 1; v <= m; ++v) {
      if (count[static_cast<size_t>(v)] >= mu[static_cast<size_t>(v - 1)]) continue;
      // Lattice: after placing v, #v's must not exceed #(v-1)'s.
      if (v > 1 && count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v - 1)]) continue;
      // Rows weakly increase left to right: filling right to left, v must be
      // at most the entry to the right.
      if (col + 1 < nu[static_cast<size_t>(r)] && entry[static_cast<size_t>(r)][static_cast<size_t>(col + 1)] != 0 &&
          v > entry[static_cast<size_t>(r)][static_cast<size_t>(col + 1)])
        continue;
      // Columns strictly increase top to bottom.
      if (r > 0 && col < nu[static_cast<size_t>(r - 1)]) {
        int above = entry[static_cast<size_t>(r - 1)][static_cast<size_t>(col)];
        if (above == 0) {
          if (col >= lam(r - 1)) continue;  // above cell is in the skew shape but unfilled
        } else if (v <= above) {
          continue;
        }
      }
      entry[static_cast<size_t>(r)][static_cast<size_t>(col)] = v;
      ++count[static_cast<size_t>(v)];
      if (col > 0)
        fill(r, col - 1);
      else
        fill(r + 1, r + 1 < rows ? nu[static_cast<size_t>(r + 1)] - 1 : 0);
      --count[static_cast<size_t>(v)];
      entry[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
    }
  }

  BigInt run() {
    if (rows == 0) return 1;
    fill(0, nu[0] - 1);
    return total;
  }
};

}  // namespace

BigInt lr_tableaux(const SchubertIndex& lambda, const SchubertIndex& mu,
                   const SchubertIndex& nu, int k, int n) {
  require(lambda.k() == k && lambda.n() == n && mu.k() == k && mu.n() == n &&
              nu.k() == k && nu.n() == n,
          "lr_tableaux: all three partitions must live in the same box");
  if (nu.codim() != lambda.codim() + mu.codim()) return 0;
  for (int i = 0; i < k; ++i)
    if (nu.part(i) < lambda.part(i)) return 0;
  std::vector<int> nu_rows, lam_rows, mu_rows;
  for (int p : nu.parts())
    if (p > 0) nu_rows.push_back(p);
  for (size_t i = 0; i < nu_rows.size(); ++i)
    lam_rows.push_back(i < static_cast<size_t>(lambda.k()) ? lambda.part(static_cast<int>(i)) : 0);
  for (int p : mu.parts())
    if (p > 0) mu_rows.push_back(p);
  if (nu_rows.empty()) return (lambda.codim() == 0 && mu.codim() == 0) ? 1 : 0;
  LRCounter counter(nu_rows, lam_rows, mu_rows);
  return counter.run();
}

SchurExpansion pieri_multiply(int p, const SchubertIndex& mu, int k, int n) {
  require(p >= 0 && p <= n - k, "pieri_multiply: special class must satisfy 0 <= p <= n-k");
  SchurExpansion out;
  std::vector<int> nu(static_cast<size_t>(k), 0);
  const int target = mu.codim() + p;
  // DFS over nu with mu_i <= nu_i <= mu_{i-1} and |nu| = |mu| + p.
  std::vector<int> stack;
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (sum > target) return;
    if (i == k) {
      if (sum == target) out[SchubertIndex(k, n, nu)] += 1;
      return;
    }
    const int lo = mu.part(i);
    const int hi = i == 0 ? n - k : std::min(mu.part(i - 1), n - k);
    for (int v = lo; v <= hi; ++v) {
      nu[static_cast<size_t>(i)] = v;
      rec(i + 1, sum + v);
    }
    nu[static_cast<size_t>(i)] = 0;
  };
  rec(0, 0);
  return out;
}

namespace {

// Sum over permutations pi of sgn(pi) * (fold of specials lambda_i - i + pi(i)
// into seed by iterated Pieri).
SchurExpansion giambelli_fold(const SchubertIndex& lambda, const SchurExpansion& seed,
                              int k, int n) {
  SchurExpansion total;
  std::vector<int> pi(static_cast<size_t>(k));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (pi[static_cast<size_t>(i)] > pi[static_cast<size_t>(j)]) sign = -sign;
    bool dead = false;
    std::vector<int> specials;
    for (int i = 0; i < k && !dead; ++i) {
      int p = lambda.part(i) - i + pi[static_cast<size_t>(i)];
      if (p < 0 || p > n - k) dead = true;  // sigma_p vanishes outside 0..n-k
      else specials.push_back(p);
    }
    if (dead) continue;
    SchurExpansion cur = seed;
    for (int p : specials) {
      SchurExpansion next;
      for (const auto& [idx, coeff] : cur)
        for (const auto& [nu, one] : pieri_multiply(p, idx, k, n)) next[nu] += coeff * one;
      cur = std::move(next);
    }
    for (const auto& [idx, coeff] : cur) total[idx] += sign * coeff;
  } while (std::next_permutation(pi.begin(), pi.end()));
  for (auto it = total.begin(); it != total.end();)
    it = (it->second == 0) ? total.erase(it) : std::next(it);
  return total;
}

}  // namespace

SchurExpansion giambelli_expand(const SchubertIndex& lambda, int k, int n) {
  SchurExpansion seed;
  seed[SchubertIndex(k, n, {})] = 1;
  return giambelli_fold(lambda, seed, k, n);
}

SchurExpansion giambelli_product(const SchubertIndex& lambda, const SchubertIndex& mu,
                                 int k, int n) {
  SchurExpansion seed;
  seed[mu] = 1;
  return giambelli_fold(lambda, seed, k, n);
}

SchurExpansion lr_product(const SchubertIndex& lambda, const SchubertIndex& mu, int k, int n) {
  SchurExpansion out;
  const int target = lambda.codim() + mu.codim();
  std::vector<int> nu(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == k) {
      if (sum == target) {
        SchubertIndex idx(k, n, nu);
        BigInt c = lr_tableaux(lambda, mu, idx, k, n);
        if (c != 0) out[idx] = c;
      }
      return;
    }
    const int hi = i == 0 ? n - k : nu[static_cast<size_t>(i - 1)];
    for (int v = 0; v <= hi; ++v) {
      nu[static_cast<size_t>(i)] = v;
      if (sum + v <= target) rec(i + 1, sum + v);
    }
    nu[static_cast<size_t>(i)] = 0;
  };
  rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Schubert polynomials
// ---------------------------------------------------------------------------

int perm_length(const Perm& w) {
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> perm_code(const Perm& w) {
  std::vector<int> code(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++code[i];
  while (!code.empty() && code.back() == 0) code.pop_back();
  return code;
}

Perm perm_from_code(const std::vector<int>& code) {
  int m = static_cast<int>(code.size());
  for (size_t i = 0; i < code.size(); ++i)
    m = std::max(m, static_cast<int>(i) + 1 + code[i]);
  std::vector<int> pool(static_cast<size_t>(m));
  std::iota(pool.begin(), pool.end(), 1);
  Perm w;
  for (size_t i = 0; i < code.size(); ++i) {
    const int pick = code[i];
    if (pick >= static_cast<int>(pool.size()))
      throw std::invalid_argument("perm_from_code: code entry too large");
    w.push_back(pool[static_cast<size_t>(pick)]);
    pool.erase(pool.begin() + pick);
  }
  for (int v : pool) w.push_back(v);
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  if (w.empty()) w.push_back(1);
  return w;
}

SparsePoly divided_difference(const SparsePoly& p, int i) {
  // (P - s_i P)/(x_i - x_{i+1}) termwise:
  //   x_i^a x_{i+1}^b -> sum_{m=b}^{a-1} x_i^m x_{i+1}^{a+b-1-m}   (a > b)
  // and the antisymmetric counterpart for a < b.
  SparsePoly out('x');
  const size_t vi = static_cast<size_t>(i - 1), vj = static_cast<size_t>(i);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly::Exponents base = e;
    if (base.size() <= vj) base.resize(vj + 1, 0);
    const int a = base[vi], b = base[vj];
    if (a == b) continue;
    if (a > b) {
      for (int m = b; m <= a - 1; ++m) {
        base[vi] = m;
        base[vj] = a + b - 1 - m;
        out.add_term(base, c);
      }
    } else {
      for (int m = a; m <= b - 1; ++m) {
        base[vi] = m;
        base[vj] = a + b - 1 - m;
        out.add_term(base, -c);
      }
    }
  }
  return out;
}

namespace {

Perm trim(Perm w) {
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  return w;
}

std::map<Perm, SparsePoly>& schubert_cache() {
  static std::map<Perm, SparsePoly> cache;
  return cache;
}
std::mutex schubert_mutex;

}  // namespace

const SparsePoly& schubert_polynomial(const Perm& w_in) {
  Perm w = trim(w_in);
  std::lock_guard<std::mutex> lock(schubert_mutex);
  auto& cache = schubert_cache();
  if (auto it = cache.find(w); it != cache.end()) return it->second;

  std::function<const SparsePoly&(const Perm&)> get = [&](const Perm& v) -> const SparsePoly& {
    if (auto it = cache.find(v); it != cache.end()) return it->second;
    const int m = static_cast<int>(v.size());
    // Longest element: S_{w0} = x_1^{m-1} ... x_{m-1}.
    bool longest = true;
    for (int i = 0; i < m; ++i)
      if (v[static_cast<size_t>(i)] != m - i) longest = false;
    if (longest) {
      SparsePoly::Exponents e;
      for (int i = m - 1; i >= 1; --i) e.push_back(i);
      auto p = SparsePoly::monomial(1, e, 'x');
      return cache.emplace(v, std::move(p)).first->second;
    }
    // Take the first ascent i: S_v = d_i S_{v s_i}.
    int asc = -1;
    for (int i = 0; i + 1 < m; ++i)
      if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(i + 1)]) { asc = i + 1; break; }
    if (asc == -1) throw std::logic_error("schubert_polynomial: no ascent in non-longest element");
    Perm longer = v;
    std::swap(longer[static_cast<size_t>(asc - 1)], longer[static_cast<size_t>(asc)]);
    SparsePoly p = divided_difference(get(trim(longer)), asc);
    return cache.emplace(v, std::move(p)).first->second;
  };

  if (w.size() <= 1) {
    auto p = SparsePoly::constant(1, 'x');
    return cache.emplace(w, std::move(p)).first->second;
  }
  return get(w);
}

Perm flag_string_to_perm(const FlagString& f) {
  Perm w;
  for (int d = 0; d <= f.r(); ++d)
    for (int pos = 1; pos <= f.n(); ++pos)
      if (f.digits()[static_cast<size_t>(pos - 1)] - '0' == d) w.push_back(pos);
  return w;
}

FlagString perm_to_flag_string(const Perm& w, const std::vector<int>& steps, int n) {
  // Inverse of flag_string_to_perm: the first n-k_r values carry digit 0,
  // the next k_r - k_{r-1} carry digit 1, and so on.
  const int r = static_cast<int>(steps.size());
  std::vector<int> block_sizes;
  block_sizes.push_back(n - steps.back());
  for (int i = r - 1; i >= 1; --i)
    block_sizes.push_back(steps[static_cast<size_t>(i)] - steps[static_cast<size_t>(i - 1)]);
  block_sizes.push_back(steps[0]);
  Perm full = w;
  for (int v = static_cast<int>(w.size()) + 1; v <= n; ++v) full.push_back(v);
  std::string digits(static_cast<size_t>(n), '?');
  int at = 0;
  for (int d = 0; d <= r; ++d) {
    for (int t = 0; t < block_sizes[static_cast<size_t>(d)]; ++t) {
      digits[static_cast<size_t>(full.at(static_cast<size_t>(at)) - 1)] =
          static_cast<char>('0' + d);
      ++at;
    }
  }
  return FlagString(steps, n, digits);
}

std::map<FlagString, BigInt> flag_structure_constants(const FlagString& a, const FlagString& b) {
  require(a.n() == b.n() && a.steps() == b.steps(),
          "flag_structure_constants: classes from different spaces");
  SparsePoly product = schubert_polynomial(flag_string_to_perm(a)) *
                       schubert_polynomial(flag_string_to_perm(b));
  std::map<FlagString, BigInt> out;
  // Leading-monomial elimination: the largest monomial of S_w in the
  // last-variable-first lexicographic order is x^{code(w)} with coefficient 1.
  while (!product.is_zero()) {
    auto lead = product.terms().begin();
    SparsePoly::Exponents best = lead->first;
    BigInt best_c = lead->second;
    for (const auto& [e, c] : product.terms()) {
      // Compare from the back, longer-with-nonzero-tail wins.
      const SparsePoly::Exponents& x = e;
      const SparsePoly::Exponents& y = best;
      size_t len = std::max(x.size(), y.size());
      bool greater = false, decided = false;
      for (size_t i = len; i-- > 0 && !decided;) {
        int xi = i < x.size() ? x[i] : 0;
        int yi = i < y.size() ? y[i] : 0;
        if (xi != yi) {
          greater = xi > yi;
          decided = true;
        }
      }
      if (decided && greater) {
        best = e;
        best_c = c;
      }
    }
    Perm w = perm_from_code(best);
    const SparsePoly& sw = schubert_polynomial(w);
    SparsePoly scaled = sw * SparsePoly::constant(best_c, 'x');
    product = product - scaled;
    if (best_c < 0)
      throw std::logic_error("flag_structure_constants: negative coefficient; elimination broke");
    // Classes needing more than n letters vanish in H*(Fl(n)).
    if (static_cast<int>(w.size()) > a.n()) continue;
    FlagString cls = perm_to_flag_string(w, a.steps(), a.n());
    // Every surviving permutation must be a class of the same flag variety;
    // a failed round trip means the expansion left the subring.
    if (trim(flag_string_to_perm(cls)) != trim(w))
      throw std::logic_error("flag_structure_constants: expansion left the flag subring");
    out[cls] += best_c;
  }
  return out;
}

std::map<std::string, BigInt> flag_structure_constants_str(const std::string& a,
                                                           const std::string& b,
                                                           const std::vector<int>& steps, int n) {
  auto full = flag_structure_constants(FlagString(steps, n, a), FlagString(steps, n, b));
  std::map<std::string, BigInt> out;
  for (const auto& [f, c] : full) out.emplace(f.digits(), c);
  return out;
}

}  // namespace schubert
