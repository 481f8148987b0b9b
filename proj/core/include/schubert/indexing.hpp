#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

// A Schubert class of G(k,n): a partition inside the k x (n-k) box.
// Interconvertible with an n-character 0/1 string (k ones, n-k zeros):
// walking the partition border from the NE to the SW corner of the box,
// a west step writes 0 and a south step writes 1.
class SchubertIndex {
 public:
  SchubertIndex(int k, int n, std::vector<int> lambda);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<int>& parts() const { return lambda_; }
  int part(int j) const { return lambda_.at(static_cast<size_t>(j)); }  // 0-based

  int codim() const;            // |lambda|
  SchubertIndex dual() const;   // complement reversed in the box

  std::string to_string() const;  // "2,1"; the empty partition prints "0"
  static SchubertIndex parse(int k, int n, const std::string& text);

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<int> lambda_;  // length k, weakly decreasing, parts in [0, n-k]
};

std::string partition_to_string(const SchubertIndex& idx);
SchubertIndex string_to_partition(const std::string& s);

// Reverses any digit string. Poincare duality on string indices.
std::string dual_string(const std::string& s);

// An r-step flag Schubert class as an n-character string over 0..r.
// Larger digit = smaller subspace: digit r marks jump positions of V_1,
// digit r+1-i those of V_i, digit 0 the positions where no V_i jumps.
// The opposite orientation is tempting but wrong; this one is forced by
// the worked sigma_010201 conversion and pinned by tests.
class FlagString {
 public:
  FlagString(std::vector<int> steps, int n, std::string digits);

  int n() const { return n_; }
  int r() const { return static_cast<int>(steps_.size()); }
  const std::vector<int>& steps() const { return steps_; }
  const std::string& digits() const { return digits_; }

  int codim() const;          // number of inversions of the digit string
  FlagString dual() const;    // reversed string

  friend bool operator==(const FlagString&, const FlagString&) = default;
  friend auto operator<=>(const FlagString&, const FlagString&) = default;

 private:
  std::vector<int> steps_;  // strictly increasing, 0 < k_1 < ... < k_r <= n
  int n_ = 0;
  std::string digits_;
};

// sigma^{delta}_{lambda} notation for an r-step flag class.
struct UpperLowerIndex {
  std::vector<int> delta;   // length k_r, entries in 1..r
  std::vector<int> lambda;  // length k_r, weakly decreasing

  std::string to_string() const;  // "2,1,2|2,1,0"
  static UpperLowerIndex parse(const std::string& text);

  friend bool operator==(const UpperLowerIndex&, const UpperLowerIndex&) = default;
};

FlagString flagstring_from_upperlower(const UpperLowerIndex& u,
                                      const std::vector<int>& steps, int n);
UpperLowerIndex upperlower_from_flagstring(const FlagString& f);

// The fixed chain of C(n,2)+1 relative positions of the moving and fixed
// flags, given by partial factorizations from the right of the longest
// permutation.  perm(0) = w0, perm(C(n,2)) = identity, and consecutive
// entries differ by dropping one letter of the reduced word
//   w0 = (e_{n-1}...e_1)(e_{n-1}...e_2)...(e_{n-1}e_{n-2})(e_{n-1}).
class DegenerationOrder {
 public:
  explicit DegenerationOrder(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const std::vector<int>& perm(int i) const { return perms_.at(static_cast<size_t>(i)); }

  // The reduced word above, as simple-reflection indices.
  static std::vector<int> reduced_word(int n);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> perms_;  // one-line notation, values 1..n
};

// Small helpers shared with the oracle.
int string_inversions(const std::string& digits);
std::vector<int> parse_partition(const std::string& text);
std::string format_partition(const std::vector<int>& parts);

}  // namespace schubert
