#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

// Sparse multivariate Laurent polynomial over BigInt.  Terms are keyed by
// exponent vectors (trailing zeros trimmed) and held in lexicographic order
// with no zero coefficients stored; `var` is the display letter.
//
// The three coefficient rings of the calculator are Z (plain BigInt),
// Z[y_1..y_n] (equivariant cohomology, var 'y', exponents >= 0) and
// Z[t_1^#1..t_n^#1] (equivariant K-theory, var 't', t_i standing for e^{y_i}).
class SparsePoly {
 public:
  using Exponents = std::vector<int>;

  SparsePoly() = default;  // zero polynomial, variable letter unset ('y')
  explicit SparsePoly(char var) : var_(var) {}

  static SparsePoly constant(BigInt c, char var = 'y');
  // var_index is 1-based; power may be negative.
  static SparsePoly variable(int var_index, int power, char var);
  static SparsePoly monomial(BigInt c, Exponents exps, char var);

  char var() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt constant_term() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend bool operator==(const SparsePoly&, const SparsePoly&);

  // Substitutes y_i = 0 for var 'y' (keeps the constant term) or t_i = 1 for
  // var 't' (sums all coefficients).
  BigInt specialize_to_ordinary() const;

  std::string to_string() const;
  static SparsePoly parse(const std::string& text, char var);

  void add_term(const Exponents& exps, const BigInt& c);

 private:
  char var_ = 'y';
  std::map<Exponents, BigInt> terms_;
};

using PolyCoeff = SparsePoly;     // var 'y'
using LaurentCoeff = SparsePoly;  // var 't'

// One coefficient from any of the three exact rings.
using Coefficient = std::variant<BigInt, SparsePoly>;

bool coefficient_is_zero(const Coefficient& c);
std::string coefficient_to_string(const Coefficient& c);
Coefficient coefficient_add(const Coefficient& a, const Coefficient& b);
BigInt specialize_to_ordinary(const Coefficient& c);

// The weight factor 1 - t_i/t_j of an equivariant K piece, and its
// equivariant-cohomology counterpart y_j - y_i (the first-order term of
// 1 - e^{y_i-y_j}).  Only generator-form factors are convertible.
LaurentCoeff kt_weight_factor(int i, int j);
PolyCoeff ht_weight_factor(int i, int j);
PolyCoeff kt_factor_to_ht(const LaurentCoeff& f);

}  // namespace schubert
