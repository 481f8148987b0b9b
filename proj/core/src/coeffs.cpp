#include "schubert/coeffs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

void trim_trailing_zeros(SparsePoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

SparsePoly SparsePoly::constant(BigInt c, char var) {
  SparsePoly p(var);
  if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

SparsePoly SparsePoly::variable(int var_index, int power, char var) {
  if (var_index < 1) throw std::invalid_argument("SparsePoly: variable index is 1-based");
  SparsePoly p(var);
  if (power == 0) return constant(1, var);
  Exponents e(static_cast<size_t>(var_index), 0);
  e.back() = power;
  p.terms_.emplace(std::move(e), BigInt(1));
  return p;
}

SparsePoly SparsePoly::monomial(BigInt c, Exponents exps, char var) {
  SparsePoly p(var);
  trim_trailing_zeros(exps);
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigInt SparsePoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePoly::add_term(const Exponents& exps, const BigInt& c) {
  if (c == 0) return;
  Exponents key = exps;
  trim_trailing_zeros(key);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p(var_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly p = *this;
  p += o;
  return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly p(var_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

BigInt SparsePoly::specialize_to_ordinary() const {
  if (var_ == 't') {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }
  return constant_term();
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt abs = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed_coeff = false;
    if (abs != 1 || e.empty()) {
      os << abs;
      printed_coeff = true;
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed_coeff || !first_var) os << ' ';
      first_var = false;
      os << var_ << (i + 1);
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

SparsePoly SparsePoly::parse(const std::string& text, char var) {
  SparsePoly result(var);
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  auto parse_int = [&]() -> long long {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("SparsePoly::parse: expected integer in '" + text + "'");
    return std::stoll(text.substr(start, pos - start));
  };

  skip_ws();
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (pos >= text.size()) break;
      if (text[pos] == '+') { ++pos; }
      else if (text[pos] == '-') { sign = -1; ++pos; }
      else if (!first) throw std::invalid_argument("SparsePoly::parse: expected +/- in '" + text + "'");
      skip_ws();
    }
    first = false;
    BigInt coeff = 1;
    Exponents exps;
    bool saw_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = BigInt(parse_int());
      saw_factor = true;
      skip_ws();
    }
    while (pos < text.size() && text[pos] == var) {
      ++pos;
      size_t idx_start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (idx_start == pos) throw std::invalid_argument("SparsePoly::parse: variable needs an index");
      int idx = std::stoi(text.substr(idx_start, pos - idx_start));
      int power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        power = static_cast<int>(parse_int());
      }
      if (static_cast<size_t>(idx) > exps.size()) exps.resize(static_cast<size_t>(idx), 0);
      exps[static_cast<size_t>(idx - 1)] += power;
      saw_factor = true;
      skip_ws();
    }
    if (!saw_factor) throw std::invalid_argument("SparsePoly::parse: empty term in '" + text + "'");
    result.add_term(exps, sign * coeff);
    skip_ws();
  }
  return result;
}

bool coefficient_is_zero(const Coefficient& c) {
  if (const auto* i = std::get_if<BigInt>(&c)) return *i == 0;
  return std::get<SparsePoly>(c).is_zero();
}

std::string coefficient_to_string(const Coefficient& c) {
  if (const auto* i = std::get_if<BigInt>(&c)) return i->str();
  return std::get<SparsePoly>(c).to_string();
}

Coefficient coefficient_add(const Coefficient& a, const Coefficient& b) {
  if (const auto* ia = std::get_if<BigInt>(&a)) return *ia + std::get<BigInt>(b);
  return std::get<SparsePoly>(a) + std::get<SparsePoly>(b);
}

BigInt specialize_to_ordinary(const Coefficient& c) {
  if (const auto* i = std::get_if<BigInt>(&c)) return *i;
  return std::get<SparsePoly>(c).specialize_to_ordinary();
}

LaurentCoeff kt_weight_factor(int i, int j) {
  // 1 - t_i/t_j
  SparsePoly p = SparsePoly::constant(1, 't');
  SparsePoly::Exponents e(static_cast<size_t>(std::max(i, j)), 0);
  e[static_cast<size_t>(i - 1)] += 1;
  e[static_cast<size_t>(j - 1)] -= 1;
  p.add_term(e, BigInt(-1));
  return p;
}

PolyCoeff ht_weight_factor(int i, int j) {
  // y_j - y_i
  SparsePoly p('y');
  p += SparsePoly::variable(j, 1, 'y');
  p = p - SparsePoly::variable(i, 1, 'y');
  return p;
}

PolyCoeff kt_factor_to_ht(const LaurentCoeff& f) {
  // Accepts exactly the generator form 1 - t_i/t_j (or the zero factor i=j,
  // which is the zero polynomial 1 - 1).
  if (f.is_zero()) return SparsePoly('y');
  if (f.var() != 't') throw std::invalid_argument("kt_factor_to_ht: expected a 't' polynomial");
  if (f.num_terms() != 2 || f.constant_term() != 1)
    throw std::invalid_argument("kt_factor_to_ht: not of the form 1 - t_i/t_j");
  for (const auto& [e, c] : f.terms()) {
    if (e.empty()) continue;
    if (c != -1) throw std::invalid_argument("kt_factor_to_ht: not of the form 1 - t_i/t_j");
    int i = 0, j = 0;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 1 && i == 0) i = static_cast<int>(v) + 1;
      else if (e[v] == -1 && j == 0) j = static_cast<int>(v) + 1;
      else if (e[v] != 0) throw std::invalid_argument("kt_factor_to_ht: not of the form 1 - t_i/t_j");
    }
    if (i == 0 || j == 0) throw std::invalid_argument("kt_factor_to_ht: not of the form 1 - t_i/t_j");
    return ht_weight_factor(i, j);
  }
  throw std::invalid_argument("kt_factor_to_ht: not of the form 1 - t_i/t_j");
}

}  // namespace schubert
