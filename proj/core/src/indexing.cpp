#include "schubert/indexing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SchubertIndex::SchubertIndex(int k, int n, std::vector<int> lambda)
    : k_(k), n_(n), lambda_(std::move(lambda)) {
  require(n_ >= 1 && k_ >= 0 && k_ <= n_, "SchubertIndex: need 0 <= k <= n, n >= 1");
  lambda_.resize(static_cast<size_t>(k_), 0);  // pad omitted zero parts
  int prev = n_ - k_;
  for (int p : lambda_) {
    require(p >= 0 && p <= prev, "SchubertIndex: partition must fit the k x (n-k) box");
    prev = p;
  }
}

int SchubertIndex::codim() const {
  return std::accumulate(lambda_.begin(), lambda_.end(), 0);
}

SchubertIndex SchubertIndex::dual() const {
  std::vector<int> dual_parts(static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i)
    dual_parts[static_cast<size_t>(i)] = (n_ - k_) - lambda_[static_cast<size_t>(k_ - 1 - i)];
  return SchubertIndex(k_, n_, std::move(dual_parts));
}

std::string SchubertIndex::to_string() const {
  if (lambda_.empty() || lambda_[0] == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int p : lambda_) {
    if (p == 0) break;
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os.str();
}

SchubertIndex SchubertIndex::parse(int k, int n, const std::string& text) {
  return SchubertIndex(k, n, parse_partition(text));
}

std::string partition_to_string(const SchubertIndex& idx) {
  const int k = idx.k(), n = idx.n();
  std::string s(static_cast<size_t>(n), '0');
  // The j-th one (j = 1..k) sits at position n-k+j-lambda_j.
  for (int j = 1; j <= k; ++j) {
    int pos = n - k + j - idx.part(j - 1);
    s[static_cast<size_t>(pos - 1)] = '1';
  }
  return s;
}

SchubertIndex string_to_partition(const std::string& s) {
  require(!s.empty(), "string_to_partition: empty string");
  int n = static_cast<int>(s.size());
  int k = 0;
  for (char c : s) {
    require(c == '0' || c == '1', "string_to_partition: string must be over {0,1}");
    if (c == '1') ++k;
  }
  std::vector<int> lambda;
  lambda.reserve(static_cast<size_t>(k));
  int j = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (s[static_cast<size_t>(pos - 1)] == '1') {
      ++j;
      lambda.push_back(n - k + j - pos);
    }
  }
  return SchubertIndex(k, n, std::move(lambda));
}

std::string dual_string(const std::string& s) {
  return std::string(s.rbegin(), s.rend());
}

FlagString::FlagString(std::vector<int> steps, int n, std::string digits)
    : steps_(std::move(steps)), n_(n), digits_(std::move(digits)) {
  require(n_ >= 1, "FlagString: n >= 1");
  require(!steps_.empty(), "FlagString: need at least one step");
  int prev = 0;
  for (int s : steps_) {
    require(s > prev, "FlagString: steps must be strictly increasing and positive");
    prev = s;
  }
  require(steps_.back() <= n_, "FlagString: k_r <= n");
  require(static_cast<int>(digits_.size()) == n_, "FlagString: digit count != n");
  const int r = this->r();
  std::vector<int> count(static_cast<size_t>(r) + 1, 0);
  for (char c : digits_) {
    require(c >= '0' && c - '0' <= r, "FlagString: digit out of range");
    ++count[static_cast<size_t>(c - '0')];
  }
  // Digit r+1-i appears k_i - k_{i-1} times; digit 0 appears n - k_r times.
  for (int i = 1; i <= r; ++i) {
    int expect = steps_[static_cast<size_t>(i - 1)] - (i >= 2 ? steps_[static_cast<size_t>(i - 2)] : 0);
    require(count[static_cast<size_t>(r + 1 - i)] == expect,
            "FlagString: digit multiplicities do not match the steps");
  }
  require(count[0] == n_ - steps_.back(), "FlagString: wrong number of zero digits");
}

int FlagString::codim() const { return string_inversions(digits_); }

FlagString FlagString::dual() const {
  return FlagString(steps_, n_, dual_string(digits_));
}

std::string UpperLowerIndex::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < delta.size(); ++i) {
    if (i) os << ',';
    os << delta[i];
  }
  os << '|';
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << lambda[i];
  }
  return os.str();
}

UpperLowerIndex UpperLowerIndex::parse(const std::string& text) {
  auto bar = text.find('|');
  require(bar != std::string::npos, "UpperLowerIndex: expected 'd1,...|l1,...'");
  UpperLowerIndex u;
  u.delta = parse_partition(text.substr(0, bar));
  u.lambda = parse_partition(text.substr(bar + 1));
  return u;
}

FlagString flagstring_from_upperlower(const UpperLowerIndex& u,
                                      const std::vector<int>& steps, int n) {
  require(!steps.empty(), "flagstring_from_upperlower: empty steps");
  const int r = static_cast<int>(steps.size());
  const int kr = steps.back();
  require(static_cast<int>(u.delta.size()) == kr && static_cast<int>(u.lambda.size()) == kr,
          "flagstring_from_upperlower: delta and lambda must have length k_r");
  std::vector<int> count(static_cast<size_t>(r) + 1, 0);
  for (int d : u.delta) {
    require(d >= 1 && d <= r, "flagstring_from_upperlower: delta entries in 1..r");
    ++count[static_cast<size_t>(d)];
  }
  for (int i = 1; i <= r; ++i) {
    int expect = steps[static_cast<size_t>(i - 1)] - (i >= 2 ? steps[static_cast<size_t>(i - 2)] : 0);
    require(count[static_cast<size_t>(i)] == expect,
            "flagstring_from_upperlower: delta multiplicities do not match the steps");
  }
  std::string digits(static_cast<size_t>(n), '0');
  int prev_pos = 0;
  for (int j = 1; j <= kr; ++j) {
    int pos = n - kr + j - u.lambda[static_cast<size_t>(j - 1)];
    require(pos >= 1 && pos <= n && pos > prev_pos,
            "flagstring_from_upperlower: jump positions collide or leave 1..n");
    digits[static_cast<size_t>(pos - 1)] =
        static_cast<char>('0' + (r + 1 - u.delta[static_cast<size_t>(j - 1)]));
    prev_pos = pos;
  }
  return FlagString(steps, n, digits);
}

UpperLowerIndex upperlower_from_flagstring(const FlagString& f) {
  const int r = f.r();
  const int n = f.n();
  const int kr = f.steps().back();
  UpperLowerIndex u;
  int j = 0;
  for (int pos = 1; pos <= n; ++pos) {
    char c = f.digits()[static_cast<size_t>(pos - 1)];
    if (c == '0') continue;
    ++j;
    u.lambda.push_back(n - kr + j - pos);
    u.delta.push_back(r + 1 - (c - '0'));
  }
  return u;
}

std::vector<int> DegenerationOrder::reduced_word(int n) {
  std::vector<int> word;
  for (int block = 1; block <= n - 1; ++block)
    for (int letter = n - 1; letter >= block; --letter) word.push_back(letter);
  return word;
}

DegenerationOrder::DegenerationOrder(int n) : n_(n) {
  require(n >= 1, "DegenerationOrder: n >= 1");
  const auto word = reduced_word(n);
  const int total = static_cast<int>(word.size());  // C(n,2)
  // d_i is the product of the first C(n,2)-i letters; build incrementally,
  // then reverse so that d_0 = w0 and d_{C(n,2)} = identity.
  std::vector<int> cur(static_cast<size_t>(n));
  std::iota(cur.begin(), cur.end(), 1);
  perms_.push_back(cur);
  for (int i = 0; i < total; ++i) {
    std::swap(cur[static_cast<size_t>(word[static_cast<size_t>(i)] - 1)],
              cur[static_cast<size_t>(word[static_cast<size_t>(i)])]);
    perms_.push_back(cur);
  }
  std::reverse(perms_.begin(), perms_.end());
}

int string_inversions(const std::string& digits) {
  int inv = 0;
  for (size_t i = 0; i < digits.size(); ++i)
    for (size_t j = i + 1; j < digits.size(); ++j)
      if (digits[i] > digits[j]) ++inv;
  return inv;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ','))
    parts.push_back(std::stoi(item));
  if (parts.size() == 1 && parts[0] == 0) parts.clear();
  return parts;
}

std::string format_partition(const std::vector<int>& parts) {
  std::ostringstream os;
  bool any = false;
  for (int p : parts) {
    if (p == 0) break;
    if (any) os << ',';
    os << p;
    any = true;
  }
  return any ? os.str() : "0";
}

}  // namespace schubert
