#include "tspread/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    throw InvalidInput("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                       std::to_string(b.ambient()) + " variables");
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_int(std::string_view digits, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw InvalidInput("malformed monomial '" + std::string(context) + "'");
  return value;
}

// Splits one factor "x12^3" into (12, 3).
std::pair<int, int> parse_factor(std::string_view factor, std::string_view context) {
  if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X'))
    throw InvalidInput("malformed monomial '" + std::string(context) + "'");
  factor.remove_prefix(1);
  if (!factor.empty() && factor[0] == '_') factor.remove_prefix(1);
  auto caret = factor.find('^');
  int index = parse_int(factor.substr(0, caret), context);
  int power = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), context);
  if (index < 1 || power < 0)
    throw InvalidInput("malformed monomial '" + std::string(context) + "'");
  return {index, power};
}

template <typename Fn>
void for_each_factor(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto star = text.find('*', start);
    auto piece = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    fn(piece);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1) throw InvalidInput("variable indices are 1-based");
    if (k > 0 && indices_[k] <= indices_[k - 1])
      throw InvalidInput("index set must be strictly increasing");
  }
}

IndexSet::IndexSet(std::initializer_list<int> indices) : IndexSet(std::vector<int>(indices)) {}

IndexSet IndexSet::interval(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSet IndexSet::complement(int n) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSet(std::move(out));
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

IndexSet IndexSet::united(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(), other.indices_.end(),
                 std::back_inserter(out));
  return IndexSet(std::move(out));
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices_[k]);
  }
  return s + "}";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_indices(std::size_t n, std::span<const int> indices) {
  Monomial m(n);
  for (int i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw InvalidInput("variable x" + std::to_string(i) + " outside 1.." + std::to_string(n));
    m.exps_[static_cast<std::size_t>(i - 1)]++;
  }
  return m;
}

Monomial Monomial::from_indices(std::size_t n, std::initializer_list<int> indices) {
  return from_indices(n, std::span<const int>(indices.begin(), indices.size()));
}

Monomial Monomial::from_set(std::size_t n, const IndexSet& set) {
  return from_indices(n, std::span<const int>(set.values()));
}

Monomial Monomial::variable(std::size_t n, int index) { return from_indices(n, {index}); }

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

IndexSet Monomial::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(static_cast<int>(i + 1));
  return IndexSet(std::move(out));
}

std::vector<int> Monomial::index_sequence() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.insert(out.end(), exps_[i], static_cast<int>(i + 1));
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (exps_[i] > 1) {
      s += '^';
      s += std::to_string(exps_[i]);
    }
  }
  return s.empty() ? "1" : s;
}

Monomial product(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Monomial::Exponent> out(a.ambient());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned sum = unsigned(ea[i]) + eb[i];
    if (sum > std::numeric_limits<Monomial::Exponent>::max()) throw InvalidInput("exponent overflow");
    out[i] = static_cast<Monomial::Exponent>(sum);
  }
  return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] > eb[i]) return false;
  return true;
}

Monomial colon_monomial(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Monomial::Exponent> out(a.ambient());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ea[i] > eb[i] ? ea[i] - eb[i] : 0;
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Monomial::Exponent> out(a.ambient());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(ea[i], eb[i]);
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  std::vector<Monomial::Exponent> out(a.ambient());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(ea[i], eb[i]);
  return Monomial(std::move(out));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw InvalidInput(b.to_string() + " does not divide " + a.to_string());
  return colon_monomial(a, b);
}

std::strong_ordering purelex_compare(const Monomial& a, const Monomial& b) {
  require_same_ambient(a, b);
  return a <=> b;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  std::string clean = strip_spaces(text);
  if (clean.empty()) throw InvalidInput("empty monomial");
  Monomial m(n);
  if (clean == "1") return m;
  for_each_factor(std::string_view(clean), [&](std::string_view factor) {
    auto [index, power] = parse_factor(factor, clean);
    if (static_cast<std::size_t>(index) > n)
      throw InvalidInput("variable x" + std::to_string(index) + " outside 1.." + std::to_string(n));
    m.set_exponent(index, static_cast<Monomial::Exponent>(m.exponent(index) + power));
  });
  return m;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t n) {
  std::vector<Monomial> out;
  std::string clean = strip_spaces(text);
  std::size_t start = 0;
  while (start < clean.size()) {
    auto comma = clean.find(',', start);
    auto piece = clean.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_monomial(piece, n));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InvalidInput("empty monomial list");
  return out;
}

std::size_t infer_ambient(std::string_view text) {
  std::string clean = strip_spaces(text);
  std::size_t n = 0;
  std::size_t start = 0;
  while (start < clean.size()) {
    auto sep = clean.find_first_of(",*", start);
    auto piece = std::string_view(clean).substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (piece != "1") n = std::max(n, static_cast<std::size_t>(parse_factor(piece, clean).first));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return n;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tspread
