#include "tspread/rees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/sortnet.hpp"

namespace tspread {

// ------------------------------------------------------------ presentation

ReesPresentation::ReesPresentation(BorelInstance inst) : inst_(std::move(inst)), gens_(generators(inst_)) {
  for (std::size_t k = 0; k < gens_.size(); ++k) index_.emplace(gens_[k], static_cast<int>(k + 1));
}

std::optional<int> ReesPresentation::t_index(const Monomial& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ReesMonomial ReesPresentation::one() const { return {Monomial(n()), Monomial(m())}; }

ReesMonomial ReesPresentation::x_var(int i) const { return {Monomial::variable(n(), i), Monomial(m())}; }

ReesMonomial ReesPresentation::t_var(const Monomial& v) const {
  auto k = t_index(v);
  if (!k) throw InvalidInput(v.to_string() + " is not a generator of " + inst_.to_string());
  return {Monomial(n()), Monomial::variable(m(), *k)};
}

ReesMonomial ReesPresentation::t_product(std::span<const Monomial> vs) const {
  ReesMonomial out = one();
  for (const auto& v : vs) out = product(out, t_var(v));
  return out;
}

ReesPresentation::Image ReesPresentation::image(const ReesMonomial& mono) const {
  Image img{mono.x, 0};
  for (int k : mono.t.index_sequence()) {
    img.x = product(img.x, generator(k));
    ++img.t_power;
  }
  return img;
}

std::string ReesPresentation::format(const ReesMonomial& mono) const {
  std::string s = mono.x.is_one() ? "" : mono.x.to_string();
  for (int k : mono.t.index_sequence()) {
    if (!s.empty()) s += '*';
    s += "t[" + generator(k).to_string() + "]";
  }
  return s.empty() ? "1" : s;
}

ReesMonomial ReesPresentation::parse(const std::string& text) const {
  ReesMonomial out = one();
  std::string clean;
  for (char c : text)
    if (c != ' ') clean.push_back(c);
  if (clean == "1") return out;
  std::size_t pos = 0;
  while (pos < clean.size()) {
    if (clean[pos] == 't') {
      if (pos + 1 >= clean.size() || clean[pos + 1] != '[') throw InvalidInput("malformed t-variable in '" + text + "'");
      auto close = clean.find(']', pos);
      if (close == std::string::npos) throw InvalidInput("unterminated t[...] in '" + text + "'");
      out = product(out, t_var(parse_monomial(clean.substr(pos + 2, close - pos - 2), n())));
      pos = close + 1;
    } else {
      auto star = clean.find('*', pos);
      out.x = product(out.x, parse_monomial(clean.substr(pos, star == std::string::npos ? std::string::npos : star - pos), n()));
      pos = star == std::string::npos ? clean.size() : star;
    }
    if (pos < clean.size()) {
      if (clean[pos] != '*') throw InvalidInput("malformed presentation monomial '" + text + "'");
      ++pos;
    }
  }
  return out;
}

// ------------------------------------------------------------ closed-form GB

std::vector<ToricBinomial> sorting_relations(const ReesPresentation& pres) {
  std::vector<ToricBinomial> out;
  const auto& gens = pres.gens();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      auto [v, w] = sort_pair(gens[a], gens[b]);
      if ((v == gens[a] && w == gens[b]) || (v == gens[b] && w == gens[a])) continue;
      Monomial lhs_pair[] = {gens[a], gens[b]};
      Monomial rhs_pair[] = {v, w};
      out.push_back({pres.t_product(lhs_pair), pres.t_product(rhs_pair), BinomialFamily::Sorting});
    }
  }
  return out;
}

std::vector<ToricBinomial> x_relations(const ReesPresentation& pres) {
  std::vector<ToricBinomial> out;
  const int n = static_cast<int>(pres.n());
  for (const auto& v : pres.gens()) {
    const auto supp = v.support();
    for (int i = 1; i <= n; ++i) {
      for (auto it = supp.values().rbegin(); it != supp.values().rend() && *it > i; ++it) {
        Monomial w = v;
        w.set_exponent(*it, static_cast<Monomial::Exponent>(w.exponent(*it) - 1));
        w.set_exponent(i, static_cast<Monomial::Exponent>(w.exponent(i) + 1));
        if (!pres.t_index(w)) continue;
        out.push_back({product(pres.x_var(i), pres.t_var(v)), product(pres.x_var(*it), pres.t_var(w)), BinomialFamily::X});
        break;
      }
    }
  }
  return out;
}

std::vector<ToricBinomial> reduced_gb(const ReesPresentation& pres) {
  auto out = x_relations(pres);
  auto sorting = sorting_relations(pres);
  out.insert(out.end(), sorting.begin(), sorting.end());
  return out;
}

bool verify_kernel(const ToricBinomial& b, const ReesPresentation& pres) {
  if (b.lhs == b.rhs) return false;
  return pres.image(b.lhs) == pres.image(b.rhs);
}

// ------------------------------------------------------------ verification

std::string to_string(BuchbergerResult::Status status) {
  switch (status) {
    case BuchbergerResult::Status::Verified: return "verified";
    case BuchbergerResult::Status::Failed: return "failed";
    case BuchbergerResult::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

BuchbergerResult buchberger_verify(std::span<const ToricBinomial> gb) {
  BuchbergerResult result;
  if (gb.empty()) return result;
  oracle::MarkedReducer reducer(gb);

  const std::size_t n = gb.front().lhs.x.ambient();
  const std::size_t m = gb.front().lhs.t.ambient();
  std::vector<std::vector<std::size_t>> by_var(n + m);
  for (std::size_t k = 0; k < gb.size(); ++k) {
    for (int i : gb[k].lhs.x.support()) by_var[std::size_t(i - 1)].push_back(k);
    for (int i : gb[k].lhs.t.support()) by_var[n + std::size_t(i - 1)].push_back(k);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& bucket : by_var)
    for (std::size_t a = 0; a < bucket.size(); ++a)
      for (std::size_t b = a + 1; b < bucket.size(); ++b) pairs.emplace_back(bucket[a], bucket[b]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  result.pairs_skipped_coprime = gb.size() * (gb.size() - 1) / 2 - pairs.size();

  for (auto [a, b] : pairs) {
    ++result.pairs_checked;
    const ReesMonomial l = lcm(gb[a].lhs, gb[b].lhs);
    PresPolynomial spoly;
    spoly[product(quotient(l, gb[a].lhs), gb[a].rhs)] += 1;
    spoly[product(quotient(l, gb[b].lhs), gb[b].rhs)] -= 1;
    auto red = reducer.reduce(std::move(spoly));
    if (!red.conclusive) {
      if (result.status == BuchbergerResult::Status::Verified) {
        result.status = BuchbergerResult::Status::Inconclusive;
        result.pair = {a, b};
        result.remainder = std::move(red.remainder);
      }
      continue;
    }
    if (!red.remainder.empty()) {
      result.status = BuchbergerResult::Status::Failed;
      result.pair = {a, b};
      result.remainder = std::move(red.remainder);
      return result;
    }
  }
  return result;
}

bool x_condition_check(std::span<const ToricBinomial> gb) {
  return std::all_of(gb.begin(), gb.end(), [](const ToricBinomial& b) {
    return b.lhs.x_degree() <= 1 && b.lhs.t_degree() <= 2;
  });
}

ReducednessReport reducedness_check(std::span<const ToricBinomial> gb) {
  ReducednessReport report;
  for (const auto& b : gb)
    if (!b.lhs.is_squarefree()) report.initials_squarefree = false;
  for (std::size_t a = 0; a < gb.size(); ++a)
    for (std::size_t b = 0; b < gb.size(); ++b)
      if (a != b && divides(gb[a].lhs, gb[b].lhs)) report.initials_antichain = false;
  oracle::MarkedReducer reducer(gb);
  for (const auto& b : gb)
    if (reducer.find_reducer(b.rhs)) report.tails_standard = false;
  return report;
}

std::vector<std::vector<int>> standard_t_monomials(const ReesPresentation& pres, std::size_t degree) {
  const auto& gens = pres.gens();
  const std::size_t m = gens.size();
  std::vector<char> sorted_pair(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) sorted_pair[a * m + b] = is_sorted_pair(gens[a], gens[b]);

  std::vector<std::vector<int>> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == degree) {
      std::vector<int> tuple;
      for (auto c : chosen) tuple.push_back(static_cast<int>(c + 1));
      out.push_back(std::move(tuple));
      return;
    }
    for (std::size_t c = from; c < m; ++c) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t p) { return sorted_pair[p * m + c]; });
      if (!ok) continue;
      chosen.push_back(c);
      self(self, c);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ExchangeResult ell_exchange_check(const ReesPresentation& pres, std::size_t degree) {
  ExchangeResult result;
  const auto& inst = pres.instance();
  const int n = inst.n();
  auto tuples = standard_t_monomials(pres, degree);
  std::vector<Monomial> products;
  for (const auto& tup : tuples) {
    Monomial p(pres.n());
    for (int k : tup) p = product(p, pres.generator(k));
    products.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = 0; b < tuples.size(); ++b) {
      int q = 0;
      for (int i = 1; i <= n; ++i) {
        if (products[a].exponent(i) != products[b].exponent(i)) {
          q = i;
          break;
        }
      }
      if (q == 0 || q > n - 1 || products[a].exponent(q) >= products[b].exponent(q)) continue;
      ++result.pairs_checked;
      bool found = false;
      for (int k : tuples[a]) {
        const Monomial& ud = pres.generator(k);
        for (int j : ud.support()) {
          if (j <= q) continue;
          Monomial moved = ud;
          moved.set_exponent(j, static_cast<Monomial::Exponent>(moved.exponent(j) - 1));
          moved.set_exponent(q, static_cast<Monomial::Exponent>(moved.exponent(q) + 1));
          if (contains(inst, moved)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        result.ok = false;
        result.lower = tuples[a];
        result.upper = tuples[b];
        result.q = q;
        return result;
      }
    }
  }
  return result;
}

bool t_lex_greater(const ReesMonomial& a, const ReesMonomial& b) {
  // t-exponents are stored t_1 first; vector order is lex with t_1 largest.
  return a.t > b.t;
}

LexWitnessReport lex_quadratic_witness(const ReesPresentation& pres, const ReesMonomial& cubic) {
  if (!cubic.x.is_one()) throw InvalidInput("lex witness works in the fiber ring: no x-variables");
  const auto& gens = pres.gens();
  std::map<Monomial, std::vector<ReesMonomial>> fibers;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      Monomial pair[] = {gens[a], gens[b]};
      fibers[product(gens[a], gens[b])].push_back(pres.t_product(pair));
    }
  LexWitnessReport report;
  for (auto& [image, members] : fibers) {
    if (members.size() < 2) continue;
    report.quadratic_binomials += members.size() * (members.size() - 1) / 2;
    // Every member except the lex-smallest is the initial term of some
    // binomial in its fiber.
    auto smallest = std::min_element(members.begin(), members.end(),
                                     [](const ReesMonomial& x, const ReesMonomial& y) { return t_lex_greater(y, x); });
    for (auto it = members.begin(); it != members.end(); ++it) {
      if (it == smallest) continue;
      ++report.quadratic_initials;
      if (divides(*it, cubic)) report.dividing_initials.push_back(*it);
    }
  }
  return report;
}

int integer_matrix_rank(std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    const auto& piv = rows[pivot_row];
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      long long a = piv[c];
      long long b = rows[r][c];
      long long g = std::gcd(a, b);
      long long fa = b / g;
      long long fb = a / g;
      long long row_gcd = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = rows[r][k] * fb - piv[k] * fa;
        row_gcd = std::gcd(row_gcd, rows[r][k]);
      }
      if (row_gcd > 1)
        for (auto& x : rows[r]) x /= row_gcd;
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

int fiber_dimension(const BorelInstance& inst) {
  std::vector<std::vector<long long>> rows;
  for (const auto& g : generators(inst)) {
    std::vector<long long> row;
    for (auto e : g.exponents()) row.push_back(e);
    rows.push_back(std::move(row));
  }
  return integer_matrix_rank(std::move(rows));
}

}  // namespace tspread
