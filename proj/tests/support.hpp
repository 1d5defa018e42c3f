#pragma once

#include <string>
#include <vector>

#include "tspread/monomial.hpp"

namespace tspread::testing {

inline Monomial M(std::size_t n, const std::string& text) { return parse_monomial(text, n); }
inline std::vector<Monomial> Ms(std::size_t n, const std::string& text) { return parse_monomial_list(text, n); }

inline std::vector<std::string> texts(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

/// Every monomial in n variables with all exponents <= e.
inline std::vector<Monomial> all_bounded(std::size_t n, unsigned e) {
  std::vector<Monomial> out;
  Monomial m(n);
  while (true) {
    out.push_back(m);
    int i = 1;
    while (i <= static_cast<int>(n) && m.exponent(i) == e) m.set_exponent(i++, 0);
    if (i > static_cast<int>(n)) break;
    m.set_exponent(i, static_cast<Monomial::Exponent>(m.exponent(i) + 1));
  }
  return out;
}

}  // namespace tspread::testing
