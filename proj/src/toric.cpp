#include "tspread/toric.hpp"

#include "tspread/errors.hpp"

namespace tspread {

std::vector<PresVar> ReesMonomial::variables() const {
  std::vector<PresVar> out;
  for (int i : x.index_sequence()) out.push_back({PresVar::Kind::X, i});
  for (int i : t.index_sequence()) out.push_back({PresVar::Kind::T, i});
  return out;
}

ReesMonomial product(const ReesMonomial& a, const ReesMonomial& b) {
  return {product(a.x, b.x), product(a.t, b.t)};
}

bool divides(const ReesMonomial& a, const ReesMonomial& b) { return divides(a.x, b.x) && divides(a.t, b.t); }

ReesMonomial quotient(const ReesMonomial& a, const ReesMonomial& b) {
  return {quotient(a.x, b.x), quotient(a.t, b.t)};
}

ReesMonomial lcm(const ReesMonomial& a, const ReesMonomial& b) { return {lcm(a.x, b.x), lcm(a.t, b.t)}; }

bool coprime(const ReesMonomial& a, const ReesMonomial& b) {
  return gcd(a.x, b.x).is_one() && gcd(a.t, b.t).is_one();
}

std::string to_string(BinomialFamily family) {
  switch (family) {
    case BinomialFamily::Sorting: return "sorting";
    case BinomialFamily::X: return "x";
    case BinomialFamily::Other: return "other";
  }
  return "?";
}

BinomialFamily binomial_family_from_string(const std::string& name) {
  if (name == "sorting") return BinomialFamily::Sorting;
  if (name == "x") return BinomialFamily::X;
  if (name == "other") return BinomialFamily::Other;
  throw InvalidInput("unknown binomial family '" + name + "'");
}

}  // namespace tspread
