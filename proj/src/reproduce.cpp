#include "tspread/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tspread/dual.hpp"
#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/powers.hpp"
#include "tspread/rees.hpp"

namespace tspread {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

std::string join(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : ", ") + m.to_string();
  return out;
}

std::vector<Monomial> monomials_of(const std::vector<DualGenerator>& ds) {
  std::vector<Monomial> out;
  for (const auto& d : ds) out.push_back(d.monomial);
  return out;
}

std::vector<Monomial> enumerated_generators(const BorelInstance& inst, const ReproduceOptions& opt) {
  auto gens = generators(inst);
  if (opt.drop_u) std::erase(gens, inst.u_monomial());
  return gens;
}

/// Complements of the brute-force facets of the complex of `gens`.
std::set<Monomial> brute_force_dual(const std::vector<Monomial>& gens, int n, const Guards& guards) {
  std::set<Monomial> out;
  for (const auto& f : oracle::maximal_nonfaces(gens, static_cast<std::size_t>(n), guards))
    out.insert(Monomial::from_set(static_cast<std::size_t>(n), f.complement(n)));
  return out;
}

/// Error-free when the closed-form SCM certificate is sound for `inst`.
std::string scm_failure(const BorelInstance& inst, const ReproduceOptions& opt) {
  const auto closed = dual_generators(inst);
  const auto brute = brute_force_dual(enumerated_generators(inst, opt), inst.n(), opt.guards);
  const auto closed_monomials = monomials_of(closed);
  if (std::set<Monomial>(closed_monomials.begin(), closed_monomials.end()) != brute)
    return inst.to_string() + ": Alexander dual of the enumerated generators disagrees with the closed form";
  const auto order = scm_order(closed, inst);
  const auto run = linear_quotients_check(monomials_of(order));
  if (!run.ok)
    return inst.to_string() + ": no linear quotients at position " + std::to_string(run.failed_index) + " against " +
           std::to_string(run.offending_index);
  return {};
}

CheckOutcome check(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string failure = body();
    if (failure.empty()) return {name, true, "ok"};
    return {name, false, failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

CheckOutcome example_dual(const ReproduceOptions& opt) {
  return check("example: Alexander dual of B_2(x2*x4*x9)", [&]() -> std::string {
    const auto inst = example_instance();
    const auto expected = parse_monomial_list("x1*x2, x1*x4, x3*x4, x1*x6*x7*x8*x9, x3*x6*x7*x8*x9, x5*x6*x7*x8*x9", 9);
    const auto got = monomials_of(scm_order(dual_generators(inst), inst));
    if (got != expected) return "got " + join(got);
    return scm_failure(inst, opt);
  });
}

CheckOutcome scm_suite(const ReproduceOptions& opt) {
  std::ostringstream name;
  name << "sequentially Cohen-Macaulay: " << opt.random_instances << " random instances, seed " << opt.seed;
  return check(name.str(), [&]() -> std::string {
    std::mt19937_64 rng(opt.seed);
    for (int c = 0; c < opt.random_instances; ++c) {
      auto failure = scm_failure(random_instance(rng, {1, 12, 4, false}), opt);
      if (!failure.empty()) return failure;
    }
    return {};
  });
}

CheckOutcome rees_gb() {
  return check("Rees algebra: sorted Groebner basis of B_2(x2*x4*x9)", []() -> std::string {
    ReesPresentation pres(example_instance());
    const auto gb = reduced_gb(pres);
    for (const auto& b : gb)
      if (!verify_kernel(b, pres)) return "binomial outside the kernel: " + pres.format(b.lhs) + " - " + pres.format(b.rhs);
    if (!x_condition_check(gb)) return "x-condition fails";
    if (!reducedness_check(gb).ok()) return "basis is not reduced";
    const auto bb = buchberger_verify(gb);
    if (bb.status != BuchbergerResult::Status::Verified) return "Buchberger check " + to_string(bb.status);
    if (!ell_exchange_check(pres, 2).ok) return "l-exchange fails in degree 2";
    return {};
  });
}

CheckOutcome depth_limit(const Guards& guards) {
  return check("limit depth: depth S/I^k = 0 for k >= d on B_2(x3*x5*x8)", [&]() -> std::string {
    const BorelInstance inst(8, 2, {3, 5, 8});
    for (int k : {3, 4}) {
      const auto r = depth_report(inst, k, guards);
      if (r.depth != 0 || r.projdim != 8)
        return "k = " + std::to_string(k) + ": depth " + std::to_string(r.depth) + ", projdim " + std::to_string(r.projdim);
    }
    if (!limdepth_witness(inst, 3, guards).verified()) return "witness does not produce x1..x7";
    return {};
  });
}

CheckOutcome veronese(const Guards& guards) {
  return check("Veronese: depth d-1 and analytic spread n-d+1 for B_2(x2*x4)", [&]() -> std::string {
    const BorelInstance inst(4, 2, {2, 4});
    for (int k : {2, 3, 4}) {
      const auto r = depth_report(inst, k, guards);
      if (r.depth != 1) return "k = " + std::to_string(k) + ": depth " + std::to_string(r.depth);
    }
    for (int k : {2, 3})
      if (!veronese_support_obstruction(inst, k, guards)) return "supp(u) meets a colon at k = " + std::to_string(k);
    if (int dim = fiber_dimension(inst); dim != 3) return "fiber dimension " + std::to_string(dim);
    return {};
  });
}

CheckOutcome fiber_dim() {
  return check("fiber ring: dim K[G(B_2(x3*x5*x8))] = 8", []() -> std::string {
    if (int dim = fiber_dimension(BorelInstance(8, 2, {3, 5, 8})); dim != 8) return "got " + std::to_string(dim);
    return {};
  });
}

CheckOutcome lex_witness() {
  return check("lex order: toric ideal of K[B_2(x6*x8*x10)] is not quadratic", []() -> std::string {
    ReesPresentation pres(BorelInstance(10, 2, {6, 8, 10}));
    const auto cubic = parse_monomial_list("x1*x3*x8, x1*x7*x9, x2*x4*x6", 10);
    const auto partner = parse_monomial_list("x1*x3*x9, x1*x6*x8, x2*x4*x7", 10);
    ToricBinomial f{pres.t_product(cubic), pres.t_product(partner), BinomialFamily::Other};
    if (!verify_kernel(f, pres)) return "cubic binomial is not in the toric ideal";
    if (!t_lex_greater(f.lhs, f.rhs)) return "cubic is not the lex-initial term";
    const auto w = lex_quadratic_witness(pres, f.lhs);
    if (w.divisor_found()) return "quadratic initial " + pres.format(w.dividing_initials.front()) + " divides the cubic";
    return {};
  });
}

CheckOutcome persistence(const Guards& guards) {
  return check("persistence: Ass(I^k) ascending for B_1(x2*x3) and B_2(x2*x4)", [&]() -> std::string {
    for (const auto& inst : {BorelInstance(3, 1, {2, 3}), BorelInstance(4, 2, {2, 4})}) {
      const auto res = persistence_check(inst, 3, guards);
      if (!res.ok) return inst.to_string() + ": fails at k = " + std::to_string(res.violating_k);
      for (int k = 1; k <= 2; ++k) {
        const auto gens = power_generators(inst, k, guards);
        for (const auto& p : res.ass[static_cast<std::size_t>(k - 1)])
          if (!ass_witness_oracle(gens, static_cast<std::size_t>(inst.n()), p, guards))
            return inst.to_string() + ": no witness for " + p.to_string() + " at k = " + std::to_string(k);
      }
    }
    return {};
  });
}

CheckOutcome minimal_prime() {
  return check("minimal primes: (x1..x_{i_1}) is minimal over every instance in 8 variables", []() -> std::string {
    for (int n = 1; n <= 8; ++n)
      for (const auto& inst : all_instances(n)) {
        const auto primes = minimal_primes(inst);
        if (!std::binary_search(primes.begin(), primes.end(), IndexSet::interval(1, inst.i(1))))
          return inst.to_string();
      }
    return {};
  });
}

CheckOutcome cohen_macaulay(const ReproduceOptions& opt) {
  return check("Cohen-Macaulay exactly for Veronese ideals", [&]() -> std::string {
    for (int t = 1; t <= 10; ++t)
      for (int d = 1; d * t <= 10; ++d) {
        std::vector<int> u;
        for (int p = 1; p <= d; ++p) u.push_back(p * t);
        const BorelInstance inst(d * t, t, IndexSet(u));
        if (!is_cohen_macaulay(inst, opt.guards)) return inst.to_string() + " is not Cohen-Macaulay";
      }
    std::mt19937_64 rng(opt.seed);
    int tested = 0;
    while (tested < 10) {
      const auto inst = random_instance(rng, {3, 10, 4, true});
      if (inst.degree() < 2 || inst.is_veronese()) continue;
      ++tested;
      if (is_cohen_macaulay(inst, opt.guards)) return inst.to_string() + " is Cohen-Macaulay";
    }
    return {};
  });
}

}  // namespace

BorelInstance example_instance() { return BorelInstance(9, 2, {2, 4, 9}); }

BorelInstance random_instance(std::mt19937_64& rng, const RandomInstanceShape& shape) {
  if (shape.n_min < 1 || shape.n_max < shape.n_min || shape.d_max < 1) throw InvalidInput("bad random instance shape");
  const int n = static_cast<int>(draw(rng, static_cast<std::uint64_t>(shape.n_min), static_cast<std::uint64_t>(shape.n_max)));
  const int d = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(std::min(shape.d_max, n))));
  const int t_max = d == 1 ? std::max(1, n - 1) : (n - 1) / (d - 1);
  const int t = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(t_max)));
  // i_k = c_k + (k-1)(t-1) for c_1 < ... < c_d drawn from [1, n - (d-1)(t-1)].
  const int slots = n - (d - 1) * (t - 1);
  std::vector<int> c(static_cast<std::size_t>(slots));
  std::iota(c.begin(), c.end(), 1);
  if (shape.last_is_n) {
    for (int k = 0; k < d - 1; ++k)
      std::swap(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(slots - 2)))]);
    c.resize(static_cast<std::size_t>(d - 1));
    c.push_back(slots);
  } else {
    for (int k = 0; k < d; ++k)
      std::swap(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(slots - 1)))]);
    c.resize(static_cast<std::size_t>(d));
  }
  std::sort(c.begin(), c.end());
  for (int k = 0; k < d; ++k) c[static_cast<std::size_t>(k)] += k * (t - 1);
  return BorelInstance(n, t, IndexSet(c));
}

std::vector<BorelInstance> all_instances(int n) {
  std::vector<BorelInstance> out;
  for (int t = 1; t <= std::max(1, n - 1); ++t) {
    std::vector<int> u;
    auto rec = [&](auto&& self, int from) -> void {
      for (int i = from; i <= n; ++i) {
        u.push_back(i);
        out.emplace_back(n, t, IndexSet(u));
        self(self, i + t);
        u.pop_back();
      }
    };
    rec(rec, 1);
  }
  return out;
}

ReproduceReport run_reproduction(const ReproduceOptions& options) {
  ReproduceReport report;
  report.checks.push_back(example_dual(options));
  report.checks.push_back(scm_suite(options));
  report.checks.push_back(rees_gb());
  report.checks.push_back(depth_limit(options.guards));
  report.checks.push_back(veronese(options.guards));
  report.checks.push_back(fiber_dim());
  report.checks.push_back(lex_witness());
  report.checks.push_back(persistence(options.guards));
  report.checks.push_back(minimal_prime());
  report.checks.push_back(cohen_macaulay(options));
  return report;
}

}  // namespace tspread
