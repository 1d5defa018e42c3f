#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "tspread/borel.hpp"
#include "tspread/dual.hpp"
#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/powers.hpp"
#include "tspread/rees.hpp"
#include "tspread/reports.hpp"
#include "tspread/reproduce.hpp"
#include "tspread/sortnet.hpp"

namespace tspread::cli {

namespace {

struct InstanceArgs {
  int n = 0;
  int t = 0;
  std::vector<int> u;

  BorelInstance instance() const { return BorelInstance(n, t, IndexSet(u)); }
};

void add_instance(CLI::App* sub, InstanceArgs& args, bool required = true) {
  auto* n = sub->add_option("--n", args.n, "number of variables");
  auto* t = sub->add_option("--t", args.t, "spread t >= 1");
  auto* u = sub->add_option("--u", args.u, "support of u as 1-based indices, e.g. 2,4,9")->delimiter(',');
  if (required) {
    n->required();
    t->required();
    u->required();
  }
}

/// Text "x1*x2,x3^2" or JSON: a list of exponent lists or of monomial strings.
std::vector<Monomial> parse_monomial_arg(const std::string& text, std::optional<std::size_t> n) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("bad JSON monomial list: ") + e.what());
    }
    if (!j.is_array()) throw InvalidInput("JSON monomial list must be an array");
    std::size_t ambient = 0;
    if (n) {
      ambient = *n;
    } else {
      for (const auto& e : j) {
        if (e.is_array())
          ambient = std::max(ambient, e.size());
        else if (e.is_string())
          ambient = std::max(ambient, infer_ambient(e.get<std::string>()));
      }
    }
    std::vector<Monomial> out;
    for (const auto& e : j) out.push_back(monomial_from_json(e, ambient));
    return out;
  }
  return parse_monomial_list(text, n ? *n : infer_ambient(text));
}

std::optional<std::size_t> ambient_arg(int n) {
  if (n < 0) throw InvalidInput("--n must be positive");
  if (n == 0) return std::nullopt;
  return static_cast<std::size_t>(n);
}

std::string join(const std::vector<Monomial>& ms, const char* sep = " ") {
  std::string out;
  for (const auto& m : ms) out += (out.empty() ? "" : sep) + m.to_string();
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename Report>
void emit(std::ostream& out, bool as_json, const Report& r, const std::function<void()>& text) {
  if (as_json)
    out << to_json(r).dump(2) << "\n";
  else
    text();
}

void print_profiles(std::ostream& out, const std::vector<QuotientProfile>& profiles) {
  for (std::size_t j = 0; j < profiles.size(); ++j)
    out << (j + 1) << "  " << profiles[j].generator.to_string() << "  r=" << profiles[j].r() << "  "
        << profiles[j].variables.to_string() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on t-spread principal Borel ideals", "tspread"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::size_t max_generators = 0;
  std::size_t max_components = 0;
  app.add_flag("--json", as_json, "print the report as JSON");
  app.add_option("--max-generators", max_generators, "guard on |G(I^k)| (overrides TSPREAD_MAX_GENERATORS)");
  app.add_option("--max-components", max_components, "guard on decomposition size (overrides TSPREAD_MAX_COMPONENTS)");

  InstanceArgs inst_args;
  int k = 0;
  int kmax = 3;
  std::size_t degree = 2;
  bool verify = false;
  bool skip_witness = false;
  int n_opt = 0;
  std::string monomials;
  std::string cubic_text;
  std::string partner_text;
  std::uint64_t seed = ReproduceOptions{}.seed;
  int instances = ReproduceOptions{}.random_instances;
  std::string fault;

  auto* gens_cmd = app.add_subcommand("gens", "minimal generators of B_t(u) in decreasing lex order");
  add_instance(gens_cmd, inst_args);
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual generators in linear-quotients order");
  add_instance(dual_cmd, inst_args);
  auto* facets_cmd = app.add_subcommand("facets", "facets of the Stanley-Reisner complex");
  add_instance(facets_cmd, inst_args);
  auto* scm_cmd = app.add_subcommand("scm-check", "verify linear quotients of the dual");
  add_instance(scm_cmd, inst_args);

  auto* sort_cmd = app.add_subcommand("sort", "sort a tuple of equal-degree monomials");
  sort_cmd->add_option("--monomials", monomials, "comma-separated text or a JSON list")->required();
  sort_cmd->add_option("--n", n_opt, "number of variables (inferred when omitted)");

  auto* gb_cmd = app.add_subcommand("rees-gb", "Groebner basis of the Rees algebra toric ideal");
  add_instance(gb_cmd, inst_args);
  gb_cmd->add_flag("--verify", verify, "run the marked Buchberger check");

  auto* ell_cmd = app.add_subcommand("ell-exchange", "check the l-exchange property in a given degree");
  add_instance(ell_cmd, inst_args);
  ell_cmd->add_option("--N", degree, "t-degree of the standard monomials")->capture_default_str();

  auto* lex_cmd = app.add_subcommand("lex-witness", "quadratic lex-initial divisors of a cubic t-monomial");
  add_instance(lex_cmd, inst_args, false);
  lex_cmd->add_option("--cubic", cubic_text, "three generators u1,u2,u3");
  lex_cmd->add_option("--partner", partner_text, "the other side v1,v2,v3 of the binomial");

  auto* fiber_cmd = app.add_subcommand("fiber-dim", "Krull dimension of the fiber ring K[G(I)]");
  add_instance(fiber_cmd, inst_args);

  auto* depth_cmd = app.add_subcommand("power-depth", "projective dimension and depth of S/I^k");
  add_instance(depth_cmd, inst_args);
  depth_cmd->add_option("--k", k, "power")->required();

  auto* limdepth_cmd = app.add_subcommand("limdepth-witness", "monomial whose lex colon is (x1..x_{n-1})");
  add_instance(limdepth_cmd, inst_args);
  limdepth_cmd->add_option("--k", k, "power (default d)");

  auto* ass_cmd = app.add_subcommand("ass", "associated primes of S/I^k");
  add_instance(ass_cmd, inst_args);
  ass_cmd->add_option("--k", k, "power")->required();
  ass_cmd->add_flag("--skip-witness", skip_witness, "do not run the witness-search oracle");

  auto* pers_cmd = app.add_subcommand("persistence", "check Ass(I^k) inside Ass(I^{k+1})");
  add_instance(pers_cmd, inst_args);
  pers_cmd->add_option("--kmax", kmax, "largest power")->capture_default_str();

  auto* repro_cmd = app.add_subcommand("reproduce", "run every worked example and theorem check");
  repro_cmd->add_option("--seed", seed, "seed for the random instance suites")->capture_default_str();
  repro_cmd->add_option("--instances", instances, "random instances in the linear-quotients suite")->capture_default_str();
  repro_cmd->add_option("--inject-fault", fault, "deliberately break a step (drop-u)")->check(CLI::IsMember({"drop-u"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force engines");
  oracle_cmd->require_subcommand(1);
  std::string decompose_gens;
  auto* decompose_cmd = oracle_cmd->add_subcommand("decompose", "irredundant irreducible decomposition");
  decompose_cmd->add_option("--gens", decompose_gens, "generators, text or JSON list")->required();
  decompose_cmd->add_option("--n", n_opt, "number of variables (inferred when omitted)");

  const InstanceArgs lex_defaults{10, 2, {6, 8, 10}};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Guards guards = Guards::from_env();
    if (max_generators > 0) guards.max_power_generators = max_generators;
    if (max_components > 0) guards.max_components = max_components;

    if (gens_cmd->parsed()) {
      GeneratorsReport r{inst_args.instance(), generators(inst_args.instance())};
      emit(out, as_json, r, [&] {
        out << r.instance.to_string() << ": " << r.generators.size() << " generators\n";
        for (const auto& g : r.generators) out << g.to_string() << "\n";
      });
      return kOk;
    }

    if (dual_cmd->parsed()) {
      const auto inst = inst_args.instance();
      DualReport r{inst, support_covers_ambient(inst), scm_order(dual_generators(inst), inst)};
      emit(out, as_json, r, [&] {
        if (!r.support_covers_ambient) out << "note: some variable divides no generator\n";
        for (const auto& g : r.generators) out << g.monomial.to_string() << "  " << to_string(g.form) << "\n";
      });
      return kOk;
    }

    if (facets_cmd->parsed()) {
      const auto inst = inst_args.instance();
      FacetsReport r{inst, facets(inst)};
      emit(out, as_json, r, [&] {
        for (const auto& f : r.facets) out << to_string(f.form) << "  " << f.members.to_string() << "\n";
      });
      return kOk;
    }

    if (scm_cmd->parsed()) {
      const auto inst = inst_args.instance();
      auto order = scm_order(dual_generators(inst), inst);
      std::vector<Monomial> ms;
      for (const auto& g : order) ms.push_back(g.monomial);
      ScmReport r{inst, order, linear_quotients_check(ms)};
      emit(out, as_json, r, [&] {
        print_profiles(out, r.quotients.profiles);
        if (r.quotients.ok)
          out << "linear quotients: ok\n";
        else
          out << "linear quotients: FAILED at " << r.quotients.failed_index << " against " << r.quotients.offending_index
              << "\n";
      });
      return r.quotients.ok ? kOk : kClaimFailed;
    }

    if (sort_cmd->parsed()) {
      auto input = parse_monomial_arg(monomials, ambient_arg(n_opt));
      if (input.empty()) throw InvalidInput("no monomials given");
      auto sorted = sort_tuple(input);
      SortReport r{input.front().ambient(), input, sorted.factors(), is_sorted_tuple(input)};
      emit(out, as_json, r, [&] {
        out << join(r.sorted) << "\n";
        out << "input sorted: " << yes_no(r.input_sorted) << "\n";
      });
      return kOk;
    }

    if (gb_cmd->parsed()) {
      const auto inst = inst_args.instance();
      ReesPresentation pres(inst);
      auto gb = reduced_gb(pres);
      bool kernel_ok = std::all_of(gb.begin(), gb.end(), [&](const ToricBinomial& b) { return verify_kernel(b, pres); });
      ReesGbReport r{inst, gb, kernel_ok, x_condition_check(gb), reducedness_check(gb), std::nullopt};
      std::optional<BuchbergerResult> bb;
      if (verify) {
        bb = buchberger_verify(gb);
        r.buchberger = to_string(bb->status);
      }
      emit(out, as_json, r, [&] {
        for (const auto& b : r.binomials)
          out << pres.format(b.lhs) << " - " << pres.format(b.rhs) << "  [" << to_string(b.family) << "]\n";
        out << r.binomials.size() << " binomials; kernel " << yes_no(r.kernel_ok) << ", x-condition "
            << yes_no(r.x_condition) << ", reduced " << yes_no(r.reducedness.ok()) << "\n";
        if (bb) {
          out << "buchberger: " << *r.buchberger << " (" << bb->pairs_checked << " pairs, " << bb->pairs_skipped_coprime
              << " coprime skipped)\n";
          if (bb->pair) out << "S-pair: " << bb->pair->first << ", " << bb->pair->second << "\n";
        }
      });
      if (!r.kernel_ok || !r.x_condition || !r.reducedness.ok()) return kClaimFailed;
      if (bb && bb->status == BuchbergerResult::Status::Failed) return kClaimFailed;
      if (bb && bb->status == BuchbergerResult::Status::Inconclusive) return kGuardRefused;
      return kOk;
    }

    if (ell_cmd->parsed()) {
      const auto inst = inst_args.instance();
      ExchangeReport r{inst, degree, ell_exchange_check(ReesPresentation(inst), degree)};
      emit(out, as_json, r, [&] {
        out << "l-exchange in degree " << degree << ": " << (r.result.ok ? "ok" : "FAILED") << " (" << r.result.pairs_checked
            << " pairs)\n";
      });
      return r.result.ok ? kOk : kClaimFailed;
    }

    if (lex_cmd->parsed()) {
      InstanceArgs a = lex_defaults;
      if (!inst_args.u.empty() || inst_args.n != 0 || inst_args.t != 0) {
        if (inst_args.u.empty() || inst_args.n == 0 || inst_args.t == 0)
          throw InvalidInput("--n, --t and --u go together");
        a = inst_args;
      }
      const auto inst = a.instance();
      const bool default_instance = inst == lex_defaults.instance();
      if (cubic_text.empty()) {
        if (!default_instance) throw InvalidInput("--cubic is required for this instance");
        cubic_text = "x1*x3*x8,x1*x7*x9,x2*x4*x6";
        if (partner_text.empty()) partner_text = "x1*x3*x9,x1*x6*x8,x2*x4*x7";
      }
      ReesPresentation pres(inst);
      const auto n = static_cast<std::size_t>(inst.n());
      auto cubic = parse_monomial_list(cubic_text, n);
      auto cubic_t = pres.t_product(cubic);
      LexWitnessCliReport r{inst, cubic, {}, std::nullopt, std::nullopt, is_sorted_tuple(cubic),
                            lex_quadratic_witness(pres, cubic_t)};
      if (!partner_text.empty()) {
        r.partner = parse_monomial_list(partner_text, n);
        auto partner_t = pres.t_product(r.partner);
        r.binomial_in_kernel = cubic_t != partner_t && pres.image(cubic_t) == pres.image(partner_t);
        r.cubic_is_lex_initial = t_lex_greater(cubic_t, partner_t);
      }
      emit(out, as_json, r, [&] {
        out << "cubic: " << pres.format(cubic_t) << " (sorted: " << yes_no(r.cubic_sorted) << ")\n";
        if (r.binomial_in_kernel) {
          out << "binomial in toric ideal: " << yes_no(*r.binomial_in_kernel) << "\n";
          out << "cubic is lex-initial: " << yes_no(*r.cubic_is_lex_initial) << "\n";
        }
        out << r.witness.quadratic_binomials << " quadratic binomials, " << r.witness.quadratic_initials
            << " lex-initial terms\n";
        if (r.witness.divisor_found())
          for (const auto& d : r.witness.dividing_initials) out << "divides the cubic: " << pres.format(d) << "\n";
        else
          out << "no quadratic lex-initial term divides the cubic\n";
      });
      bool ok = !r.witness.divisor_found() && r.binomial_in_kernel.value_or(true) && r.cubic_is_lex_initial.value_or(true);
      return ok ? kOk : kClaimFailed;
    }

    if (fiber_cmd->parsed()) {
      FiberDimReport r{inst_args.instance(), fiber_dimension(inst_args.instance())};
      emit(out, as_json, r, [&] { out << "dim K[G(I)] = " << r.dimension << "\n"; });
      return kOk;
    }

    if (depth_cmd->parsed()) {
      auto r = depth_report(inst_args.instance(), k, guards);
      emit(out, as_json, r, [&] {
        out << "k = " << r.k << ": projdim " << r.projdim << ", depth " << r.depth;
        if (r.witness) out << ", witness " << r.witness->to_string();
        out << "\n";
      });
      return kOk;
    }

    if (limdepth_cmd->parsed()) {
      const auto inst = inst_args.instance();
      if (k == 0) k = inst.degree();
      LimdepthReport r{inst, k, limdepth_witness(inst, k, guards)};
      emit(out, as_json, r, [&] {
        out << "w = " << r.witness.w.to_string() << "\n";
        for (const auto& s : r.witness.steps)
          out << "x" << s.j << ": s=" << s.s << "  " << s.replaced.to_string() << " -> " << s.replacement.to_string()
              << "  " << (s.ok() ? "ok" : "FAILED") << "\n";
        out << "colon variables " << r.witness.colon_variables.to_string() << ": "
            << (r.witness.verified() ? "verified" : "FAILED") << "\n";
      });
      return r.witness.verified() ? kOk : kClaimFailed;
    }

    if (ass_cmd->parsed()) {
      const auto inst = inst_args.instance();
      const auto n = static_cast<std::size_t>(inst.n());
      auto gens = power_generators(inst, k, guards);
      AssReport r{inst, k, associated_primes(gens, n, guards), {}};
      bool agree = true;
      for (const auto& p : r.primes) {
        r.witnesses.push_back(skip_witness ? std::nullopt : ass_witness_oracle(gens, n, p, guards));
        if (!skip_witness && !r.witnesses.back()) agree = false;
      }
      emit(out, as_json, r, [&] {
        for (std::size_t p = 0; p < r.primes.size(); ++p) {
          out << r.primes[p].to_string();
          if (r.witnesses[p]) out << "  witness " << r.witnesses[p]->to_string();
          else if (!skip_witness) out << "  NO WITNESS";
          out << "\n";
        }
      });
      return agree ? kOk : kClaimFailed;
    }

    if (pers_cmd->parsed()) {
      const auto inst = inst_args.instance();
      PersistenceReport r{inst, kmax, persistence_check(inst, kmax, guards)};
      emit(out, as_json, r, [&] {
        for (std::size_t i = 0; i < r.result.ass.size(); ++i) {
          out << "Ass(I^" << (i + 1) << "):";
          for (const auto& p : r.result.ass[i]) out << " " << p.to_string();
          out << "\n";
        }
        out << "persistence: " << (r.result.ok ? "ok" : "FAILED at k = " + std::to_string(r.result.violating_k)) << "\n";
      });
      return r.result.ok ? kOk : kClaimFailed;
    }

    if (repro_cmd->parsed()) {
      ReproduceOptions opt;
      opt.seed = seed;
      opt.random_instances = instances;
      opt.drop_u = fault == "drop-u";
      opt.guards = guards;
      auto r = run_reproduction(opt);
      emit(out, as_json, r, [&] {
        for (const auto& c : r.checks) {
          out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
          if (!c.passed) out << ": " << c.detail;
          out << "\n";
        }
      });
      return r.all_passed() ? kOk : kClaimFailed;
    }

    if (decompose_cmd->parsed()) {
      auto gens = parse_monomial_arg(decompose_gens, ambient_arg(n_opt));
      if (gens.empty()) throw InvalidInput("no generators given");
      const std::size_t n = gens.front().ambient();
      DecomposeReport r{n, oracle::minimize(gens), oracle::irreducible_decomposition(gens, n, guards)};
      emit(out, as_json, r, [&] {
        for (const auto& c : r.components) out << c.to_string() << "\n";
      });
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kGuardRefused;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ClaimViolation& e) {
    err << "claim failed: " << e.what() << "\n";
    return kClaimFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace tspread::cli
