#include "tspread/reports.hpp"

#include "tspread/errors.hpp"

namespace tspread {

namespace {

std::size_t n_of(const BorelInstance& inst) { return static_cast<std::size_t>(inst.n()); }

json monomials_to_json(const std::vector<Monomial>& ms) {
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(monomial_to_json(m));
  return arr;
}

std::vector<Monomial> monomials_from_json(const json& j, std::size_t n) {
  std::vector<Monomial> out;
  for (const auto& e : j) out.push_back(monomial_from_json(e, n));
  return out;
}

json index_set_to_json(const IndexSet& s) { return json(s.values()); }
IndexSet index_set_from_json(const json& j) { return IndexSet(j.get<std::vector<int>>()); }

json dual_to_json(const DualGenerator& g) { return {{"monomial", monomial_to_json(g.monomial)}, {"form", to_string(g.form)}}; }
DualGenerator dual_from_json(const json& j, std::size_t n) {
  return {monomial_from_json(j.at("monomial"), n), facet_form_from_string(j.at("form").get<std::string>())};
}

json duals_to_json(const std::vector<DualGenerator>& gs) {
  json arr = json::array();
  for (const auto& g : gs) arr.push_back(dual_to_json(g));
  return arr;
}
std::vector<DualGenerator> duals_from_json(const json& j, std::size_t n) {
  std::vector<DualGenerator> out;
  for (const auto& e : j) out.push_back(dual_from_json(e, n));
  return out;
}

json lq_to_json(const LinearQuotientsResult& r) {
  json profiles = json::array();
  for (const auto& p : r.profiles)
    profiles.push_back({{"generator", monomial_to_json(p.generator)}, {"r", p.r()}, {"variables", index_set_to_json(p.variables)}});
  return {{"ok", r.ok}, {"failed_index", r.failed_index}, {"offending_index", r.offending_index}, {"profiles", profiles}};
}
LinearQuotientsResult lq_from_json(const json& j, std::size_t n) {
  LinearQuotientsResult r;
  r.ok = j.at("ok").get<bool>();
  r.failed_index = j.at("failed_index").get<std::size_t>();
  r.offending_index = j.at("offending_index").get<std::size_t>();
  for (const auto& p : j.at("profiles"))
    r.profiles.push_back({monomial_from_json(p.at("generator"), n), index_set_from_json(p.at("variables"))});
  return r;
}

json binomial_to_json(const ToricBinomial& b, const ReesPresentation& pres) {
  return {{"lhs", pres.format(b.lhs)}, {"rhs", pres.format(b.rhs)}, {"marked", "lhs"}, {"family", to_string(b.family)}};
}
ToricBinomial binomial_from_json(const json& j, const ReesPresentation& pres) {
  if (j.value("marked", std::string("lhs")) != "lhs") throw InvalidInput("binomials must be marked on lhs");
  return {pres.parse(j.at("lhs").get<std::string>()), pres.parse(j.at("rhs").get<std::string>()),
          binomial_family_from_string(j.at("family").get<std::string>())};
}

json opt_monomial_to_json(const std::optional<Monomial>& m) { return m ? monomial_to_json(*m) : json(nullptr); }
std::optional<Monomial> opt_monomial_from_json(const json& j, std::size_t n) {
  if (j.is_null()) return std::nullopt;
  return monomial_from_json(j, n);
}

}  // namespace

json instance_to_json(const BorelInstance& inst) {
  return {{"n", inst.n()}, {"t", inst.t()}, {"u", inst.u().values()}};
}

BorelInstance instance_from_json(const json& j) {
  return BorelInstance(j.at("n").get<int>(), j.at("t").get<int>(), IndexSet(j.at("u").get<std::vector<int>>()));
}

json monomial_to_json(const Monomial& m) { return m.to_string(); }

Monomial monomial_from_json(const json& j, std::size_t n) {
  if (j.is_string()) return parse_monomial(j.get<std::string>(), n);
  if (j.is_array()) {
    auto exps = j.get<std::vector<int>>();
    if (exps.size() != n) throw InvalidInput("exponent list has " + std::to_string(exps.size()) + " entries, expected " + std::to_string(n));
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] < 0) throw InvalidInput("negative exponent");
      m.set_exponent(static_cast<int>(i + 1), static_cast<Monomial::Exponent>(exps[i]));
    }
    return m;
  }
  throw InvalidInput("monomial must be text or an exponent list");
}

bool ReproduceReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

// ------------------------------------------------------------ to_json

json to_json(const GeneratorsReport& r) {
  return {{"instance", instance_to_json(r.instance)}, {"count", r.generators.size()}, {"generators", monomials_to_json(r.generators)}};
}

json to_json(const DualReport& r) {
  return {{"instance", instance_to_json(r.instance)},
          {"support_covers_ambient", r.support_covers_ambient},
          {"generators", duals_to_json(r.generators)}};
}

json to_json(const FacetsReport& r) {
  json arr = json::array();
  for (const auto& f : r.facets)
    arr.push_back({{"form", to_string(f.form)}, {"starts", f.starts}, {"s", f.s}, {"members", index_set_to_json(f.members)}});
  return {{"instance", instance_to_json(r.instance)}, {"facets", arr}};
}

json to_json(const ScmReport& r) {
  return {{"instance", instance_to_json(r.instance)}, {"order", duals_to_json(r.order)}, {"linear_quotients", lq_to_json(r.quotients)}};
}

json to_json(const SortReport& r) {
  return {{"n", r.n}, {"input", monomials_to_json(r.input)}, {"sorted", monomials_to_json(r.sorted)}, {"input_sorted", r.input_sorted}};
}

json to_json(const ReesGbReport& r) {
  ReesPresentation pres(r.instance);
  json arr = json::array();
  for (const auto& b : r.binomials) arr.push_back(binomial_to_json(b, pres));
  json j = {{"instance", instance_to_json(r.instance)},
            {"generators", monomials_to_json(pres.gens())},
            {"binomials", arr},
            {"kernel_ok", r.kernel_ok},
            {"x_condition", r.x_condition},
            {"reducedness",
             {{"initials_squarefree", r.reducedness.initials_squarefree},
              {"initials_antichain", r.reducedness.initials_antichain},
              {"tails_standard", r.reducedness.tails_standard}}}};
  j["buchberger"] = r.buchberger ? json(*r.buchberger) : json(nullptr);
  return j;
}

json to_json(const ExchangeReport& r) {
  return {{"instance", instance_to_json(r.instance)},
          {"N", r.degree},
          {"ok", r.result.ok},
          {"pairs_checked", r.result.pairs_checked},
          {"q", r.result.q},
          {"lower", r.result.lower},
          {"upper", r.result.upper}};
}

json to_json(const LexWitnessCliReport& r) {
  ReesPresentation pres(r.instance);
  json divs = json::array();
  for (const auto& m : r.witness.dividing_initials) divs.push_back(pres.format(m));
  json j = {{"instance", instance_to_json(r.instance)},
            {"cubic", monomials_to_json(r.cubic)},
            {"partner", monomials_to_json(r.partner)},
            {"cubic_sorted", r.cubic_sorted},
            {"quadratic_binomials", r.witness.quadratic_binomials},
            {"quadratic_initials", r.witness.quadratic_initials},
            {"dividing_initials", divs},
            {"divisor_found", r.witness.divisor_found()}};
  j["binomial_in_kernel"] = r.binomial_in_kernel ? json(*r.binomial_in_kernel) : json(nullptr);
  j["cubic_is_lex_initial"] = r.cubic_is_lex_initial ? json(*r.cubic_is_lex_initial) : json(nullptr);
  return j;
}

json to_json(const FiberDimReport& r) { return {{"instance", instance_to_json(r.instance)}, {"dimension", r.dimension}}; }

json to_json(const DepthReport& r) {
  return {{"n", r.n}, {"k", r.k}, {"projdim", r.projdim}, {"depth", r.depth}, {"witness", opt_monomial_to_json(r.witness)}};
}

json to_json(const LimdepthReport& r) {
  json steps = json::array();
  for (const auto& s : r.witness.steps)
    steps.push_back({{"j", s.j},
                     {"s", s.s},
                     {"replaced", monomial_to_json(s.replaced)},
                     {"replacement", monomial_to_json(s.replacement)},
                     {"w_prime", monomial_to_json(s.w_prime)},
                     {"replacement_is_generator", s.replacement_is_generator},
                     {"lex_greater", s.lex_greater},
                     {"identity_holds", s.identity_holds}});
  return {{"instance", instance_to_json(r.instance)},
          {"k", r.k},
          {"chain", monomials_to_json(r.witness.chain)},
          {"w", monomial_to_json(r.witness.w)},
          {"steps", steps},
          {"colon_variables", index_set_to_json(r.witness.colon_variables)},
          {"verified", r.witness.verified()}};
}

json to_json(const AssReport& r) {
  json primes = json::array();
  for (std::size_t k = 0; k < r.primes.size(); ++k) {
    json p = {{"prime", index_set_to_json(r.primes[k])}};
    p["witness"] = k < r.witnesses.size() ? opt_monomial_to_json(r.witnesses[k]) : json(nullptr);
    primes.push_back(p);
  }
  return {{"instance", instance_to_json(r.instance)}, {"k", r.k}, {"associated_primes", primes}};
}

json to_json(const PersistenceReport& r) {
  json chain = json::array();
  for (const auto& level : r.result.ass) {
    json primes = json::array();
    for (const auto& p : level) primes.push_back(index_set_to_json(p));
    chain.push_back(primes);
  }
  return {{"instance", instance_to_json(r.instance)},
          {"kmax", r.kmax},
          {"ok", r.result.ok},
          {"violating_k", r.result.violating_k},
          {"ass", chain}};
}

json to_json(const DecomposeReport& r) {
  json comps = json::array();
  for (const auto& c : r.components)
    comps.push_back({{"generators", monomials_to_json(c.generators())}, {"radical", index_set_to_json(c.radical())}});
  return {{"n", r.n}, {"generators", monomials_to_json(r.generators)}, {"components", comps}};
}

json to_json(const ReproduceReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"checks", checks}, {"all_passed", r.all_passed()}};
}

// ------------------------------------------------------------ from_json

template <>
GeneratorsReport from_json<GeneratorsReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  return {inst, monomials_from_json(j.at("generators"), n_of(inst))};
}

template <>
DualReport from_json<DualReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  return {inst, j.at("support_covers_ambient").get<bool>(), duals_from_json(j.at("generators"), n_of(inst))};
}

template <>
FacetsReport from_json<FacetsReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  std::vector<Facet> facets;
  for (const auto& f : j.at("facets"))
    facets.push_back({facet_form_from_string(f.at("form").get<std::string>()), f.at("starts").get<std::vector<int>>(),
                      f.at("s").get<int>(), index_set_from_json(f.at("members"))});
  return {inst, std::move(facets)};
}

template <>
ScmReport from_json<ScmReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  return {inst, duals_from_json(j.at("order"), n_of(inst)), lq_from_json(j.at("linear_quotients"), n_of(inst))};
}

template <>
SortReport from_json<SortReport>(const json& j) {
  SortReport r;
  r.n = j.at("n").get<std::size_t>();
  r.input = monomials_from_json(j.at("input"), r.n);
  r.sorted = monomials_from_json(j.at("sorted"), r.n);
  r.input_sorted = j.at("input_sorted").get<bool>();
  return r;
}

template <>
ReesGbReport from_json<ReesGbReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  ReesPresentation pres(inst);
  std::vector<ToricBinomial> bs;
  for (const auto& b : j.at("binomials")) bs.push_back(binomial_from_json(b, pres));
  const auto& red = j.at("reducedness");
  ReesGbReport r{inst,
                 std::move(bs),
                 j.at("kernel_ok").get<bool>(),
                 j.at("x_condition").get<bool>(),
                 {red.at("initials_squarefree").get<bool>(), red.at("initials_antichain").get<bool>(),
                  red.at("tails_standard").get<bool>()},
                 std::nullopt};
  if (!j.at("buchberger").is_null()) r.buchberger = j.at("buchberger").get<std::string>();
  return r;
}

template <>
ExchangeReport from_json<ExchangeReport>(const json& j) {
  ExchangeResult res;
  res.ok = j.at("ok").get<bool>();
  res.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  res.q = j.at("q").get<int>();
  res.lower = j.at("lower").get<std::vector<int>>();
  res.upper = j.at("upper").get<std::vector<int>>();
  return {instance_from_json(j.at("instance")), j.at("N").get<std::size_t>(), res};
}

template <>
LexWitnessCliReport from_json<LexWitnessCliReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  ReesPresentation pres(inst);
  LexWitnessReport w;
  w.quadratic_binomials = j.at("quadratic_binomials").get<std::size_t>();
  w.quadratic_initials = j.at("quadratic_initials").get<std::size_t>();
  for (const auto& d : j.at("dividing_initials")) w.dividing_initials.push_back(pres.parse(d.get<std::string>()));
  LexWitnessCliReport r{inst, monomials_from_json(j.at("cubic"), n_of(inst)), monomials_from_json(j.at("partner"), n_of(inst)),
                        std::nullopt, std::nullopt, j.at("cubic_sorted").get<bool>(), std::move(w)};
  if (!j.at("binomial_in_kernel").is_null()) r.binomial_in_kernel = j.at("binomial_in_kernel").get<bool>();
  if (!j.at("cubic_is_lex_initial").is_null()) r.cubic_is_lex_initial = j.at("cubic_is_lex_initial").get<bool>();
  return r;
}

template <>
FiberDimReport from_json<FiberDimReport>(const json& j) {
  return {instance_from_json(j.at("instance")), j.at("dimension").get<int>()};
}

template <>
DepthReport from_json<DepthReport>(const json& j) {
  DepthReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.projdim = j.at("projdim").get<int>();
  r.depth = j.at("depth").get<int>();
  r.witness = opt_monomial_from_json(j.at("witness"), static_cast<std::size_t>(r.n));
  return r;
}

template <>
LimdepthReport from_json<LimdepthReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  const std::size_t n = n_of(inst);
  LimdepthWitness w;
  w.chain = monomials_from_json(j.at("chain"), n);
  w.w = monomial_from_json(j.at("w"), n);
  for (const auto& s : j.at("steps")) {
    WitnessStep step;
    step.j = s.at("j").get<int>();
    step.s = s.at("s").get<int>();
    step.replaced = monomial_from_json(s.at("replaced"), n);
    step.replacement = monomial_from_json(s.at("replacement"), n);
    step.w_prime = monomial_from_json(s.at("w_prime"), n);
    step.replacement_is_generator = s.at("replacement_is_generator").get<bool>();
    step.lex_greater = s.at("lex_greater").get<bool>();
    step.identity_holds = s.at("identity_holds").get<bool>();
    w.steps.push_back(std::move(step));
  }
  w.colon_variables = index_set_from_json(j.at("colon_variables"));
  return {inst, j.at("k").get<int>(), std::move(w)};
}

template <>
AssReport from_json<AssReport>(const json& j) {
  auto inst = instance_from_json(j.at("instance"));
  AssReport r{inst, j.at("k").get<int>(), {}, {}};
  for (const auto& p : j.at("associated_primes")) {
    r.primes.push_back(index_set_from_json(p.at("prime")));
    r.witnesses.push_back(opt_monomial_from_json(p.at("witness"), n_of(inst)));
  }
  return r;
}

template <>
PersistenceReport from_json<PersistenceReport>(const json& j) {
  PersistenceResult res;
  res.ok = j.at("ok").get<bool>();
  res.violating_k = j.at("violating_k").get<int>();
  for (const auto& level : j.at("ass")) {
    std::vector<IndexSet> primes;
    for (const auto& p : level) primes.push_back(index_set_from_json(p));
    res.ass.push_back(std::move(primes));
  }
  return {instance_from_json(j.at("instance")), j.at("kmax").get<int>(), std::move(res)};
}

template <>
DecomposeReport from_json<DecomposeReport>(const json& j) {
  DecomposeReport r;
  r.n = j.at("n").get<std::size_t>();
  r.generators = monomials_from_json(j.at("generators"), r.n);
  for (const auto& c : j.at("components")) {
    Monomial powers(r.n);
    for (const auto& g : monomials_from_json(c.at("generators"), r.n)) powers = product(powers, g);
    r.components.emplace_back(std::move(powers));
  }
  return r;
}

template <>
ReproduceReport from_json<ReproduceReport>(const json& j) {
  ReproduceReport r;
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  return r;
}

}  // namespace tspread
