#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tspread/borel.hpp"
#include "tspread/dual.hpp"
#include "tspread/errors.hpp"
#include "tspread/oracle.hpp"
#include "tspread/powers.hpp"
#include "tspread/rees.hpp"
#include "tspread/reports.hpp"
#include "tspread/reproduce.hpp"
#include "tspread/sortnet.hpp"

namespace py = pybind11;
using namespace tspread;

namespace {

BorelInstance make(int n, int t, const std::vector<int>& u) { return BorelInstance(n, t, IndexSet(u)); }

std::vector<std::string> texts(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

std::vector<Monomial> parse_all(const std::vector<std::string>& ms, std::size_t n) {
  if (ms.empty()) throw InvalidInput("empty monomial list");
  if (n == 0)
    for (const auto& m : ms) n = std::max(n, infer_ambient(m));
  std::vector<Monomial> out;
  for (const auto& m : ms) out.push_back(parse_monomial(m, n));
  return out;
}

std::vector<Monomial> order_of(const BorelInstance& inst) {
  std::vector<Monomial> out;
  for (const auto& g : scm_order(dual_generators(inst), inst)) out.push_back(g.monomial);
  return out;
}

}  // namespace

PYBIND11_MODULE(_tspread, m) {
  m.doc() = "t-spread principal Borel ideals";

  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<ClaimViolation>(m, "ClaimViolation", PyExc_AssertionError);

  m.def("generators", [](int n, int t, const std::vector<int>& u) { return texts(generators(make(n, t, u))); },
        py::arg("n"), py::arg("t"), py::arg("u"), "G(B_t(u)) in decreasing lex order.");

  m.def("closure_oracle", [](int n, int t, const std::vector<int>& u) { return texts(closure_oracle(make(n, t, u))); },
        py::arg("n"), py::arg("t"), py::arg("u"));

  m.def(
      "dual",
      [](int n, int t, const std::vector<int>& u) {
        const auto inst = make(n, t, u);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& g : scm_order(dual_generators(inst), inst)) out.emplace_back(g.monomial.to_string(), to_string(g.form));
        return out;
      },
      py::arg("n"), py::arg("t"), py::arg("u"), "Alexander dual generators with form tags, in linear-quotients order.");

  m.def(
      "facets",
      [](int n, int t, const std::vector<int>& u) {
        std::vector<std::vector<int>> out;
        for (const auto& f : facets(make(n, t, u))) out.push_back(f.members.values());
        return out;
      },
      py::arg("n"), py::arg("t"), py::arg("u"));

  m.def(
      "scm_profile",
      [](int n, int t, const std::vector<int>& u) {
        auto run = linear_quotients_check(order_of(make(n, t, u)));
        if (!run.ok) throw ClaimViolation("dual has no linear quotients at " + std::to_string(run.failed_index));
        std::vector<std::size_t> r;
        for (const auto& p : run.profiles) r.push_back(p.r());
        return r;
      },
      py::arg("n"), py::arg("t"), py::arg("u"), "r_j for each dual generator; raises ClaimViolation on failure.");

  m.def(
      "sort",
      [](const std::vector<std::string>& ms, std::size_t n) { return texts(sort_tuple(parse_all(ms, n)).factors()); },
      py::arg("monomials"), py::arg("n") = 0);

  m.def(
      "rees_gb",
      [](int n, int t, const std::vector<int>& u) {
        ReesPresentation pres(make(n, t, u));
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& b : reduced_gb(pres)) out.emplace_back(pres.format(b.lhs), pres.format(b.rhs), to_string(b.family));
        return out;
      },
      py::arg("n"), py::arg("t"), py::arg("u"), "(initial, tail, family) for each binomial.");

  m.def(
      "buchberger_verify",
      [](int n, int t, const std::vector<int>& u) {
        ReesPresentation pres(make(n, t, u));
        return to_string(buchberger_verify(reduced_gb(pres)).status);
      },
      py::arg("n"), py::arg("t"), py::arg("u"));

  m.def(
      "ell_exchange",
      [](int n, int t, const std::vector<int>& u, std::size_t degree) {
        return ell_exchange_check(ReesPresentation(make(n, t, u)), degree).ok;
      },
      py::arg("n"), py::arg("t"), py::arg("u"), py::arg("degree") = 2);

  m.def("fiber_dimension", [](int n, int t, const std::vector<int>& u) { return fiber_dimension(make(n, t, u)); },
        py::arg("n"), py::arg("t"), py::arg("u"));

  m.def(
      "power_depth",
      [](int n, int t, const std::vector<int>& u, int k) {
        auto r = depth_report(make(n, t, u), k, Guards::from_env());
        return py::dict(py::arg("projdim") = r.projdim, py::arg("depth") = r.depth,
                        py::arg("witness") = r.witness ? py::object(py::str(r.witness->to_string())) : py::none());
      },
      py::arg("n"), py::arg("t"), py::arg("u"), py::arg("k"));

  m.def(
      "limdepth_witness",
      [](int n, int t, const std::vector<int>& u, int k) {
        auto w = limdepth_witness(make(n, t, u), k, Guards::from_env());
        return py::dict(py::arg("w") = w.w.to_string(), py::arg("colon_variables") = w.colon_variables.values(),
                        py::arg("verified") = w.verified());
      },
      py::arg("n"), py::arg("t"), py::arg("u"), py::arg("k"));

  m.def(
      "associated_primes",
      [](const std::vector<std::string>& gens, std::size_t n) {
        auto ms = parse_all(gens, n);
        std::vector<std::vector<int>> out;
        for (const auto& p : associated_primes(ms, ms.front().ambient(), Guards::from_env())) out.push_back(p.values());
        return out;
      },
      py::arg("gens"), py::arg("n") = 0);

  m.def(
      "decompose",
      [](const std::vector<std::string>& gens, std::size_t n) {
        auto ms = parse_all(gens, n);
        std::vector<std::vector<std::string>> out;
        for (const auto& c : oracle::irreducible_decomposition(ms, ms.front().ambient(), Guards::from_env()))
          out.push_back(texts(c.generators()));
        return out;
      },
      py::arg("gens"), py::arg("n") = 0, "Irredundant irreducible components, each as its list of generators.");

  m.def(
      "persistence",
      [](int n, int t, const std::vector<int>& u, int kmax) {
        return persistence_check(make(n, t, u), kmax, Guards::from_env()).ok;
      },
      py::arg("n"), py::arg("t"), py::arg("u"), py::arg("kmax") = 3);

  m.def(
      "reproduce_json",
      [](std::uint64_t seed) {
        ReproduceOptions opt;
        opt.seed = seed;
        opt.guards = Guards::from_env();
        return to_json(run_reproduction(opt)).dump();
      },
      py::arg("seed") = ReproduceOptions{}.seed);
}
