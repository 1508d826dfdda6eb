#pragma once

// JSON and CSV forms of polynomials, ideals, submodules and points.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quotlab/errors.hpp"
#include "quotlab/field.hpp"
#include "quotlab/groebner.hpp"
#include "quotlab/local_modules.hpp"
#include "quotlab/polynomial.hpp"
#include "quotlab/quot_geometry.hpp"

namespace quotlab {

using nlohmann::json;

inline std::uint32_t prime_of_descriptor(const std::string& d, const std::string& prefix) {
  if (d.rfind(prefix, 0) != 0) throw ParseError("field descriptor '" + d + "' does not start with " + prefix);
  const std::string digits = d.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9)
    throw ParseError("bad prime in field descriptor '" + d + "'");
  return static_cast<std::uint32_t>(std::stoul(digits));
}

template <class D>
D domain_from_descriptor(const std::string& d);

template <>
inline Rationals domain_from_descriptor<Rationals>(const std::string& d) {
  if (d != "q") throw ParseError("expected field descriptor 'q', got '" + d + "'");
  return Rationals{};
}

template <>
inline PrimeField domain_from_descriptor<PrimeField>(const std::string& d) {
  return PrimeField(prime_of_descriptor(d, "fp:"));
}

template <>
inline DualFp domain_from_descriptor<DualFp>(const std::string& d) {
  return DualFp(PrimeField(prime_of_descriptor(d, "dual:fp:")));
}

/// Call f with the coefficient field named by "q" or "fp:P".
template <class F>
decltype(auto) with_field(const std::string& descriptor, F&& f) {
  if (descriptor == "q") return f(Rationals{});
  return f(domain_from_descriptor<PrimeField>(descriptor));
}

template <class D>
json to_json(const Polynomial<D>& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i) exps.push_back(t.mono[i]);
    terms.push_back(json::array({p.dom().to_string(t.coeff), exps}));
  }
  return {{"vars", p.ring()->names()}, {"field", p.dom().descriptor()}, {"terms", terms}};
}

template <class D>
Polynomial<D> polynomial_from_json(const json& j, const RingPtr<D>& ring) {
  if (j.at("vars").get<std::vector<std::string>>() != ring->names())
    throw ParseError("polynomial variables do not match the ring");
  if (j.at("field").get<std::string>() != ring->domain().descriptor()) throw ParseError("polynomial field mismatch");
  std::vector<typename Polynomial<D>::Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at(1);
    if (exps.size() != ring->nvars()) throw ParseError("exponent vector has wrong length");
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, exps.at(i).get<unsigned>());
    terms.push_back({m, ring->domain().parse(t.at(0).get<std::string>())});
  }
  return Polynomial<D>::from_terms(ring, std::move(terms));
}

template <class D>
Polynomial<D> polynomial_from_json(const json& j) {
  auto ring = PolyRing<D>::make(j.at("vars").get<std::vector<std::string>>(),
                                domain_from_descriptor<D>(j.at("field").get<std::string>()));
  return polynomial_from_json(j, ring);
}

template <class D>
json ring_json(const RingPtr<D>& ring) {
  return {{"vars", ring->names()}, {"field", ring->domain().descriptor()}, {"order", ring->order().name()}};
}

template <class D>
json to_json(const Ideal<D>& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  json out{{"ring", ring_json(ideal.ring())}, {"generators", gens}, {"groebner", nullptr}};
  if (const auto& gb = ideal.cached_basis()) {
    json basis = json::array();
    for (const auto& g : gb->elements) basis.push_back(to_json(g));
    out["groebner"] = {{"order", gb->order().name()}, {"basis", basis}};
  }
  return out;
}

template <class D>
Ideal<D> ideal_from_json(const json& j) {
  const auto& r = j.at("ring");
  auto ring = PolyRing<D>::make(r.at("vars").get<std::vector<std::string>>(),
                                domain_from_descriptor<D>(r.at("field").get<std::string>()),
                                MonomialOrder::parse(r.value("order", std::string("grevlex"))));
  std::vector<Polynomial<D>> gens;
  for (const auto& g : j.at("generators")) gens.push_back(polynomial_from_json(g, ring));
  Ideal<D> ideal(ring, gens);
  if (j.contains("groebner") && !j.at("groebner").is_null()) {
    auto bring = ring->with_order(MonomialOrder::parse(j.at("groebner").at("order").get<std::string>()));
    std::vector<Polynomial<D>> basis;
    for (const auto& g : j.at("groebner").at("basis")) basis.push_back(polynomial_from_json(g, bring));
    ideal = ideal.with_basis(GroebnerBasis<D>{bring, std::move(basis)});
  }
  return ideal;
}

/// Ideal JSON of the closure plus the chart dimension and ambient count.
template <class D>
json to_json(const QuotIdeal<D>& qi) {
  json out = to_json(qi.closure);
  out["n"] = qi.n;
  out["r"] = qi.r;
  out["dim"] = qi.chart_dim;
  out["ambient"] = qi.ambient;
  return out;
}

template <class D>
json to_json(const ChartMatrix<D>& cm) {
  json rows = json::array();
  for (const auto& row : cm.entries) {
    json jr = json::array();
    for (const auto& e : row) jr.push_back(to_json(e));
    rows.push_back(jr);
  }
  return {{"n", cm.n}, {"r", cm.r}, {"entries", rows}};
}

inline json to_json(const Partition& p) { return p.parts(); }

inline json to_json(const Submodule& a, int n) {
  return {{"n", n},
          {"r", a.rank()},
          {"q", a.q()},
          {"level", a.level()},
          {"basis", a.basis()},
          {"type", to_json(quotient_type(a))}};
}

inline json to_json(const Submodule& a) { return to_json(a, a.colength()); }

inline Submodule submodule_from_json(const json& j) {
  ModuleShape s{j.at("level").get<int>(), j.at("r").get<int>(), j.at("q").get<std::uint32_t>()};
  if (!PrimeField::is_prime(s.q)) throw ParseError("submodule q is not prime");
  FpRows rows = j.at("basis").get<FpRows>();
  for (const auto& row : rows)
    for (auto x : row)
      if (x >= s.q) throw ParseError("submodule entry out of range");
  Submodule a(s, rows);
  if (!is_t_invariant(a)) throw ParseError("submodule basis is not t-invariant");
  return a;
}

inline json to_json(const PluckerPoint& pt) {
  json coords = json::object();
  const auto subsets = column_subsets(pt.n * pt.r, pt.n);
  for (std::size_t i = 0; i < subsets.size(); ++i) coords[plucker_name(subsets[i], pt.n * pt.r)] = pt.coords[i];
  return {{"n", pt.n}, {"r", pt.r}, {"q", pt.q}, {"point", pt.to_string()}, {"coords", coords}};
}

/// "partition,count" rows, partitions in descending order.
inline std::string strata_csv(const std::vector<Submodule>& points) {
  std::map<Partition, int, std::greater<>> strata;
  for (const auto& a : points) ++strata[quotient_type(a)];
  std::ostringstream os;
  os << "partition,count\n";
  for (const auto& [lam, c] : strata) os << '"' << lam.to_string() << "\"," << c << "\n";
  return os.str();
}

}  // namespace quotlab
