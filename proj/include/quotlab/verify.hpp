#pragma once

// Verification checks with auditable reports.
//
// Each check returns a CheckReport whose evidence holds everything needed to
// recompute the pass flag; recompute_pass() does that from evidence and
// params alone.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "quotlab/errors.hpp"
#include "quotlab/field.hpp"
#include "quotlab/groebner.hpp"
#include "quotlab/io.hpp"
#include "quotlab/local_modules.hpp"
#include "quotlab/parse.hpp"
#include "quotlab/quot_geometry.hpp"
#include "quotlab/symbolic_matrix.hpp"

namespace quotlab {

struct CheckReport {
  std::string check;
  json params;
  bool pass = false;
  json evidence;
  long runtime_ms = 0;
};

inline json to_json(const CheckReport& r) {
  return {{"check", r.check}, {"params", r.params}, {"pass", r.pass}, {"evidence", r.evidence}, {"runtime_ms", r.runtime_ms}};
}

inline CheckReport report_from_json(const json& j) {
  return {j.at("check").get<std::string>(), j.at("params"), j.at("pass").get<bool>(), j.at("evidence"),
          j.at("runtime_ms").get<long>()};
}

struct VerifyOptions {
  double timeout_seconds = 300;

  BuchbergerOptions engine() const {
    BuchbergerOptions o;
    o.deadline = Clock::now() + std::chrono::milliseconds(static_cast<long>(timeout_seconds * 1000));
    return o;
  }
};

namespace detail {

template <class F>
CheckReport timed(std::string id, json params, F&& body) {
  auto t0 = Clock::now();
  CheckReport r{std::move(id), std::move(params), false, json::object(), 0};
  body(r);
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

inline std::string power_string(const std::string& var, int e) {
  return e == 1 ? var : var + "^" + std::to_string(e);
}

/// floor(log_q N); -1 for N = 0.
inline int floor_log(long count, std::uint32_t q) {
  if (count <= 0) return -1;
  int k = 0;
  long pw = q;
  while (pw <= count) {
    pw *= q;
    ++k;
  }
  return k;
}

/// Image ideals are reused across checks within one process.
template <class D>
const QuotIdeal<D>& cached_image_ideal(int n, int r, const D& dom, const VerifyOptions& vo) {
  static std::map<std::tuple<int, int, std::string>, QuotIdeal<D>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, r, dom.descriptor());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, image_ideal<D>(n, r, dom, vo.engine())).first;
  return it->second;
}

/// Singular ideal of F_n and the projective dimension of its zero set.
template <class D>
struct SingularData {
  Ideal<D> ideal;
  int codim;
  int projective_dim;
};

template <class D>
const SingularData<D>& cached_singular(int n, int r, const D& dom, const VerifyOptions& vo) {
  static std::map<std::tuple<int, int, std::string>, SingularData<D>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(std::make_tuple(n, r, dom.descriptor()));
    if (it != cache.end()) return it->second;
  }
  const auto& qi = cached_image_ideal<D>(n, r, dom, vo);
  const int codim = static_cast<int>(qi.ambient) - 1 - qi.chart_dim;
  Ideal<D> sing = singular_ideal(qi.closure, codim, vo.engine());
  auto gb = buchberger(sing, MonomialOrder::grevlex(), vo.engine());
  const int affine = krull_dim(gb);
  SingularData<D> sd{sing.with_basis(gb), codim, affine <= 0 ? -1 : affine - 1};
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_tuple(n, r, dom.descriptor()), std::move(sd)).first->second;
}

inline std::vector<std::string> point_strings(const std::vector<std::vector<std::uint32_t>>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(PluckerPoint{0, 0, 0, p}.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string pair_string(const Submodule& lower, const Submodule& upper) {
  return lower.to_string() + "<" + upper.to_string();
}

}  // namespace detail

inline CheckReport check_divisor_relation(int n, int r) {
  if (n < 1 || n > 6) throw GuardError("divisor: need 1 <= n <= 6");
  if (r < 2 || r > 8) throw GuardError("divisor: need 2 <= r <= 8");
  return detail::timed("divisor", {{"n", n}, {"r", r}}, [&](CheckReport& rep) {
    auto [d1, d2] = divisor_witness<Rationals>(n, r);
    rep.evidence = {{"detA1", d1.to_string()},
                    {"detA2", d2.to_string()},
                    {"expected_detA1", "1"},
                    {"expected_detA2", detail::power_string(chart_var(2, 0), n)}};
    rep.pass = d1.to_string() == "1" && d2.to_string() == detail::power_string(chart_var(2, 0), n);
  });
}

template <Field D>
CheckReport check_dimension(int n, int r, const D& dom, const VerifyOptions& vo = {}) {
  check_image_guard(n, r, ImageGuard{});
  return detail::timed("dim", {{"n", n}, {"r", r}, {"field", dom.descriptor()}}, [&](CheckReport& rep) {
    const auto& qi = detail::cached_image_ideal<D>(n, r, dom, vo);
    const bool sound = elimination_sound(qi), round_trip = closure_round_trip(qi);
    rep.evidence = {{"dim", qi.chart_dim},
                    {"expected", n * (r - 1)},
                    {"ambient", qi.ambient},
                    {"chart_generators", qi.chart.generators().size()},
                    {"closure_generators", qi.closure.generators().size()},
                    {"elimination_sound", sound},
                    {"closure_round_trip", round_trip}};
    rep.pass = qi.chart_dim == n * (r - 1) && sound && round_trip;
  });
}

template <Field D>
CheckReport check_quadric_22(const D& dom, const VerifyOptions& vo = {}) {
  const std::string desc = dom.descriptor();
  if (desc == "fp:2") throw GuardError("quadric: characteristic 2 is not supported for quadric rank");
  return detail::timed("quadric", {{"n", 2}, {"r", 2}, {"field", desc}}, [&](CheckReport& rep) {
    const auto& qi = detail::cached_image_ideal<D>(2, 2, dom, vo);
    auto gb = buchberger(qi.closure, MonomialOrder::grevlex(), vo.engine());
    int linear = 0, quadric = 0, other = 0, rank = -1;
    json gens = json::array();
    for (const auto& g : gb.elements) {
      gens.push_back(g.to_string());
      if (g.total_degree() == 1) ++linear;
      else if (g.total_degree() == 2) {
        ++quadric;
        rank = quadric_rank(g);
      } else ++other;
    }
    // singular locus: the vertex lies on it and every 2x2 minor [x | P] is in its radical
    const auto& sd = detail::cached_singular<D>(2, 2, dom, vo);
    auto vertex = plucker_of_submodule(power_of_maximal_ideal({2, 2, 3}, 1));
    const auto& ring = sd.ideal.ring();
    std::vector<typename D::value_type> pt;
    for (auto c : vertex.coords) pt.push_back(dom.from_int(static_cast<long>(c)));
    bool on_locus = true;
    for (const auto& g : sd.ideal.generators())
      if (!dom.is_zero(evaluate(g, std::span<const typename D::value_type>(pt)))) on_locus = false;
    bool collinear = true;
    for (std::size_t i = 0; i < pt.size() && collinear; ++i)
      for (std::size_t j = i + 1; j < pt.size() && collinear; ++j) {
        auto m = Polynomial<D>::variable(ring, i).scaled(pt[j]) - Polynomial<D>::variable(ring, j).scaled(pt[i]);
        if (!m.is_zero() && !radical_member(m, sd.ideal, vo.engine())) collinear = false;
      }
    const int d = 2, big_n = 3, r = 2;
    rep.evidence = {{"generators", gens},
                    {"linear", linear},
                    {"quadric", quadric},
                    {"other", other},
                    {"quadric_rank", rank},
                    {"singular_point", vertex.to_string()},
                    {"vertex_on_singular_locus", on_locus},
                    {"locus_collinear_with_vertex", collinear},
                    {"adjunction", {{"d", d}, {"N", big_n}, {"K", d - big_n - 1}, {"r", r}}}};
    rep.pass = linear == 2 && quadric == 1 && other == 0 && rank == 3 && on_locus && collinear && d - big_n - 1 == -r;
  });
}

template <Field D>
CheckReport check_singular_jacobian(int n, int r, const D& dom, const VerifyOptions& vo = {}) {
  check_image_guard(n, r, ImageGuard{});
  if (binomial(n * r, n) > 20) throw GuardError("singular: jacobian mode needs at most 20 Pluecker coordinates");
  return detail::timed("singular", {{"n", n}, {"r", r}, {"mode", "jacobian"}, {"field", dom.descriptor()}},
                       [&](CheckReport& rep) {
                         const auto& sd = detail::cached_singular<D>(n, r, dom, vo);
                         // F_1 is a projective space; from n = 2 on the locus has codimension two
                         const int expected = n == 1 ? -1 : n * (r - 1) - 2;
                         rep.evidence = {{"ambient", binomial(n * r, n)},
                                         {"codim", sd.codim},
                                         {"singular_generators", sd.ideal.generators().size()},
                                         {"dim", sd.projective_dim},
                                         {"expected", expected}};
                         rep.pass = sd.projective_dim == expected;
                       });
}

inline CheckReport check_singular_points(int n, int r, std::uint32_t q, const VerifyOptions& vo = {}) {
  return detail::timed(
      "singular", {{"n", n}, {"r", r}, {"mode", "point-count"}, {"q", q}}, [&](CheckReport& rep) {
        auto pts = quot_points(n, r, q);
        std::vector<std::vector<std::uint32_t>> noncyclic;
        long cyclic = 0;
        for (const auto& a : pts) {
          if (quotient_type(a).length() >= 2) noncyclic.push_back(plucker_of_submodule(a).coords);
          else ++cyclic;
        }
        const int expected = n == 1 ? -1 : n * (r - 1) - 2;
        const int flog = detail::floor_log(static_cast<long>(noncyclic.size()), q);
        rep.evidence = {{"points", pts.size()},
                        {"cyclic", cyclic},
                        {"noncyclic", noncyclic.size()},
                        {"floor_log", flog},
                        {"expected", expected},
                        {"grade", "evidence: floor(log_q(#non-cyclic points))"},
                        {"noncyclic_points", detail::point_strings(noncyclic)}};
        bool agree = true;
        if (binomial(n * r, n) <= 20) {
          auto sing = projective_points(detail::cached_singular<PrimeField>(n, r, PrimeField(q), vo).ideal, 22,
                                        vo.engine());
          rep.evidence["jacobian_points"] = detail::point_strings(sing);
          agree = rep.evidence["jacobian_points"] == rep.evidence["noncyclic_points"];
        }
        rep.pass = flog == expected && agree;
      });
}

inline CheckReport check_fibers(int n, int r, std::uint32_t q) {
  return detail::timed("fibers", {{"n", n}, {"r", r}, {"q", q}}, [&](CheckReport& rep) {
    auto pairs = incidence_pairs(n, r, q);
    auto fc = fiber_counts(pairs);
    std::map<int, int> lower_hist;
    for (const auto& [a, k] : fc.over_lower) ++lower_hist[k];
    std::map<Partition, std::map<int, int>> by_type;
    for (const auto& [b, k] : fc.over_upper) ++by_type[quotient_type(b)][k];
    json lower = json::object(), upper = json::array();
    for (auto [k, c] : lower_hist) lower[std::to_string(k)] = c;
    bool ok = true;
    for (const auto& [lam, hist] : by_type) {
      json h = json::object();
      for (auto [k, c] : hist) {
        h[std::to_string(k)] = c;
        if (k != projective_count(q, socle_parts(lam))) ok = false;
      }
      upper.push_back({{"type", lam.parts()}, {"socle", socle_parts(lam)}, {"fiber_sizes", h}});
    }
    for (auto [k, c] : lower_hist)
      if (k != projective_count(q, r)) ok = false;
    const auto lower_points = quot_points(n, r, q).size(), upper_points = quot_points(n + 1, r, q).size();
    rep.evidence = {{"pairs", pairs.size()},
                    {"lower_points", lower_points},
                    {"upper_points", upper_points},
                    {"lower_fibers", fc.over_lower.size()},
                    {"upper_fibers", fc.over_upper.size()},
                    {"pr_n_fiber_sizes", lower},
                    {"pr_n1_fiber_sizes_by_type", upper}};
    rep.pass = ok && fc.over_lower.size() == lower_points && fc.over_upper.size() == upper_points;
  });
}

inline CheckReport check_nonreduced(std::uint32_t p) {
  if (!PrimeField::is_prime(p)) throw AlgebraError("nonreduced: p must be prime");
  return detail::timed("nonreduced", {{"p", p}}, [&](CheckReport& rep) {
    DualFp R{PrimeField(p)};
    auto ring = PolyRing<DualFp>::make({"t"}, R);
    using P = Polynomial<DualFp>;
    // kernel of (f, g) -> (f(eps), g(eps)) is generated by (t - eps) e_1, (t - eps) e_2
    auto gen = parse_polynomial(ring, "t - eps");
    PolyMatrix<DualFp> kernel{{gen, P(ring)}, {P(ring), gen}};
    bool vanish = true;
    for (const auto& row : kernel)
      for (const auto& e : row) {
        auto at_eps = substitute(e, {{"t", P::constant(ring, R.eps())}});
        if (!at_eps.is_zero()) vanish = false;
      }
    // t - eps is monic of degree 1, so R[t]^2 / kernel is free of rank 2 over R
    const int quotient_rank = gen.total_degree() + gen.total_degree();
    auto det = symbolic_det(kernel);
    auto coeff = [&](unsigned e) { return R.to_string(det.coefficient(Monomial{e})); };
    rep.evidence = {{"kernel_vanishes_at_eps", vanish},
                    {"quotient_rank", quotient_rank},
                    {"det", det.to_string()},
                    {"coeff_t0", coeff(0)},
                    {"coeff_t1", coeff(1)},
                    {"coeff_t2", coeff(2)},
                    {"matches_t2_minus_2eps_t", det == parse_polynomial(ring, "t^2 - 2*eps*t")}};
    const bool in_t_squared = coeff(0) == "0+0*eps" && coeff(1) == "0+0*eps";
    rep.pass = vanish && quotient_rank == 2 && det == parse_polynomial(ring, "t^2 - 2*eps*t") &&
               (p == 2) == in_t_squared;
  });
}

inline CheckReport check_embedding(int n, std::uint32_t q, const VerifyOptions& vo = {}) {
  if (n < 1) throw GuardError("embedding: need n >= 1");
  return detail::timed("embedding", {{"n", n}, {"r", 2}, {"q", q}}, [&](CheckReport& rep) {
    auto domain = quot_points(n - 1, 2, q);
    std::set<Submodule> images;
    bool colength_ok = true, noncyclic_ok = true;
    std::vector<std::vector<std::uint32_t>> image_points;
    for (const auto& a : domain) {
      auto b = m_embed(a);
      if (b.colength() != n + 1) colength_ok = false;
      if (quotient_type(b).length() < 2) noncyclic_ok = false;
      images.insert(b);
      image_points.push_back(plucker_of_submodule(b).coords);
    }
    rep.evidence = {{"domain_points", domain.size()},
                    {"distinct_images", images.size()},
                    {"colength_ok", colength_ok},
                    {"noncyclic_ok", noncyclic_ok},
                    {"images", detail::point_strings(image_points)},
                    {"on_variety_checked", false}};
    bool on_variety = true;
    const ImageGuard guard;
    if (std::find(guard.allowed.begin(), guard.allowed.end(), std::make_pair(n + 1, 2)) != guard.allowed.end()) {
      const auto& qi = detail::cached_image_ideal<PrimeField>(n + 1, 2, PrimeField(q), vo);
      for (const auto& pt : image_points)
        for (const auto& g : qi.closure.generators())
          if (evaluate(g, std::span<const std::uint32_t>(pt)) != 0) on_variety = false;
      rep.evidence["on_variety_checked"] = true;
      rep.evidence["on_variety"] = on_variety;
    }
    rep.pass = images.size() == domain.size() && colength_ok && noncyclic_ok && on_variety;
  });
}

inline CheckReport check_exceptional(int n, std::uint32_t q) {
  if (n < 1) throw GuardError("exceptional: need n >= 1");
  return detail::timed("exceptional", {{"n", n}, {"r", 2}, {"q", q}}, [&](CheckReport& rep) {
    auto pairs = incidence_pairs(n, 2, q);
    auto fc = fiber_counts(pairs);
    std::set<std::string> positive, embedded;
    for (const auto& pr : pairs)
      if (fc.over_upper.at(pr.upper) > 1) positive.insert(detail::pair_string(pr.lower, pr.upper));
    for (const auto& pr : incidence_pairs(n - 1, 2, q))
      embedded.insert(detail::pair_string(pr.upper, m_embed(pr.lower)));
    rep.evidence = {{"positive_fiber_pairs", std::vector<std::string>(positive.begin(), positive.end())},
                    {"embedded_pairs", std::vector<std::string>(embedded.begin(), embedded.end())},
                    {"positive_count", positive.size()},
                    {"embedded_count", embedded.size()}};
    rep.pass = !positive.empty() && positive == embedded;
  });
}

/// Projective F_q-points of the closure ideal against Pluecker images of points.
inline CheckReport check_oracle(int n, int r, std::uint32_t q, const VerifyOptions& vo = {}) {
  check_image_guard(n, r, ImageGuard{});
  if (binomial(n * r, n) > 20) throw GuardError("oracle: converse scan needs at most 20 Pluecker coordinates");
  return detail::timed("oracle", {{"n", n}, {"r", r}, {"q", q}}, [&](CheckReport& rep) {
    const auto& qi = detail::cached_image_ideal<PrimeField>(n, r, PrimeField(q), vo);
    auto zeros = projective_points(qi.closure, 22, vo.engine());
    std::vector<std::vector<std::uint32_t>> images;
    for (const auto& a : quot_points(n, r, q)) images.push_back(plucker_of_submodule(a).coords);
    auto zs = detail::point_strings(zeros), is = detail::point_strings(images);
    const bool injective = std::set<std::string>(is.begin(), is.end()).size() == is.size();
    rep.evidence = {{"zero_set", zs}, {"images", is}, {"zero_count", zs.size()}, {"image_count", is.size()},
                    {"injective", injective}};
    rep.pass = injective && zs == is;
  });
}

/// Re-derive the pass flag from params and evidence only.
inline bool recompute_pass(const CheckReport& rep) {
  const json& e = rep.evidence;
  const json& p = rep.params;
  const std::string& id = rep.check;
  if (id == "divisor") {
    const int n = p.at("n");
    return e.at("detA1") == "1" && e.at("detA2") == detail::power_string(chart_var(2, 0), n);
  }
  if (id == "dim") {
    const int n = p.at("n"), r = p.at("r");
    return e.at("dim") == n * (r - 1) && e.at("elimination_sound") == true && e.at("closure_round_trip") == true;
  }
  if (id == "quadric") {
    const json& a = e.at("adjunction");
    return e.at("linear") == 2 && e.at("quadric") == 1 && e.at("other") == 0 && e.at("quadric_rank") == 3 &&
           e.at("vertex_on_singular_locus") == true && e.at("locus_collinear_with_vertex") == true &&
           a.at("d").get<int>() - a.at("N").get<int>() - 1 == a.at("K").get<int>() &&
           a.at("K").get<int>() == -a.at("r").get<int>();
  }
  if (id == "singular") {
    const int n = p.at("n"), r = p.at("r");
    const int expected = n == 1 ? -1 : n * (r - 1) - 2;
    if (p.at("mode") == "jacobian") return e.at("dim") == expected;
    const std::uint32_t q = p.at("q");
    const auto& pts = e.at("noncyclic_points");
    if (e.at("noncyclic") != pts.size()) return false;
    if (detail::floor_log(static_cast<long>(pts.size()), q) != expected) return false;
    return !e.contains("jacobian_points") || e.at("jacobian_points") == pts;
  }
  if (id == "fibers") {
    const int r = p.at("r");
    const std::uint32_t q = p.at("q");
    for (const auto& [k, c] : e.at("pr_n_fiber_sizes").items())
      if (std::stol(k) != projective_count(q, r)) return false;
    for (const auto& t : e.at("pr_n1_fiber_sizes_by_type")) {
      const int l = static_cast<int>(t.at("type").size());
      for (const auto& [k, c] : t.at("fiber_sizes").items())
        if (std::stol(k) != projective_count(q, l)) return false;
    }
    return e.at("lower_fibers") == e.at("lower_points") && e.at("upper_fibers") == e.at("upper_points");
  }
  if (id == "nonreduced") {
    const std::uint32_t prime = p.at("p");
    const bool in_t_squared = e.at("coeff_t0") == "0+0*eps" && e.at("coeff_t1") == "0+0*eps";
    return e.at("kernel_vanishes_at_eps") == true && e.at("quotient_rank") == 2 &&
           e.at("matches_t2_minus_2eps_t") == true && (prime == 2) == in_t_squared;
  }
  if (id == "embedding") {
    const auto& imgs = e.at("images");
    const bool distinct = std::set<std::string>(imgs.begin(), imgs.end()).size() == imgs.size();
    return distinct && imgs.size() == e.at("domain_points") && e.at("distinct_images") == e.at("domain_points") &&
           e.at("colength_ok") == true && e.at("noncyclic_ok") == true &&
           (e.at("on_variety_checked") == false || e.at("on_variety") == true);
  }
  if (id == "exceptional") return !e.at("positive_fiber_pairs").empty() && e.at("positive_fiber_pairs") == e.at("embedded_pairs");
  if (id == "oracle") {
    const auto& is = e.at("images");
    return std::set<std::string>(is.begin(), is.end()).size() == is.size() && e.at("zero_set") == is;
  }
  return false;
}

struct SuiteParams {
  std::vector<std::pair<int, int>> instances{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
  std::vector<std::uint32_t> qs{2, 3};
  std::vector<std::uint32_t> ps{2, 3, 5, 32003};
  std::vector<std::string> fields;  // empty: derived from ps (and "q" for the quadric)
  VerifyOptions options;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",      "divisor",    "dim",       "quadric",    "singular",
                                              "fibers",   "nonreduced", "embedding", "exceptional", "oracle"};
  return names;
}

namespace detail {

inline std::vector<std::string> field_list(const SuiteParams& sp) {
  if (!sp.fields.empty()) return sp.fields;
  std::vector<std::string> out;
  for (auto p : sp.ps) out.push_back("fp:" + std::to_string(p));
  return out;
}

inline bool sort_key_less(const CheckReport& a, const CheckReport& b) {
  if (a.check != b.check) return a.check < b.check;
  return a.params.dump() < b.params.dump();
}

}  // namespace detail

/// Run one suite.  Guard and timeout failures propagate as exceptions.
inline std::vector<CheckReport> run_suite(const std::string& suite, const SuiteParams& sp) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw GuardError("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  const auto& vo = sp.options;
  std::vector<CheckReport> out;
  auto want = [&](const char* s) { return all || suite == s; };

  if (want("divisor"))
    for (auto [n, r] : sp.instances) out.push_back(check_divisor_relation(n, r));
  if (want("dim"))
    for (auto [n, r] : sp.instances)
      for (const auto& f : detail::field_list(sp))
        out.push_back(with_field(f, [&](const auto& dom) { return check_dimension(n, r, dom, vo); }));
  if (want("quadric")) {
    std::vector<std::string> fs = detail::field_list(sp);
    if (sp.fields.empty()) fs.insert(fs.begin(), "q");
    const bool has22 = std::count(sp.instances.begin(), sp.instances.end(), std::make_pair(2, 2)) > 0;
    if (has22 || !all)
      for (const auto& f : fs) {
        if (f == "fp:2") {
          if (!all) throw GuardError("quadric: characteristic 2 is not supported for quadric rank");
          continue;
        }
        out.push_back(with_field(f, [&](const auto& dom) { return check_quadric_22(dom, vo); }));
      }
  }
  if (want("singular")) {
    for (auto [n, r] : sp.instances) {
      if (binomial(n * r, n) <= 20)
        for (const auto& f : detail::field_list(sp)) {
          if (all && f != detail::field_list(sp).back()) continue;  // one generic field in the full suite
          out.push_back(with_field(f, [&](const auto& dom) { return check_singular_jacobian(n, r, dom, vo); }));
        }
      for (auto q : sp.qs) out.push_back(check_singular_points(n, r, q, vo));
    }
  }
  if (want("fibers"))
    for (auto [n, r] : sp.instances)
      for (auto q : sp.qs) out.push_back(check_fibers(n, r, q));
  if (want("nonreduced"))
    for (auto p : sp.ps) out.push_back(check_nonreduced(p));
  if (want("embedding") || want("exceptional")) {
    for (auto [n, r] : sp.instances) {
      if (r != 2) {
        if (!all) throw GuardError("embedding/exceptional checks are defined for r = 2 only");
        continue;
      }
      for (auto q : sp.qs) {
        if (want("embedding")) out.push_back(check_embedding(n, q, vo));
        if (want("exceptional")) out.push_back(check_exceptional(n, q));
      }
    }
  }
  if (want("oracle"))
    for (auto [n, r] : sp.instances)
      if (binomial(n * r, n) <= 20)
        for (auto q : sp.qs) out.push_back(check_oracle(n, r, q, vo));
  std::sort(out.begin(), out.end(), detail::sort_key_less);
  return out;
}

inline json reports_json(const std::vector<CheckReport>& reps) {
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(to_json(r));
  return arr;
}

}  // namespace quotlab
