#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quotlab/io.hpp"
#include "quotlab/verify.hpp"

namespace {

using namespace quotlab;

struct Options {
  std::optional<int> n, r;
  std::optional<std::uint32_t> q, p;
  std::optional<std::string> field;
  std::string suite = "all";
  std::string out;
  std::string in;
  double timeout = 300;
  bool json_output = false;
  bool strata = false;
};

void emit(const std::string& text, const Options& o) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw GuardError(std::string("--") + name + " is required");
  return *v;
}

BuchbergerOptions engine(const Options& o) {
  VerifyOptions vo;
  vo.timeout_seconds = o.timeout;
  return vo.engine();
}

int cmd_charts(const Options& o) {
  const int n = require(o.n, "n"), r = require(o.r, "r");
  return with_field(o.field.value_or("q"), [&](const auto& dom) {
    using D = std::decay_t<decltype(dom)>;
    auto cm = chart_matrix<D>(n, r, dom);
    if (o.json_output || !o.out.empty()) {
      emit(to_json(cm).dump(2) + "\n", o);
    } else {
      std::string text;
      for (const auto& row : cm.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) text += (c ? "  " : "") + row[c].to_string();
        text += "\n";
      }
      emit(text, o);
    }
    return 0;
  });
}

int cmd_ideal(const Options& o) {
  const int n = require(o.n, "n"), r = require(o.r, "r");
  return with_field(o.field.value_or("fp:32003"), [&](const auto& dom) {
    using D = std::decay_t<decltype(dom)>;
    auto qi = image_ideal<D>(n, r, dom, engine(o));
    if (o.json_output || !o.out.empty()) {
      emit(to_json(qi).dump(2) + "\n", o);
    } else {
      std::string text = "# F_" + std::to_string(n) + " for r=" + std::to_string(r) + " over " + dom.descriptor() +
                         ": dim " + std::to_string(qi.chart_dim) + " in P^" + std::to_string(qi.ambient - 1) + "\n";
      for (const auto& g : qi.closure.cached_basis() ? qi.closure.cached_basis()->elements : qi.closure.generators())
        text += g.to_string() + "\n";
      emit(text, o);
    }
    return 0;
  });
}

int cmd_points(const Options& o) {
  const int n = require(o.n, "n"), r = require(o.r, "r");
  const std::uint32_t q = o.q.value_or(2);
  auto pts = quot_points(n, r, q);
  if (o.strata) {
    emit(strata_csv(pts), o);
    return 0;
  }
  if (o.json_output || !o.out.empty()) {
    json arr = json::array();
    for (const auto& a : pts) {
      json j = to_json(a, n);
      j["plucker"] = to_json(plucker_of_submodule(a))["point"];
      arr.push_back(j);
    }
    emit(arr.dump(2) + "\n", o);
  } else {
    std::string text;
    for (const auto& a : pts)
      text += quotient_type(a).to_string() + " " + plucker_of_submodule(a).to_string() + "\n";
    emit(text, o);
  }
  return 0;
}

int cmd_incidence(const Options& o) {
  const int n = require(o.n, "n"), r = require(o.r, "r");
  const std::uint32_t q = o.q.value_or(2);
  auto pairs = incidence_pairs(n, r, q);
  if (o.json_output || !o.out.empty()) {
    json arr = json::array();
    for (const auto& pr : pairs) arr.push_back({{"lower", to_json(pr.lower, n)}, {"upper", to_json(pr.upper, n + 1)}});
    emit(arr.dump(2) + "\n", o);
  } else {
    auto fc = fiber_counts(pairs);
    std::string text = std::to_string(pairs.size()) + " pairs\n";
    for (const auto& [b, k] : fc.over_upper)
      text += quotient_type(b).to_string() + " " + b.to_string() + " fiber " + std::to_string(k) + "\n";
    emit(text, o);
  }
  return 0;
}

std::string params_text(const json& p) {
  std::string s;
  for (const auto& [k, v] : p.items()) s += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  return s;
}

int cmd_verify(const Options& o) {
  SuiteParams sp;
  if (o.n && o.r) {
    sp.instances = {{*o.n, *o.r}};
  } else if (o.n || o.r) {
    std::vector<std::pair<int, int>> keep;
    for (auto nr : sp.instances)
      if ((!o.n || nr.first == *o.n) && (!o.r || nr.second == *o.r)) keep.push_back(nr);
    if (keep.empty()) keep.push_back({o.n.value_or(1), o.r.value_or(2)});
    sp.instances = keep;
  }
  if (o.q) sp.qs = {*o.q};
  if (o.p) sp.ps = {*o.p};
  if (o.field) sp.fields = {*o.field};
  sp.options.timeout_seconds = o.timeout;
  auto reps = run_suite(o.suite, sp);
  bool all_pass = true;
  for (const auto& r : reps) all_pass = all_pass && r.pass;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << reports_json(reps).dump(2) << "\n";
  }
  if (o.json_output) {
    std::cout << reports_json(reps).dump(2) << "\n";
  } else {
    for (const auto& r : reps)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << params_text(r.params) << " (" << r.runtime_ms << " ms)\n";
    std::cout << (all_pass ? "all checks passed" : "some checks failed") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_audit(const Options& o) {
  std::ifstream f(o.in);
  if (!f) throw std::runtime_error("cannot read " + o.in);
  json arr = json::parse(f);
  int mismatches = 0;
  bool all_pass = true;
  for (const auto& j : arr) {
    auto r = report_from_json(j);
    const bool again = recompute_pass(r);
    all_pass = all_pass && again;
    if (again != r.pass) {
      ++mismatches;
      std::cout << "MISMATCH " << r.check << params_text(r.params) << "\n";
    }
  }
  std::cout << arr.size() << " reports, " << mismatches << " mismatches\n";
  return mismatches == 0 && all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Punctual Quot schemes in Pluecker coordinates"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("--n", o.n, "length n");
    sub->add_option("--r", o.r, "rank r");
    if (with_q) sub->add_option("--q", o.q, "finite field size for point enumeration (2, 3 or 5)");
    sub->add_option("--out", o.out, "write output to FILE");
    sub->add_flag("--json", o.json_output, "JSON output");
    sub->add_option("--timeout", o.timeout, "per-computation timeout in seconds")->check(CLI::PositiveNumber);
  };
  auto* charts = app.add_subcommand("charts", "chart matrix of U_1");
  common(charts, false);
  charts->add_option("--field", o.field, "q or fp:P");
  auto* ideal = app.add_subcommand("ideal", "defining ideal of F_n");
  common(ideal, false);
  ideal->add_option("--field", o.field, "q or fp:P (default fp:32003)");
  auto* points = app.add_subcommand("points", "F_q-points of F_n");
  common(points, true);
  points->add_flag("--strata", o.strata, "print the partition strata as CSV");
  auto* incidence = app.add_subcommand("incidence", "F_q-points of F_{n,n+1}");
  common(incidence, true);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify, true);
  verify->add_option("--p", o.p, "prime for characteristic-dependent checks");
  verify->add_option("--field", o.field, "q or fp:P for ideal-based checks");
  verify->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(quotlab::suite_names()));
  auto* audit = app.add_subcommand("audit", "recompute pass flags of a JSON report");
  audit->add_option("report", o.in, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*charts) return cmd_charts(o);
    if (*ideal) return cmd_ideal(o);
    if (*points) return cmd_points(o);
    if (*incidence) return cmd_incidence(o);
    if (*verify) return cmd_verify(o);
    if (*audit) return cmd_audit(o);
  } catch (const quotlab::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
  } catch (const quotlab::TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
