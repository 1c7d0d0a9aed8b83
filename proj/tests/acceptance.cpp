// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <iostream>
#include <string>
#include <vector>

#include "hecke/cli/suites.hpp"

namespace {

using namespace hecke;

constexpr uint64_t kSeed = 20261018;

SuiteConfig config(const std::string& field, size_t samples = 0) {
  SuiteConfig c;
  c.field = parse_field_descriptor(field);
  c.seed = kSeed;
  c.samples = samples;
  return c;
}

std::string tally(const SuiteResult& r) {
  return r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.samples) + " [" + r.field + "]";
}

struct Criterion {
  Criterion(int i, std::string t, std::vector<SuiteResult> r = {}) : id(i), title(std::move(t)), runs(std::move(r)) {}
  int id;
  std::string title;
  std::vector<SuiteResult> runs;
  bool extra_ok = true;
  std::string extra;
};

bool report(const Criterion& c) {
  bool ok = c.extra_ok;
  std::string detail;
  for (const auto& r : c.runs) {
    ok = ok && r.ok();
    detail += (detail.empty() ? "" : ", ") + tally(r);
  }
  if (!c.extra.empty()) detail += (detail.empty() ? "" : ", ") + c.extra;
  std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << ": " << detail << "\n";
  for (const auto& r : c.runs)
    if (!r.counterexamples.empty()) std::cout << "  counterexample " << r.counterexamples.front().dump() << "\n";
  return ok;
}

}  // namespace

int main() {
  const std::string F101 = "Fp:101";
  std::vector<Criterion> cs;

  cs.push_back(Criterion(1, "GGRR identity", {run_suite("ggrr", config(F101, 500)), run_suite("ggrr", config("Q", 100))}));
  cs.push_back(Criterion(2, "Quot/Hilb roundtrip", {run_suite("roundtrip", config(F101, 500))}));
  cs.push_back(Criterion(3, "Census bijection", {run_suite("census", config(F101))}));
  cs.push_back(Criterion(4, "Span routes agree", {run_suite("spans", config(F101, 300))}));
  cs.push_back(Criterion(5, "Relative GGRR", {run_suite("relggrr", config(F101, 200))}));
  cs.push_back(Criterion(6, "pi-defect routes", {run_suite("pidefect", config(F101, 500))}));
  cs.push_back(Criterion(7, "Same Quot point, same span", {run_suite("samespan", config(F101, 100))}));
  cs.push_back(Criterion(8, "Serre pairing and coboundaries", {run_suite("serre", config(F101, 200))}));
  cs.push_back(Criterion(9, "Cohomology oracle", {run_suite("oracle", config("Fp:5", 200))}));

  {
    Criterion bn{10, "Brill-Noether"};
    bn.runs.push_back(run_suite("bn_span", config(F101, 100)));
    bn.runs.push_back(run_suite("secant", config(F101, 100)));
    bn.runs.push_back(run_suite("petri_duality", config(F101, 100)));
    size_t types = 0;
    for (const auto& [k, v] : bn.runs[0].stats.items())
      if (k.rfind("type_", 0) == 0) ++types;
    bn.extra_ok = types >= 10;
    bn.extra = std::to_string(types) + " splitting types";
    cs.push_back(std::move(bn));
  }

  {
    const SuiteConfig cfg = config(F101);
    auto full = [&] {
      std::vector<SuiteResult> rs;
      for (const auto& n : suite_names()) rs.push_back(run_suite(n, cfg));
      return report_json(rs, cfg).dump(2);
    };
    const std::string a = full(), b = full();
    Criterion det{11, "Deterministic reports"};
    det.extra_ok = a == b;
    det.extra = std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different");
    cs.push_back(std::move(det));
  }

  bool all = true;
  for (const auto& c : cs) all = report(c) && all;
  return all ? 0 : 1;
}
