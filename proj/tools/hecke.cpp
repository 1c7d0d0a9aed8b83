#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/cli/suites.hpp"

namespace {

using namespace hecke;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::string field = "Fp:101";
  uint64_t seed = 1;
  size_t samples = 0;
  std::string json_out;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(const std::string& path, const Json& doc) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

std::vector<int> parse_exponents(const std::string& s) {
  std::vector<int> a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      a.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw usage_error("malformed exponent list '" + s + "'");
    }
  }
  if (a.empty()) throw usage_error("empty exponent list");
  return a;
}

std::string join(const std::vector<int>& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

/// Payload of a `kind` document, or the embedded object of a report that carries one.
const Json& payload(const Json& doc, const std::string& kind, const std::string& report_kind) {
  const Json& k = detail::member(doc, "kind", "");
  if (k == report_kind) return detail::member(document_data(doc, report_kind), kind.c_str(), "/data");
  return document_data(doc, kind);
}

/// The field named inside a document payload (bundle or torsion base).
FieldDescriptor field_of_payload(const Json& data) {
  const Json* b = &data;
  if (data.is_object() && data.contains("base")) b = &data["base"];
  const Json& f = detail::member(*b, "field", data.contains("base") ? "/data/base" : "/data");
  if (!f.is_string()) throw io_error("/data/field: expected a string");
  return parse_field_descriptor(f.get<std::string>());
}

template <class F>
Json bundle_summary(const Bundle<F>& V) {
  const auto c = cohomology(V);
  return Json{{"bundle", to_json(V)},      {"rank", V.rank()}, {"degree", degree(V)},
              {"splitting", c.split.exponents}, {"h0", c.h0()},    {"h1", c.h1()}};
}

int cmd_bundle(const Globals& g, const std::string& input, const std::string& split, const std::string& random) {
  const int chosen = !input.empty() + !split.empty() + !random.empty();
  if (chosen != 1) throw usage_error("bundle: give exactly one of --input, --split, --random");
  Json out;
  if (!input.empty()) {
    const Json doc = parse_json_text(read_input(input));
    const Json& data = payload(doc, "bundle", "bundle_report");
    out = with_field(field_of_payload(data), [&](const auto& f) { return bundle_summary(bundle_from_json(f, data, "/data")); });
  } else {
    const auto exps = parse_exponents(split.empty() ? random : split);
    out = with_field(parse_field_descriptor(g.field), [&](const auto& f) {
      Rng rng(g.seed);
      return bundle_summary(split.empty() ? random_bundle(f, rng, exps) : split_bundle(f, exps));
    });
  }
  std::cout << "rank " << out["rank"] << " degree " << out["degree"] << " splitting ("
            << join(out["splitting"].get<std::vector<int>>()) << ") h0 " << out["h0"] << " h1 " << out["h1"] << "\n";
  write_json(g.json_out, make_document("bundle_report", out));
  return kExitPass;
}

template <class F>
Json eltrans_summary(const TorsionModule<F>& tau) {
  const auto& V = tau.V;
  const auto vt = vtilde_from_tau(V, tau);
  const auto Z = quot_to_hilb(tau);
  const bool rt = roundtrip_check(V, tau);
  return Json{{"torsion", to_json(tau)},
              {"degree", torsion_degree(tau)},
              {"vtilde", bundle_summary(vt.Vtilde)},
              {"quot", to_json(vt.q)},
              {"zscheme", to_json(Z)},
              {"roundtrip", rt}};
}

int cmd_eltrans(const Globals& g, const std::string& input, const std::string& random) {
  if (input.empty() == random.empty()) throw usage_error("eltrans: give exactly one of --input, --random");
  Json out;
  if (!input.empty()) {
    const Json doc = parse_json_text(read_input(input));
    const Json& data = payload(doc, "torsion", "eltrans_report");
    out = with_field(field_of_payload(data), [&](const auto& f) { return eltrans_summary(torsion_from_json(f, data, "/data")); });
  } else {
    const auto exps = parse_exponents(random);
    out = with_field(parse_field_descriptor(g.field), [&](const auto& f) {
      using Fld = std::decay_t<decltype(f)>;
      Rng rng(g.seed);
      const auto V = random_bundle(f, rng, exps);
      return eltrans_summary(random_torsion(V, rng, TorsionShape<Fld>{}));
    });
  }
  const Json& vt = out["vtilde"];
  std::cout << "degree " << out["degree"] << " vtilde splitting (" << join(vt["splitting"].get<std::vector<int>>())
            << ") clusters " << out["zscheme"]["clusters"].size() << " roundtrip "
            << (out["roundtrip"].get<bool>() ? "ok" : "FAILED") << "\n";
  write_json(g.json_out, make_document("eltrans_report", out));
  return out["roundtrip"].get<bool>() ? kExitPass : kExitFail;
}

SuiteConfig config_of(const Globals& g) {
  SuiteConfig cfg;
  cfg.field = parse_field_descriptor(g.field);
  cfg.seed = g.seed;
  cfg.samples = g.samples;
  return cfg;
}

int run_and_print(const Globals& g, const std::vector<std::string>& names) {
  const SuiteConfig cfg = config_of(g);
  std::vector<SuiteResult> results;
  bool ok = true;
  for (const auto& n : names) {
    results.push_back(run_suite(n, cfg));
    const auto& r = results.back();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.samples << " [" << r.field
              << "]\n";
    for (const auto& c : r.counterexamples) std::cout << "  counterexample " << c.dump() << "\n";
    ok = ok && r.ok();
  }
  write_json(g.json_out, report_json(results, cfg));
  return ok ? kExitPass : kExitFail;
}

int cmd_replay(const Globals& g, const std::string& path) {
  Json rec = parse_json_text(read_input(path));
  // accept a bare record or a report document; the first counterexample is replayed
  if (rec.contains("schema")) {
    const Json& data = document_data(rec, "report");
    const Json* found = nullptr;
    for (const auto& s : data.at("suites"))
      if (!s.at("counterexamples").empty()) {
        found = &s.at("counterexamples")[0];
        break;
      }
    if (!found) throw usage_error("replay: the report has no counterexamples");
    rec = *found;
  }
  Json out = Json::object();
  const bool ok = replay_instance(rec, out);
  std::cout << (ok ? "PASS " : "FAIL ") << out.dump() << "\n";
  write_json(g.json_out, make_document("replay", out));
  return ok ? kExitPass : kExitFail;
}

int cmd_census(const Globals& g, uint64_t q, size_t r, int d) {
  CensusReport rep;
  try {
    rep = enumerate_reduced(q, r, d);
  } catch (const std::invalid_argument& e) {
    throw usage_error(std::string("census: ") + e.what());
  }
  const uint64_t expect = suites::census_closed_form(q, r, d);
  const bool ok = rep.bijection() && rep.torsion_count == expect;
  std::cout << (ok ? "PASS" : "FAIL") << " census q=" << q << " r=" << r << " d=" << d << " torsion "
            << rep.torsion_count << " schemes " << rep.scheme_count << " closed form " << expect << "\n";
  write_json(g.json_out,
             make_document("census", Json{{"q", q},
                                          {"r", r},
                                          {"d", d},
                                          {"torsion_count", rep.torsion_count},
                                          {"scheme_count", rep.scheme_count},
                                          {"distinct_from_torsion", rep.distinct_from_torsion},
                                          {"distinct_from_schemes", rep.distinct_from_schemes},
                                          {"images_agree", rep.images_agree},
                                          {"inverse_ok", rep.inverse_ok},
                                          {"closed_form", expect},
                                          {"ok", ok}}));
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary transformations of vector bundles on P^1"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Base field: Q or Fp:<p>")->capture_default_str();
  app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Instances per suite (0: suite default)")->capture_default_str();
  app.add_option("--json-out", g.json_out, "Write the JSON document to this path ('-' for stdout)");

  std::string input, split, random;
  auto* bundle = app.add_subcommand("bundle", "Splitting type and cohomology of a bundle");
  bundle->add_option("--input", input, "Bundle document ('-' for stdin)");
  bundle->add_option("--split", split, "Split bundle O(a_1)+...+O(a_r), e.g. 2,0,-1");
  bundle->add_option("--random", random, "Scrambled presentation of the given splitting type");

  std::string el_input, el_random;
  auto* eltrans = app.add_subcommand("eltrans", "Elementary transformation along a torsion module");
  eltrans->add_option("--input", el_input, "Torsion document ('-' for stdin)");
  eltrans->add_option("--random", el_random, "Random torsion on a random bundle of this splitting type");

  bool f_ggrr = false, f_relggrr = false, f_roundtrip = false, f_spans = false, f_bn = false, f_secant = false,
       f_serre = false, f_oracle = false;
  std::string replay;
  std::vector<std::string> named;
  auto* verify = app.add_subcommand("verify", "Run selected verification suites");
  verify->add_flag("--ggrr", f_ggrr, "h0 difference equals the span defect");
  verify->add_flag("--relggrr", f_relggrr, "Relative version with a twisting bundle");
  verify->add_flag("--roundtrip", f_roundtrip, "Quot to Hilb and back, pi-defect routes");
  verify->add_flag("--spans", f_spans, "Span routes agree; equal Quot points give equal spans");
  verify->add_flag("--bn", f_bn, "Brill-Noether span identity, genRKS, cup/Petri duality");
  verify->add_flag("--secant", f_secant, "Secant membership and monotonicity");
  verify->add_flag("--serre", f_serre, "Serre pairing and coboundaries");
  verify->add_flag("--oracle", f_oracle, "Cohomology against the direct linear-algebra oracle");
  verify->add_option("suites", named, "Suite names, as an alternative to the flags");
  verify->add_option("--replay", replay, "Replay a counterexample record or the first one in a report");

  uint64_t q = 2;
  size_t r = 2;
  int d = 1;
  auto* census = app.add_subcommand("census", "Exhaustive count of reduced points over a prime field");
  census->add_option("--q", q, "Prime field size")->capture_default_str();
  census->add_option("--r", r, "Rank")->capture_default_str();
  census->add_option("--d", d, "Degree")->capture_default_str();

  auto* report = app.add_subcommand("report", "Run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    parse_field_descriptor(g.field);
    if (*bundle) return cmd_bundle(g, input, split, random);
    if (*eltrans) return cmd_eltrans(g, el_input, el_random);
    if (*census) return cmd_census(g, q, r, d);
    if (*report) return run_and_print(g, suite_names());
    if (*verify) {
      if (!replay.empty()) return cmd_replay(g, replay);
      std::vector<std::string> names;
      for (const auto& n : named) {
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
          throw usage_error("verify: unknown suite '" + n + "'");
        names.push_back(n);
      }
      if (f_ggrr) names.push_back("ggrr");
      if (f_relggrr) names.push_back("relggrr");
      if (f_roundtrip) names.insert(names.end(), {"roundtrip", "pidefect"});
      if (f_spans) names.insert(names.end(), {"spans", "samespan"});
      if (f_bn) names.insert(names.end(), {"bn_span", "petri_duality"});
      if (f_secant) names.push_back("secant");
      if (f_serre) names.push_back("serre");
      if (f_oracle) names.push_back("oracle");
      if (names.empty()) throw usage_error("verify: select at least one suite");
      return run_and_print(g, names);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
