#include <gtest/gtest.h>

#include "hecke/cli/suites.hpp"

namespace {

using namespace hecke;

using QF = RationalField;
using PF = PrimeField;

const QF kQ{};
const PF kF7{7};

TEST(FieldDescriptor, Parse) {
  EXPECT_TRUE(parse_field_descriptor("Q").rational);
  EXPECT_EQ(parse_field_descriptor("Fp:101").p, 101u);
  EXPECT_EQ(parse_field_descriptor("F5").name(), "Fp:5");
  EXPECT_THROW(parse_field_descriptor("Fp:4"), io_error);
  EXPECT_THROW(parse_field_descriptor("Fp:"), io_error);
  EXPECT_THROW(parse_field_descriptor("R"), io_error);
}

template <class F>
void roundtrip_objects(const F& f, uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 15; ++it) {
    std::vector<int> a;
    const size_t r = 1 + rng.below(3);
    for (size_t i = 0; i < r; ++i) a.push_back(static_cast<int>(rng.between(-4, 2)));
    const auto V = random_bundle(f, rng, a);
    const Json jv = to_json(V);
    EXPECT_EQ(bundle_from_json(f, Json::parse(jv.dump())), V);
    const auto tau = random_torsion(V, rng, TorsionShape<F>{});
    const Json jt = to_json(tau);
    EXPECT_EQ(to_json(torsion_from_json(f, Json::parse(jt.dump()))), jt);
    ZShape shape;
    if (r > 1) shape.fiber_stack = 2;
    const auto Z = random_zscheme(f, r, rng, shape);
    EXPECT_EQ(zscheme_from_json(f, Json::parse(to_json(Z).dump()), r), Z);
    const auto q = vtilde_from_tau(V, tau).q;
    const auto q2 = quot_from_json(f, Json::parse(to_json(q).dump()));
    EXPECT_TRUE(quot_equal(q, q2));
    EXPECT_EQ(to_json(q2), to_json(q));
  }
}

TEST(Serialize, RoundtripPrime) { roundtrip_objects(kF7, 1); }
TEST(Serialize, RoundtripRational) { roundtrip_objects(kQ, 2); }

TEST(Serialize, ScalarsAreStrings) {
  const auto V = split_bundle(kQ, {-2});
  Json j = to_json(V);
  EXPECT_EQ(j["latticeInf"][0][0]["den"][2], "1");
  j["latticeInf"][0][0]["den"][2] = 1;
  try {
    bundle_from_json(kQ, j, "/data");
    FAIL();
  } catch (const io_error& e) {
    EXPECT_EQ(std::string(e.what()), "/data/latticeInf/0/0/den/2: scalars are strings");
  }
}

TEST(Serialize, ErrorsNamePathOrOffset) {
  try {
    parse_json_text("{\"a\": [1, 2,, 3]}");
    FAIL();
  } catch (const io_error& e) {
    EXPECT_NE(std::string(e.what()).find("byte 13"), std::string::npos) << e.what();
  }
  Json j = to_json(split_bundle(kF7, {1, -1}));
  j.erase("lattice0");
  EXPECT_THROW(bundle_from_json(kF7, j), io_error);
  Json wrong = to_json(split_bundle(kF7, {1}));
  EXPECT_THROW(bundle_from_json(PF(11), wrong), io_error);
  Json singular = to_json(split_bundle(kF7, {1, 0}));
  singular["lattice0"][1][1]["num"] = Json::array();
  try {
    bundle_from_json(kF7, singular, "/data");
    FAIL();
  } catch (const io_error& e) {
    EXPECT_EQ(std::string(e.what()), "/data: degenerate lattice");
  }
  const Json doc = make_document("bundle", Json::object());
  EXPECT_THROW(document_data(doc, "torsion"), io_error);
  Json old = doc;
  old["schema"] = "hecke/0";
  EXPECT_THROW(document_data(old, "bundle"), io_error);
}

TEST(Serialize, ClusterNormalizationIsReported) {
  // (2, 4) + z (0, 1) is normalized to a jet with leading coordinate 1
  Json c{{"x", "3"}, {"k", 2}, {"jet", Json::array({Json::array({"2"}), Json::array({"4", "1"})})}};
  bool changed = false;
  const auto cl = cluster_from_json(kF7, c, 2, "", &changed);
  EXPECT_TRUE(changed);
  EXPECT_EQ(cl.jet[0], Poly<PF>::constant(kF7, kF7.one()));
  bool again = true;
  cluster_from_json(kF7, to_json(cl), 2, "", &again);
  EXPECT_FALSE(again);
  Json zero{{"x", "inf"}, {"k", 1}, {"jet", Json::array({Json::array(), Json::array()})}};
  EXPECT_THROW(cluster_from_json(kF7, zero, 2, ""), io_error);
}

TEST(Serialize, SharedBranchPointRejected) {
  Json c{{"x", "0"}, {"k", 1}, {"jet", Json::array({Json::array({"1"})})}};
  Json z{{"clusters", Json::array({c, c})}};
  EXPECT_THROW(zscheme_from_json(kF7, z, 1), io_error);
}

TEST(Suites, ClosedForm) {
  EXPECT_EQ(suites::census_closed_form(2, 2, 1), 9u);
  EXPECT_EQ(suites::census_closed_form(2, 2, 2), 27u);
  EXPECT_EQ(suites::census_closed_form(3, 2, 2), 96u);
  EXPECT_EQ(suites::census_closed_form(5, 1, 3), 20u);
}

TEST(Suites, SeedsAreStableAndSeparated) {
  EXPECT_EQ(instance_seed(1, "ggrr", 0), instance_seed(1, "ggrr", 0));
  EXPECT_NE(instance_seed(1, "ggrr", 0), instance_seed(1, "ggrr", 1));
  EXPECT_NE(instance_seed(1, "ggrr", 0), instance_seed(1, "spans", 0));
  EXPECT_NE(instance_seed(1, "ggrr", 0), instance_seed(2, "ggrr", 0));
  EXPECT_THROW(run_suite("nosuch", SuiteConfig{}), unknown_suite);
}

TEST(Suites, DeterministicAndReplayable) {
  SuiteConfig cfg;
  cfg.samples = 8;
  for (const auto& name : suite_names()) {
    const auto a = run_suite(name, cfg), b = run_suite(name, cfg);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump()) << name;
    EXPECT_TRUE(a.ok()) << name;
  }
  // a recorded instance replays to the same inputs
  Json inst = Json::object(), stats = Json::object();
  const uint64_t s = instance_seed(cfg.seed, "ggrr", 3);
  run_instance("ggrr", PF(101), s, inst, stats);
  Json out = Json::object();
  EXPECT_TRUE(replay_instance(Json{{"suite", "ggrr"}, {"field", "Fp:101"}, {"instance_seed", s}}, out));
  EXPECT_EQ(out, inst);
  EXPECT_THROW(replay_instance(Json{{"suite", "ggrr"}}, out), io_error);
}

TEST(Suites, FailuresCarryTheInstance) {
  SuiteResult r;
  r.name = "x";
  suites::record(r, false, Json{{"instance_seed", 5}}, 1);
  suites::record(r, false, Json{{"instance_seed", 6}}, 1);
  suites::record(r, true, Json{}, 1);
  EXPECT_EQ(r.failed, 2u);
  EXPECT_EQ(r.passed, 1u);
  ASSERT_EQ(r.counterexamples.size(), 1u);
  EXPECT_EQ(r.counterexamples[0]["instance_seed"], 5);
  EXPECT_FALSE(r.ok());
  Json inst = Json::object();
  EXPECT_FALSE(suites::guarded([]() -> bool { throw std::runtime_error("boom"); }, inst));
  EXPECT_EQ(inst["error"], "boom");
}

}  // namespace
