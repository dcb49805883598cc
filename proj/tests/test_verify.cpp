#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nafaba;

namespace {

const char* kCounterexample = "q.\nnot q :- not x.\np :- x.\n";

} // namespace

TEST(Report, LineFormat) {
  const auto ok = VerificationReport::pass(TheoremId::projection, "p <- .\n");
  const auto line = ok.to_line();
  EXPECT_EQ(line.substr(0, 16), "projection\tpass\t");
  EXPECT_EQ(line.size(), 16U + 16U + 2U);
  EXPECT_EQ(line.substr(line.size() - 2), "\t-");
  const auto bad = VerificationReport::fail(TheoremId::lp_round_trip, "x.\n", "missing: x.");
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.to_line().substr(bad.to_line().size() - 12), "\tmissing: x.");
  EXPECT_EQ(ok.to_line(), VerificationReport::pass(TheoremId::projection, "p <- .\n").to_line());
}

TEST(Report, TheoremNames) {
  for (const char* n : {"lp-aba-stable", "lp-aba-set-stable", "lp-round-trip", "aba-round-trip", "fragment-stable",
                        "fragment-set-stable", "projection", "constraint-reading"})
    EXPECT_EQ(to_string(*theorem_from_string(n)), std::string(n));
  EXPECT_FALSE(theorem_from_string("nope"));
}

TEST(Checks, StableCorrespondenceOnPaperPrograms) {
  for (const char* f : {"running.lp", "bipolar.lp", "contraposition_p1.lp", "contraposition_p2.lp"})
    EXPECT_TRUE(check_lp_aba_stable(support::golden_lp(f)).passed()) << f;
  EXPECT_TRUE(check_lp_aba_stable(LogicProgram{}).passed());
}

TEST(Checks, SetStableCorrespondenceOnPaperPrograms) {
  for (const char* f : {"running.lp", "bipolar.lp", "contraposition_p1.lp", "contraposition_p2.lp"})
    EXPECT_TRUE(check_lp_aba_set_stable(support::golden_lp(f)).passed()) << f;
}

TEST(Checks, SetStableCorrespondenceFailsOnGeneralPrograms) {
  // {p, q, x} is set-stable in the program (x <- q is a contraposition rule),
  // but Δ = ∅ is not set-stable in D_P since nothing derives x from ∅ in ABA.
  const auto p = parse_lp(kCounterexample);
  EXPECT_EQ(support::family(p, set_stable_models(p)), (oracle::Family{{"p", "q", "x"}}));
  const auto d = lp_to_aba(p);
  EXPECT_EQ(support::family(d, set_stable_extensions(d)), (oracle::Family{{"not p"}}));
  const auto r = check_lp_aba_set_stable(p);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.witness().find("I={p, q, x}"), std::string::npos) << r.witness();
}

TEST(Checks, SetStableCorrespondenceHoldsOnBipolarPrograms) {
  for (std::size_t i = 0; i < 300; ++i) {
    InstanceGenConfig c;
    c.seed = instance_seed(51, i);
    c.fragment = Fragment::bipolar_lp;
    const auto p = std::get<LogicProgram>(generate_instance(c));
    EXPECT_TRUE(check_lp_aba_set_stable(p).passed()) << serialize_lp(p);
  }
}

TEST(Checks, RoundTrips) {
  EXPECT_TRUE(check_round_trips(support::golden_lp("running.lp")).passed());
  EXPECT_TRUE(check_round_trips(support::golden_aba("lp_aba.aba")).passed());
  EXPECT_TRUE(check_round_trips(LogicProgram{}).passed());
  EXPECT_TRUE(check_round_trips(AbaFramework{}).passed());
  EXPECT_THROW(check_round_trips(support::golden_aba("composed.aba")), FragmentViolation);
}

TEST(Checks, Fragment) {
  const auto d = support::golden_aba("lp_aba.aba");
  EXPECT_TRUE(check_lp_aba_fragment(d, false).passed());
  EXPECT_TRUE(check_lp_aba_fragment(d, true).passed());
  const auto trivial = parse_aba("#assumption a.\n#contrary a = x.\nx <- a.\n");
  EXPECT_TRUE(check_lp_aba_fragment(trivial, false).passed());
  EXPECT_TRUE(check_lp_aba_fragment(trivial, true).passed());
  EXPECT_THROW(check_lp_aba_fragment(support::golden_aba("composed.aba"), false), FragmentViolation);
}

TEST(Checks, SetStableFragmentReadThroughDelta) {
  // D1: the empty set is set-stable, Th(∅)\A = {contrary_b}, while the
  // set-stable model of P_D1 is {contrary_a, contrary_b}.
  const auto d = support::golden_aba("contraposition_d1.aba");
  const auto pd = lp_aba_to_lp(d).program;
  EXPECT_EQ(support::family(pd, set_stable_models(pd)), (oracle::Family{{"contrary_a", "contrary_b"}}));
  EXPECT_EQ(support::names(pd, extension_to_model(d, pd, d.empty_set())), (oracle::Names{"contrary_b"}));
  EXPECT_EQ(model_to_extension(d, pd, pd.interpretation({"contrary_a", "contrary_b"})), d.empty_set());
  EXPECT_TRUE(check_lp_aba_fragment(d, true).passed());
}

TEST(Checks, Projection) {
  EXPECT_TRUE(check_projection(support::golden_aba("composed.aba")).passed());
  EXPECT_TRUE(check_projection(parse_aba("#assumption a.\n#contrary a = x.\n")).passed());
}

TEST(Checks, ConstraintReading) {
  const auto base = parse_aba("#assumption a, b, c, d.\n#contrary a = ca.\n#contrary b = cb.\n#contrary c = cc.\n"
                              "#contrary d = cd.\ncc <- a, b.\nca <- c.\n");
  EXPECT_EQ(support::family(base, stable_extensions(base)), (oracle::Family{{"a", "b", "d"}, {"b", "c", "d"}}));
  EXPECT_TRUE(check_constraint_reading(base, {"a", {"d"}}).passed());
  const auto extended = to_builder(base).rule("a", {"d"}).build();
  EXPECT_EQ(support::family(extended, stable_extensions(extended)), (oracle::Family{{"a", "b", "d"}}));

  // a <- with a in every stable extension changes nothing
  const auto always = parse_aba("#assumption a, b.\n#contrary a = x.\n#contrary b = y.\ny <- a.\n");
  const auto before = stable_extensions(always);
  EXPECT_TRUE(check_constraint_reading(always, {"a", {}}).passed());
  EXPECT_EQ(stable_extensions(to_builder(always).rule("a").build()), before);

  EXPECT_THROW(check_constraint_reading(base, {"ca", {"d"}}), DomainError);
  EXPECT_THROW(check_constraint_reading(base, {"a", {"cd"}}), DomainError);
}

TEST(Shrinking, ReducesCounterexample) {
  const auto p = parse_lp("q.\nnot q :- not x.\np :- x.\nr :- not s.\ns :- not r.\nt :- r, s.\n");
  const auto r = check_lp_shrinking(TheoremId::lp_aba_set_stable, p, {});
  ASSERT_FALSE(r.passed());
  const auto pos = r.witness().find("shrunk instance: ");
  ASSERT_NE(pos, std::string::npos);
  const std::string shrunk = r.witness().substr(pos + 17);
  for (const char* gone : {"r :-", "s :-", "t :-"})
    EXPECT_EQ(shrunk.find(gone), std::string::npos) << shrunk;
  EXPECT_NE(shrunk.find("not q :- not x."), std::string::npos) << shrunk;
}

TEST(Shrinking, GreedyFixpoint) {
  // The result of shrinking admits no smaller failing candidate.
  const auto p = parse_lp(kCounterexample);
  auto check = [](const LogicProgram& q) { return check_lp_aba_set_stable(q); };
  auto [small, report] = shrink_lp(p, check(p), check);
  EXPECT_FALSE(report.passed());
  for (const auto& c : detail::lp_shrink_candidates(small))
    EXPECT_TRUE(check(c).passed()) << serialize_lp(c);
}

TEST(Batches, VerifyGoldenFiles) {
  for (const char* f : {"running.lp", "bipolar.lp", "contraposition_p1.lp", "contraposition_p2.lp"})
    for (const auto& r : verify_lp(support::golden_lp(f)))
      EXPECT_TRUE(r.passed()) << f << " " << r.to_line();
  for (const char* f : {"nonflat.aba", "lp_aba.aba", "composed.aba", "contraposition_d1.aba", "contraposition_d2.aba",
                        "constraint.aba"})
    for (const auto& r : verify_aba(support::golden_aba(f)))
      EXPECT_TRUE(r.passed()) << f << " " << r.to_line();
}

TEST(Batches, FuzzIsDeterministicAcrossJobs) {
  FuzzOptions f;
  f.generator.seed = 9;
  f.generator.fragment = Fragment::general_aba;
  f.generator.max_atoms = 5;
  f.count = 60;
  std::string one, four;
  for (const auto& r : run_fuzz(f))
    one += r.to_line() + "\n";
  f.jobs = 4;
  for (const auto& r : run_fuzz(f))
    four += r.to_line() + "\n";
  EXPECT_EQ(one, four);
  f.count = 0;
  EXPECT_TRUE(run_fuzz(f).empty());
}

TEST(Batches, FuzzProjectionAndConstraintReading) {
  FuzzOptions f;
  f.generator.seed = 3;
  f.generator.fragment = Fragment::general_aba;
  f.generator.max_atoms = 6;
  f.count = 200;
  for (const auto& r : run_fuzz(f))
    EXPECT_TRUE(r.passed()) << r.to_line();
}

TEST(Batches, FuzzStableCorrespondence) {
  FuzzOptions f;
  f.generator.seed = 1;
  f.count = 300;
  for (const auto& r : run_fuzz(f))
    if (r.theorem() != TheoremId::lp_aba_set_stable) {
      EXPECT_TRUE(r.passed()) << r.to_line();
    }
}
