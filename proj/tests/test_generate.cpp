#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nafaba;

namespace {

std::string text(const Instance& i) {
  if (const auto* p = std::get_if<LogicProgram>(&i))
    return serialize_lp(*p);
  return serialize_aba(std::get<AbaFramework>(i));
}

} // namespace

TEST(Generate, Deterministic) {
  for (Fragment f : {Fragment::general_lp, Fragment::bipolar_lp, Fragment::general_aba, Fragment::lp_aba,
                     Fragment::bipolar_aba}) {
    InstanceGenConfig c;
    c.seed = 1234;
    c.fragment = f;
    EXPECT_EQ(text(generate_instance(c)), text(generate_instance(c))) << to_string(f);
  }
}

TEST(Generate, SeedsDiffer) {
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 50; ++s) {
    InstanceGenConfig c;
    c.seed = s;
    seen.insert(text(generate_instance(c)));
  }
  EXPECT_GT(seen.size(), 40U);
}

TEST(Generate, RespectsRangesAndFragments) {
  for (std::size_t i = 0; i < 300; ++i) {
    InstanceGenConfig c;
    c.seed = instance_seed(61, i);
    c.min_atoms = 2;
    c.max_atoms = 5;
    c.max_rules = 8;
    c.fragment = Fragment::general_lp;
    const auto p = std::get<LogicProgram>(generate_instance(c));
    EXPECT_LE(p.atom_count(), 5U);
    EXPECT_LE(p.rules().size(), 8U);
    for (const auto& r : p.rules())
      EXPECT_LE(r.body.size(), 3U);
    c.fragment = Fragment::bipolar_lp;
    EXPECT_TRUE(is_bipolar_lp(std::get<LogicProgram>(generate_instance(c))));
    c.fragment = Fragment::lp_aba;
    const auto d = std::get<AbaFramework>(generate_instance(c));
    EXPECT_TRUE(is_lp_aba(d));
    EXPECT_GE(d.assumption_count(), 2U);
    EXPECT_LE(d.assumption_count(), 5U);
    c.fragment = Fragment::bipolar_aba;
    EXPECT_TRUE(is_bipolar_aba(std::get<AbaFramework>(generate_instance(c))));
    c.fragment = Fragment::general_aba;
    EXPECT_LE(std::get<AbaFramework>(generate_instance(c)).assumption_count(), 5U);
  }
}

TEST(Generate, NafHeadProbabilityExtremes) {
  InstanceGenConfig c;
  c.naf_head_probability = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    c.seed = s;
    for (const auto& r : std::get<LogicProgram>(generate_instance(c)).rules())
      EXPECT_FALSE(r.head.negated);
  }
  c.fragment = Fragment::general_aba;
  for (std::uint64_t s = 0; s < 50; ++s) {
    c.seed = s;
    EXPECT_TRUE(is_flat(std::get<AbaFramework>(generate_instance(c))));
  }
}

TEST(Generate, InvalidConfigs) {
  InstanceGenConfig c;
  c.fragment = Fragment::bipolar_lp;
  c.min_atoms = 0;
  c.max_atoms = 0;
  c.min_rules = 1;
  EXPECT_THROW(generate_instance(c), DomainError);
  InstanceGenConfig d;
  d.naf_head_probability = 1.5;
  EXPECT_THROW(generate_instance(d), DomainError);
  InstanceGenConfig e;
  e.min_atoms = 5;
  e.max_atoms = 2;
  EXPECT_THROW(generate_instance(e), DomainError);
  InstanceGenConfig f;
  f.max_atoms = 40;
  EXPECT_THROW(generate_instance(f), DomainError);
}

TEST(Generate, ConstraintInstances) {
  for (std::size_t i = 0; i < 200; ++i) {
    InstanceGenConfig c;
    c.seed = instance_seed(62, i);
    c.max_atoms = 6;
    const auto ci = generate_constraint_instance(c);
    const auto& d = ci.framework;
    ASSERT_GE(d.assumption_count(), 1U);
    EXPECT_TRUE(d.is_assumption(d.sentence(ci.rule.head)));
    for (const auto& b : ci.rule.body)
      EXPECT_TRUE(d.is_assumption(d.sentence(b)));
  }
}
