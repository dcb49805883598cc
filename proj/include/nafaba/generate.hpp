#pragma once

// Seeded random instances for property checks.

#include "nafaba/aba.hpp"
#include "nafaba/error.hpp"
#include "nafaba/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace nafaba {

enum class Fragment { general_lp, bipolar_lp, general_aba, lp_aba, bipolar_aba };

inline const char* to_string(Fragment f) {
  switch (f) {
  case Fragment::general_lp:
    return "lp";
  case Fragment::bipolar_lp:
    return "bipolar-lp";
  case Fragment::general_aba:
    return "aba";
  case Fragment::lp_aba:
    return "lp-aba";
  case Fragment::bipolar_aba:
    return "bipolar-aba";
  }
  return "?";
}

inline bool is_lp_fragment(Fragment f) { return f == Fragment::general_lp || f == Fragment::bipolar_lp; }

struct InstanceGenConfig {
  std::uint64_t seed = 1;
  Fragment fragment = Fragment::general_lp;
  /// Atoms for programs; assumptions for frameworks.
  std::size_t min_atoms = 1;
  std::size_t max_atoms = 7;
  std::size_t min_rules = 0;
  std::size_t max_rules = 10;
  /// Chance that a rule head is naf-negated (programs) or an assumption
  /// (frameworks, making them non-flat).
  double naf_head_probability = 0.3;
  /// Chance that a body literal of a program is naf-negated.
  double naf_body_probability = 0.5;
  /// Upper bound on non-assumption sentences of general and bipolar frameworks.
  std::size_t max_extra_sentences = 3;
  std::size_t max_body = 3;
};

using Instance = std::variant<LogicProgram, AbaFramework>;

/// Instance plus, for constraint-reading checks, an extra rule a <- M over A.
struct ConstraintInstance {
  AbaFramework framework;
  NamedAbaRule rule;
};

namespace detail {

/// Deterministic across standard libraries (unlike std::uniform_*_distribution).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::size_t below(std::size_t n) {
    if (n <= 1)
      return 0;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do
      x = rng_();
    while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) {
    if (p <= 0.0)
      return false;
    if (p >= 1.0)
      return true;
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  /// `k` distinct indices from [0, n), in draw order.
  std::vector<std::size_t> distinct(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i)
      pool[i] = i;
    for (std::size_t i = 0; i < k && i < n; ++i)
      std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(std::min(k, n));
    return pool;
  }

private:
  std::mt19937_64 rng_;
};

inline void validate(const InstanceGenConfig& c) {
  if (c.min_atoms > c.max_atoms || c.min_rules > c.max_rules)
    throw DomainError("instance generator: range minimum exceeds maximum");
  if (!(c.naf_head_probability >= 0.0 && c.naf_head_probability <= 1.0) ||
      !(c.naf_body_probability >= 0.0 && c.naf_body_probability <= 1.0))
    throw DomainError("instance generator: probabilities must lie in [0,1]");
  if (c.max_atoms > kDefaultEnumerationBound)
    throw DomainError("instance generator: atom range exceeds the enumeration bound");
  const bool needs_atoms = c.fragment == Fragment::bipolar_lp || c.fragment == Fragment::bipolar_aba;
  if (needs_atoms && c.max_atoms == 0 && c.min_rules > 0)
    throw DomainError("instance generator: infeasible config, bipolar rules need at least one atom");
  if (c.fragment == Fragment::general_lp && c.max_atoms == 0 && c.min_rules > 0)
    throw DomainError("instance generator: infeasible config, rules need at least one atom");
}

inline std::string numbered(char prefix, std::size_t i) { return std::string(1, prefix) + std::to_string(i + 1); }

inline LogicProgram random_lp(const InstanceGenConfig& c, Sampler& s) {
  const std::size_t n = s.between(c.min_atoms, c.max_atoms);
  const std::size_t m = n == 0 ? 0 : s.between(c.min_rules, c.max_rules);
  const bool bipolar = c.fragment == Fragment::bipolar_lp;
  std::vector<NamedRule> rules;
  for (std::size_t r = 0; r < m; ++r) {
    NamedRule rule{{numbered('p', s.below(n)), s.chance(c.naf_head_probability)}, {}};
    if (bipolar) {
      rule.body.push_back(named_neg(numbered('p', s.below(n))));
    } else {
      const std::size_t k = s.between(0, std::min(c.max_body, n));
      for (std::size_t i : s.distinct(n, k))
        rule.body.push_back({numbered('p', i), s.chance(c.naf_body_probability)});
    }
    rules.push_back(std::move(rule));
  }
  return LogicProgram(rules);
}

inline AbaFramework random_aba(const InstanceGenConfig& c, Sampler& s) {
  const std::size_t k = s.between(c.min_atoms, c.max_atoms);
  AbaBuilder b;
  std::vector<std::string> assumptions, others, contrary_of;
  for (std::size_t i = 0; i < k; ++i)
    assumptions.push_back(numbered('a', i));

  if (c.fragment == Fragment::lp_aba) {
    for (std::size_t i = 0; i < k; ++i) {
      others.push_back("n" + assumptions[i].substr(1));
      contrary_of.push_back(others[i]);
      b.assumption(assumptions[i]).contrary(assumptions[i], others[i]);
    }
  } else {
    const std::size_t e = s.between(k == 0 ? 0 : 1, std::max<std::size_t>(c.max_extra_sentences, 1));
    for (std::size_t i = 0; i < e; ++i) {
      others.push_back(numbered('p', i));
      b.sentence(others.back());
    }
    for (const auto& a : assumptions) {
      // Mostly ordinary sentences as contraries; sometimes an assumption.
      const bool to_assumption = others.empty() || s.chance(0.25);
      contrary_of.push_back(to_assumption ? assumptions[s.below(k)] : others[s.below(others.size())]);
      b.assumption(a).contrary(a, contrary_of.back());
    }
  }

  std::vector<std::string> language = assumptions;
  language.insert(language.end(), others.begin(), others.end());
  const std::size_t m = language.empty() ? 0 : s.between(c.min_rules, c.max_rules);

  for (std::size_t r = 0; r < m; ++r) {
    const bool assumption_head = !assumptions.empty() && (others.empty() || s.chance(c.naf_head_probability));
    std::string head = assumption_head ? assumptions[s.below(k)] : others[s.below(others.size())];
    std::vector<std::string> body;
    if (c.fragment == Fragment::bipolar_aba) {
      if (assumptions.empty())
        continue;
      // Non-assumption heads must be contraries.
      if (!assumption_head)
        head = contrary_of[s.below(k)];
      body.push_back(assumptions[s.below(k)]);
    } else {
      const std::size_t size = s.between(0, std::min(c.max_body, language.size()));
      for (std::size_t i : s.distinct(language.size(), size))
        body.push_back(language[i]);
    }
    b.rule(std::move(head), std::move(body));
  }
  return b.build();
}

} // namespace detail

/// Same config (seed included) gives the same instance; the result lies in
/// the selected fragment.
inline Instance generate_instance(const InstanceGenConfig& cfg) {
  detail::validate(cfg);
  detail::Sampler s(cfg.seed);
  if (is_lp_fragment(cfg.fragment))
    return detail::random_lp(cfg, s);
  return detail::random_aba(cfg, s);
}

/// A general framework paired with a rule a <- M where M ∪ {a} ⊆ A.
inline ConstraintInstance generate_constraint_instance(const InstanceGenConfig& cfg) {
  InstanceGenConfig c = cfg;
  c.fragment = Fragment::general_aba;
  c.min_atoms = std::max<std::size_t>(c.min_atoms, 1);
  c.max_atoms = std::max(c.max_atoms, c.min_atoms);
  detail::validate(c);
  detail::Sampler s(c.seed);
  ConstraintInstance out{detail::random_aba(c, s), {}};
  const auto& as = out.framework.assumption_list();
  out.rule.head = out.framework.name(as[s.below(as.size())]);
  for (std::size_t i : s.distinct(as.size(), s.between(0, std::min(c.max_body, as.size()))))
    out.rule.body.push_back(out.framework.name(as[i]));
  return out;
}

/// Per-instance seed for the i-th instance of a seeded batch.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace nafaba
