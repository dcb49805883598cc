#pragma once

// Assumption-based argumentation frameworks, flat or not: derivability,
// closure, attacks, stable and set-stable extensions.

#include "nafaba/enumerate.hpp"
#include "nafaba/error.hpp"
#include "nafaba/forward_chain.hpp"
#include "nafaba/id_set.hpp"
#include "nafaba/symbol_table.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nafaba {

struct SentenceTag;
using SentenceId = StrongId<SentenceTag>;
using SentenceSet = IdSet<SentenceId>;
using AssumptionSet = IdSet<SentenceId>;

struct AbaRule {
  SentenceId head;
  /// Sorted, duplicate-free.
  std::vector<SentenceId> body;

  friend auto operator<=>(const AbaRule&, const AbaRule&) = default;
  friend bool operator==(const AbaRule&, const AbaRule&) = default;
};

struct NamedAbaRule {
  std::string head;
  std::vector<std::string> body;
};

class AbaBuilder;

/// (L, R, A, contrary) with a total contrary map on A. Sentence ids follow
/// name order; rules are sorted and duplicate-free.
class AbaFramework {
public:
  AbaFramework() = default;

  const SymbolTable<SentenceId>& symbols() const noexcept { return symbols_; }
  std::size_t sentence_count() const noexcept { return symbols_.size(); }
  const std::vector<AbaRule>& rules() const noexcept { return rules_; }

  /// A as a set over the whole language.
  const AssumptionSet& assumptions() const noexcept { return assumption_mask_; }
  /// A in ascending id order; position i is bit i of enumeration masks.
  const std::vector<SentenceId>& assumption_list() const noexcept { return assumption_list_; }
  std::size_t assumption_count() const noexcept { return assumption_list_.size(); }

  bool is_assumption(SentenceId s) const { return assumption_mask_.contains(s); }

  SentenceId contrary(SentenceId a) const {
    if (!is_assumption(a))
      throw DomainError("'" + name(a) + "' is not an assumption");
    return contrary_[id_index(a)];
  }

  /// Image of the contrary map.
  SentenceSet contraries() const {
    SentenceSet out(sentence_count());
    for (SentenceId a : assumption_list_)
      out.insert(contrary_[id_index(a)]);
    return out;
  }

  const std::string& name(SentenceId s) const { return symbols_.name(s); }
  SentenceId sentence(std::string_view n) const { return symbols_.at(n); }

  AssumptionSet assumption_set(std::initializer_list<std::string_view> names) const {
    AssumptionSet s(sentence_count());
    for (auto n : names) {
      const SentenceId id = sentence(n);
      if (!is_assumption(id))
        throw DomainError("'" + std::string(n) + "' is not an assumption");
      s.insert(id);
    }
    return s;
  }

  AssumptionSet empty_set() const { return AssumptionSet(sentence_count()); }

  /// Subset of A selected by bits of `mask` over assumption_list().
  AssumptionSet assumption_subset(std::uint64_t mask) const {
    AssumptionSet s(sentence_count());
    for (std::size_t i = 0; i < assumption_list_.size(); ++i)
      if ((mask >> i) & 1U)
        s.insert(assumption_list_[i]);
    return s;
  }

  std::vector<NamedAbaRule> named_rules() const {
    std::vector<NamedAbaRule> out;
    for (const AbaRule& r : rules_) {
      NamedAbaRule n{name(r.head), {}};
      for (SentenceId b : r.body)
        n.body.push_back(name(b));
      out.push_back(std::move(n));
    }
    return out;
  }

  friend bool operator==(const AbaFramework& a, const AbaFramework& b) {
    return a.symbols_ == b.symbols_ && a.rules_ == b.rules_ && a.assumption_mask_ == b.assumption_mask_ &&
           a.contrary_ == b.contrary_;
  }

private:
  friend class AbaBuilder;

  SymbolTable<SentenceId> symbols_;
  std::vector<AbaRule> rules_;
  AssumptionSet assumption_mask_;
  std::vector<SentenceId> assumption_list_;
  std::vector<SentenceId> contrary_;
};

/// Accumulates sentences, assumptions, contraries and rules, then validates
/// them into an AbaFramework. Sentences mentioned anywhere join L.
class AbaBuilder {
public:
  AbaBuilder& sentence(std::string s) {
    check_name(s);
    language_.insert(std::move(s));
    return *this;
  }

  AbaBuilder& assumption(std::string a) {
    sentence(a);
    assumptions_.insert(std::move(a));
    return *this;
  }

  AbaBuilder& contrary(std::string a, std::string c) {
    sentence(a);
    sentence(c);
    if (contraries_.count(a))
      throw ConstructionError("duplicate contrary declaration for " + a);
    contraries_.emplace(std::move(a), std::move(c));
    return *this;
  }

  AbaBuilder& rule(std::string head, std::vector<std::string> body = {}) {
    sentence(head);
    for (const auto& b : body)
      sentence(b);
    rules_.push_back({std::move(head), std::move(body)});
    return *this;
  }

  AbaBuilder& rule(const NamedAbaRule& r) { return rule(r.head, r.body); }

  bool has_contrary(const std::string& a) const { return contraries_.count(a) != 0; }
  bool has_assumption(const std::string& a) const { return assumptions_.count(a) != 0; }

  AbaFramework build() const {
    for (const auto& [a, c] : contraries_)
      if (!assumptions_.count(a))
        throw ConstructionError("contrary declared for non-assumption " + a);
    for (const auto& a : assumptions_)
      if (!contraries_.count(a))
        throw ConstructionError("contrary undefined for " + a);

    AbaFramework d;
    d.symbols_ = SymbolTable<SentenceId>(std::vector<std::string>(language_.begin(), language_.end()));
    const std::size_t n = d.symbols_.size();
    d.assumption_mask_ = AssumptionSet(n);
    d.contrary_.assign(n, SentenceId{});
    for (const auto& a : assumptions_) {
      const SentenceId id = d.symbols_.at(a);
      d.assumption_mask_.insert(id);
      d.contrary_[id_index(id)] = d.symbols_.at(contraries_.at(a));
    }
    d.assumption_list_ = d.assumption_mask_.members();
    for (const auto& r : rules_) {
      AbaRule out{d.symbols_.at(r.head), {}};
      for (const auto& b : r.body)
        out.body.push_back(d.symbols_.at(b));
      std::sort(out.body.begin(), out.body.end());
      out.body.erase(std::unique(out.body.begin(), out.body.end()), out.body.end());
      d.rules_.push_back(std::move(out));
    }
    std::sort(d.rules_.begin(), d.rules_.end());
    d.rules_.erase(std::unique(d.rules_.begin(), d.rules_.end()), d.rules_.end());
    return d;
  }

private:
  static void check_name(const std::string& s) {
    if (s.empty())
      throw ConstructionError("sentence name must be nonempty");
  }

  std::set<std::string> language_;
  std::set<std::string> assumptions_;
  std::map<std::string, std::string> contraries_;
  std::vector<NamedAbaRule> rules_;
};

/// Builder holding everything in `d`, for deriving modified frameworks.
inline AbaBuilder to_builder(const AbaFramework& d) {
  AbaBuilder b;
  for (const std::string& s : d.symbols().names())
    b.sentence(s);
  for (SentenceId a : d.assumption_list()) {
    b.assumption(d.name(a));
    b.contrary(d.name(a), d.name(d.contrary(a)));
  }
  for (const NamedAbaRule& r : d.named_rules())
    b.rule(r);
  return b;
}

namespace detail {

inline void require_assumption_set(const AbaFramework& d, const AssumptionSet& s) {
  if (s.universe() != d.sentence_count())
    throw DomainError("assumption set is not over the language of the framework");
  if (!s.is_subset_of(d.assumptions()))
    throw DomainError("set contains sentences that are not assumptions");
}

} // namespace detail

/// Forward chaining from `s`; `reason` records first-use provenance.
inline ChainResult<SentenceId> theory_counted(const AbaFramework& d, const AssumptionSet& s) {
  detail::require_assumption_set(d, s);
  return forward_chain<SentenceId>(
      d.sentence_count(), d.rules(), s, [](const AbaRule& r) { return std::optional<SentenceId>(r.head); },
      [](const AbaRule& r) -> const std::vector<SentenceId>& { return r.body; });
}

/// Every sentence derivable from a subset of `s` (always includes `s`).
inline SentenceSet theory(const AbaFramework& d, const AssumptionSet& s) {
  return theory_counted(d, s).derived;
}

inline AssumptionSet closure_aba(const AbaFramework& d, const AssumptionSet& s) {
  return theory(d, s) & d.assumptions();
}

namespace detail {

inline bool attacks_given_theory(const AbaFramework& d, const SentenceSet& th, const AssumptionSet& t) {
  bool hit = false;
  t.for_each([&](SentenceId a) { hit = hit || th.contains(d.contrary(a)); });
  return hit;
}

} // namespace detail

inline bool attacks(const AbaFramework& d, const AssumptionSet& s, const AssumptionSet& t) {
  detail::require_assumption_set(d, t);
  return detail::attacks_given_theory(d, theory(d, s), t);
}

inline bool is_conflict_free(const AbaFramework& d, const AssumptionSet& s) { return !attacks(d, s, s); }

inline bool is_closed(const AbaFramework& d, const AssumptionSet& s) { return closure_aba(d, s) == s; }

namespace detail {

/// Closed and conflict-free, judged from the precomputed theory of `s`.
inline bool closed_and_conflict_free(const AbaFramework& d, const AssumptionSet& s, const SentenceSet& th) {
  return (th & d.assumptions()) == s && !attacks_given_theory(d, th, s);
}

inline bool stable_given_theory(const AbaFramework& d, const AssumptionSet& s, const SentenceSet& th) {
  if (!closed_and_conflict_free(d, s, th))
    return false;
  for (SentenceId x : d.assumption_list())
    if (!s.contains(x) && !th.contains(d.contrary(x)))
      return false;
  return true;
}

inline bool set_stable_given_theory(const AbaFramework& d, const AssumptionSet& s, const SentenceSet& th,
                                    const std::vector<AssumptionSet>& singleton_closures) {
  if (!closed_and_conflict_free(d, s, th))
    return false;
  const auto& as = d.assumption_list();
  for (std::size_t i = 0; i < as.size(); ++i)
    if (!s.contains(as[i]) && !attacks_given_theory(d, th, singleton_closures[i]))
      return false;
  return true;
}

inline std::vector<AssumptionSet> singleton_closures(const AbaFramework& d) {
  std::vector<AssumptionSet> out;
  for (SentenceId x : d.assumption_list()) {
    AssumptionSet one(d.sentence_count());
    one.insert(x);
    out.push_back(closure_aba(d, one));
  }
  return out;
}

} // namespace detail

/// Closed, conflict-free, and attacks every assumption outside `s`.
inline bool is_stable_extension(const AbaFramework& d, const AssumptionSet& s) {
  return detail::stable_given_theory(d, s, theory(d, s));
}

/// Closed, conflict-free, and attacks cl({x}) for every assumption x outside `s`.
inline bool is_set_stable_extension(const AbaFramework& d, const AssumptionSet& s) {
  return detail::set_stable_given_theory(d, s, theory(d, s), detail::singleton_closures(d));
}

namespace detail {

template <class Pred>
std::vector<AssumptionSet> enumerate_assumption_sets(const AbaFramework& d, const EnumerationOptions& opts,
                                                     Pred&& pred) {
  auto masks = enumerate_subsets(d.assumption_count(), opts,
                                 [&](std::uint64_t m) { return pred(d.assumption_subset(m)); });
  std::vector<AssumptionSet> out;
  for (auto m : masks)
    out.push_back(d.assumption_subset(m));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

inline std::vector<AssumptionSet> stable_extensions(const AbaFramework& d, const EnumerationOptions& opts = {}) {
  return detail::enumerate_assumption_sets(
      d, opts, [&](const AssumptionSet& s) { return detail::stable_given_theory(d, s, theory(d, s)); });
}

inline std::vector<AssumptionSet> set_stable_extensions(const AbaFramework& d, const EnumerationOptions& opts = {}) {
  check_enumeration_bound(d.assumption_count(), opts);
  const auto closures = detail::singleton_closures(d);
  return detail::enumerate_assumption_sets(d, opts, [&](const AssumptionSet& s) {
    return detail::set_stable_given_theory(d, s, theory(d, s), closures);
  });
}

/// No rule derives an assumption.
inline bool is_flat(const AbaFramework& d) {
  return std::none_of(d.rules().begin(), d.rules().end(),
                      [&](const AbaRule& r) { return d.is_assumption(r.head); });
}

/// Every rule has a single assumption in its body and an assumption or a
/// contrary as its head.
inline bool is_bipolar_aba(const AbaFramework& d) {
  const SentenceSet ctr = d.contraries();
  return std::all_of(d.rules().begin(), d.rules().end(), [&](const AbaRule& r) {
    return r.body.size() == 1 && d.is_assumption(r.body.front()) &&
           (d.is_assumption(r.head) || ctr.contains(r.head));
  });
}

struct FragmentFailure {
  /// Number of the violated LP-ABA clause: 1 (A and its contraries are
  /// disjoint), 2 (contrary map injective), 3 (L is A plus contraries).
  int clause = 0;
  std::string detail;
};

inline std::optional<FragmentFailure> lp_aba_violation(const AbaFramework& d) {
  for (SentenceId a : d.assumption_list())
    if (const SentenceId c = d.contrary(a); d.is_assumption(c))
      return FragmentFailure{1, "contrary of " + d.name(a) + " is the assumption " + d.name(c)};
  std::map<SentenceId, SentenceId> seen;
  for (SentenceId a : d.assumption_list()) {
    if (auto [it, fresh] = seen.emplace(d.contrary(a), a); !fresh)
      return FragmentFailure{2, "assumptions " + d.name(it->second) + " and " + d.name(a) +
                                    " share the contrary " + d.name(d.contrary(a))};
  }
  const SentenceSet covered = d.assumptions() | d.contraries();
  for (std::size_t i = 0; i < d.sentence_count(); ++i)
    if (!covered.contains(SentenceId(i)))
      return FragmentFailure{3, "sentence " + d.name(SentenceId(i)) + " is neither an assumption nor a contrary"};
  return std::nullopt;
}

inline bool is_lp_aba(const AbaFramework& d) { return !lp_aba_violation(d).has_value(); }

// ---------------------------------------------------------------------------
// Tree-derivations

struct DerivationNode {
  /// nullopt labels the ⊤ leaf below a rule with an empty body.
  std::optional<SentenceId> label;
  /// Index into AbaFramework::rules() for inner nodes.
  std::optional<std::size_t> rule;
  std::vector<std::size_t> children;
};

struct DerivationTree {
  /// nodes[0] is the root.
  std::vector<DerivationNode> nodes;
  /// Assumption leaves.
  AssumptionSet leaves;
  /// Sorted indices of the rules labelling inner nodes.
  std::vector<std::size_t> rules_used;

  SentenceId root() const { return *nodes.front().label; }
};

/// A witness tree for `s ⊢ p`, rebuilt from first-use provenance, or nullopt
/// when `p` is not in the theory of `s`.
inline std::optional<DerivationTree> derivation_tree(const AbaFramework& d, const AssumptionSet& s, SentenceId p) {
  const auto res = theory_counted(d, s);
  if (!res.derived.contains(p))
    return std::nullopt;

  DerivationTree tree;
  tree.leaves = AssumptionSet(d.sentence_count());
  std::set<std::size_t> used;

  auto build = [&](auto& self, SentenceId label) -> std::size_t {
    const std::size_t idx = tree.nodes.size();
    tree.nodes.push_back({label, std::nullopt, {}});
    if (s.contains(label)) {
      tree.leaves.insert(label);
      return idx;
    }
    const std::size_t r = res.reason[id_index(label)];
    tree.nodes[idx].rule = r;
    used.insert(r);
    const AbaRule& rule = d.rules()[r];
    if (rule.body.empty()) {
      const std::size_t top = tree.nodes.size();
      tree.nodes.push_back({std::nullopt, std::nullopt, {}});
      tree.nodes[idx].children.push_back(top);
      return idx;
    }
    for (SentenceId b : rule.body) {
      const std::size_t child = self(self, b);
      tree.nodes[idx].children.push_back(child);
    }
    return idx;
  };
  build(build, p);
  tree.rules_used.assign(used.begin(), used.end());
  return tree;
}

/// Checks the structural conditions of a tree-derivation of `p` from
/// assumptions within `s`. Returns a description of the first problem found.
inline std::optional<std::string> derivation_tree_problem(const AbaFramework& d, const AssumptionSet& s,
                                                          SentenceId p, const DerivationTree& t) {
  if (t.nodes.empty())
    return "tree has no nodes";
  if (t.nodes.front().label != p)
    return "root is not labelled with the derived sentence";
  AssumptionSet leaf_labels(d.sentence_count());
  std::set<std::size_t> rules_seen;
  std::vector<int> parents(t.nodes.size(), 0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const DerivationNode& n = t.nodes[i];
    for (std::size_t c : n.children) {
      if (c >= t.nodes.size() || c == 0)
        return "child index out of range";
      ++parents[c];
    }
    if (n.children.empty()) {
      if (n.rule)
        return "leaf carries a rule";
      if (n.label) {
        if (!d.is_assumption(*n.label))
          return "leaf " + d.name(*n.label) + " is not an assumption";
        leaf_labels.insert(*n.label);
      }
      continue;
    }
    if (!n.label)
      return "inner node labelled with top";
    if (!n.rule || *n.rule >= d.rules().size())
      return "inner node without a rule";
    const AbaRule& r = d.rules()[*n.rule];
    if (r.head != *n.label)
      return "inner node label differs from its rule head";
    rules_seen.insert(*n.rule);
    if (r.body.empty()) {
      if (n.children.size() != 1 || t.nodes[n.children[0]].label || !t.nodes[n.children[0]].children.empty())
        return "fact node must have exactly one top child";
      continue;
    }
    std::vector<SentenceId> labels;
    for (std::size_t c : n.children) {
      if (!t.nodes[c].label)
        return "top child below a rule with a nonempty body";
      labels.push_back(*t.nodes[c].label);
    }
    std::sort(labels.begin(), labels.end());
    if (labels != r.body)
      return "children do not match the rule body";
  }
  for (std::size_t i = 1; i < parents.size(); ++i)
    if (parents[i] != 1)
      return "node " + std::to_string(i) + " does not have exactly one parent";
  if (!(leaf_labels == t.leaves))
    return "recorded leaves differ from leaf labels";
  if (!leaf_labels.is_subset_of(s))
    return "leaf assumptions are not within the given set";
  if (std::vector<std::size_t>(rules_seen.begin(), rules_seen.end()) != t.rules_used)
    return "recorded rules differ from the rules labelling nodes";
  return std::nullopt;
}

} // namespace nafaba
