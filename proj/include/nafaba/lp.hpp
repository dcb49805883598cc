#pragma once

// Logic programs with negation as failure in rule heads: reducts, least
// models, stable and set-stable model semantics.

#include "nafaba/enumerate.hpp"
#include "nafaba/error.hpp"
#include "nafaba/forward_chain.hpp"
#include "nafaba/id_set.hpp"
#include "nafaba/symbol_table.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nafaba {

struct AtomTag;
using AtomId = StrongId<AtomTag>;

/// An atom or its naf-negation. Double negation is not representable.
struct Literal {
  AtomId atom;
  bool negated = false;

  /// Positive literals sort before naf literals, then by atom.
  friend constexpr auto operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.negated <=> b.negated; c != 0)
      return c;
    return a.atom <=> b.atom;
  }
  friend constexpr bool operator==(const Literal&, const Literal&) = default;
};

constexpr Literal pos(AtomId a) { return {a, false}; }
constexpr Literal neg(AtomId a) { return {a, true}; }

/// Literal universe layout: atom i occupies indices 2i (positive) and 2i+1 (naf).
constexpr std::size_t id_index(Literal l) noexcept { return 2 * l.atom.value + (l.negated ? 1 : 0); }
constexpr void id_from_index(std::size_t i, Literal& out) noexcept {
  out = Literal{AtomId(i / 2), (i % 2) == 1};
}

using Interpretation = IdSet<AtomId>;
using LiteralSet = IdSet<Literal>;

/// Literal addressed by name; used to build programs before interning.
struct NamedLiteral {
  std::string atom;
  bool negated = false;

  friend auto operator<=>(const NamedLiteral&, const NamedLiteral&) = default;
};

inline NamedLiteral named_pos(std::string atom) { return {std::move(atom), false}; }
inline NamedLiteral named_neg(std::string atom) { return {std::move(atom), true}; }

struct NamedRule {
  NamedLiteral head;
  std::vector<NamedLiteral> body;
};

struct LpRule {
  Literal head;
  /// Sorted, duplicate-free.
  std::vector<Literal> body;

  std::optional<AtomId> head_pos() const {
    return head.negated ? std::nullopt : std::optional<AtomId>(head.atom);
  }
  std::optional<AtomId> head_neg() const {
    return head.negated ? std::optional<AtomId>(head.atom) : std::nullopt;
  }
  std::vector<AtomId> body_pos() const {
    std::vector<AtomId> out;
    for (const Literal& l : body)
      if (!l.negated)
        out.push_back(l.atom);
    return out;
  }
  std::vector<AtomId> body_neg() const {
    std::vector<AtomId> out;
    for (const Literal& l : body)
      if (l.negated)
        out.push_back(l.atom);
    return out;
  }

  friend auto operator<=>(const LpRule&, const LpRule&) = default;
  friend bool operator==(const LpRule&, const LpRule&) = default;
};

/// Rule of a positive program. A missing head makes it a denial constraint.
struct ReductRule {
  std::optional<AtomId> head;
  std::vector<AtomId> body;

  friend auto operator<=>(const ReductRule&, const ReductRule&) = default;
  friend bool operator==(const ReductRule&, const ReductRule&) = default;
};

namespace detail {

inline void validate_atom_name(const std::string& name) {
  if (name.empty())
    throw ConstructionError("atom name must be nonempty");
  for (char c : name)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw ConstructionError("atom name '" + name + "' contains whitespace");
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace detail

/// A finite set of rules over its own Herbrand base. Atom ids follow name
/// order; rules and bodies are kept sorted and duplicate-free, so two
/// programs with the same rule set compare equal.
class LogicProgram {
public:
  LogicProgram() = default;

  explicit LogicProgram(const std::vector<NamedRule>& rules) {
    std::vector<std::string> names;
    for (const NamedRule& r : rules) {
      detail::validate_atom_name(r.head.atom);
      names.push_back(r.head.atom);
      for (const NamedLiteral& l : r.body) {
        detail::validate_atom_name(l.atom);
        names.push_back(l.atom);
      }
    }
    symbols_ = SymbolTable<AtomId>(std::move(names));
    rules_.reserve(rules.size());
    for (const NamedRule& r : rules) {
      LpRule out{intern(r.head), {}};
      out.body.reserve(r.body.size());
      for (const NamedLiteral& l : r.body)
        out.body.push_back(intern(l));
      detail::sort_unique(out.body);
      rules_.push_back(std::move(out));
    }
    detail::sort_unique(rules_);
  }

  LogicProgram(std::initializer_list<NamedRule> rules) : LogicProgram(std::vector<NamedRule>(rules)) {}

  const SymbolTable<AtomId>& symbols() const noexcept { return symbols_; }
  std::size_t atom_count() const noexcept { return symbols_.size(); }
  const std::vector<LpRule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }

  const std::string& name(AtomId a) const { return symbols_.name(a); }
  AtomId atom(std::string_view name) const { return symbols_.at(name); }

  Literal literal(const NamedLiteral& l) const { return {atom(l.atom), l.negated}; }
  NamedLiteral named(Literal l) const { return {name(l.atom), l.negated}; }

  std::string to_string(Literal l) const { return l.negated ? "not " + name(l.atom) : name(l.atom); }

  Interpretation interpretation(std::initializer_list<std::string_view> atoms) const {
    Interpretation i(atom_count());
    for (auto a : atoms)
      i.insert(atom(a));
    return i;
  }

  LiteralSet literal_set(std::initializer_list<NamedLiteral> lits) const {
    LiteralSet s(2 * atom_count());
    for (const auto& l : lits)
      s.insert(literal(l));
    return s;
  }

  std::vector<NamedRule> named_rules() const {
    std::vector<NamedRule> out;
    out.reserve(rules_.size());
    for (const LpRule& r : rules_) {
      NamedRule n{named(r.head), {}};
      for (const Literal& l : r.body)
        n.body.push_back(named(l));
      out.push_back(std::move(n));
    }
    return out;
  }

  friend bool operator==(const LogicProgram& a, const LogicProgram& b) {
    return a.symbols_ == b.symbols_ && a.rules_ == b.rules_;
  }

private:
  Literal intern(const NamedLiteral& l) const { return {symbols_.at(l.atom), l.negated}; }

  SymbolTable<AtomId> symbols_;
  std::vector<LpRule> rules_;
};

namespace detail {

inline void require_interpretation(const LogicProgram& p, const Interpretation& i) {
  if (i.universe() != p.atom_count())
    throw DomainError("interpretation is not over the Herbrand base of the program (universe " +
                      std::to_string(i.universe()) + ", expected " + std::to_string(p.atom_count()) + ")");
}

inline void require_literal_set(const LogicProgram& p, const LiteralSet& s) {
  if (s.universe() != 2 * p.atom_count())
    throw DomainError("literal set is not over HB and its naf-negation");
}

} // namespace detail

/// All atoms of the program (atoms occurring only under naf included).
inline Interpretation herbrand_base(const LogicProgram& p) {
  return Interpretation(p.atom_count()).complement();
}

/// Positive program obtained from `p` relative to `i`. Rules with a naf head
/// that survive become headless constraints. Result is sorted and unique.
inline std::vector<ReductRule> reduct(const LogicProgram& p, const Interpretation& i) {
  detail::require_interpretation(p, i);
  std::vector<ReductRule> out;
  for (const LpRule& r : p.rules()) {
    bool blocked = false;
    std::vector<AtomId> body;
    for (const Literal& l : r.body) {
      if (l.negated) {
        if (i.contains(l.atom)) {
          blocked = true;
          break;
        }
      } else {
        body.push_back(l.atom);
      }
    }
    if (blocked)
      continue;
    if (r.head.negated && !i.contains(r.head.atom))
      continue;
    out.push_back(ReductRule{r.head_pos(), std::move(body)});
  }
  detail::sort_unique(out);
  return out;
}

/// Least model of a positive program, or nullopt when a constraint fires in it.
inline std::optional<Interpretation> least_model(std::span<const ReductRule> rules, std::size_t atom_count) {
  for (const ReductRule& r : rules) {
    if (r.head && id_index(*r.head) >= atom_count)
      throw DomainError("reduct rule head outside the atom universe");
    for (AtomId a : r.body)
      if (id_index(a) >= atom_count)
        throw DomainError("reduct rule body outside the atom universe");
  }
  auto res = forward_chain<AtomId>(
      atom_count, rules, Interpretation(atom_count), [](const ReductRule& r) { return r.head; },
      [](const ReductRule& r) -> const std::vector<AtomId>& { return r.body; });
  if (res.constraint_fired)
    return std::nullopt;
  return std::move(res.derived);
}

inline bool is_stable_model(const LogicProgram& p, const Interpretation& i) {
  const auto rules = reduct(p, i);
  const auto m = least_model(rules, p.atom_count());
  return m && *m == i;
}

namespace detail {

template <class Pred>
std::vector<Interpretation> enumerate_interpretations(const LogicProgram& p, const EnumerationOptions& opts,
                                                      Pred&& pred) {
  const std::size_t n = p.atom_count();
  auto masks = enumerate_subsets(n, opts, [&](std::uint64_t m) { return pred(Interpretation::from_mask(n, m)); });
  std::vector<Interpretation> out;
  out.reserve(masks.size());
  for (auto m : masks)
    out.push_back(Interpretation::from_mask(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Every stable model, in canonical order.
inline std::vector<Interpretation> stable_models(const LogicProgram& p, const EnumerationOptions& opts = {}) {
  return detail::enumerate_interpretations(p, opts, [&](const Interpretation& i) { return is_stable_model(p, i); });
}

struct ClosureResult {
  LiteralSet literals;
  /// One-step expansions that changed the set; never exceeds 2*|HB|.
  std::size_t rounds = 0;
};

/// One expansion step: `s` plus heads of rules whose whole body lies in `s`.
inline LiteralSet supp(const LogicProgram& p, const LiteralSet& s) {
  detail::require_literal_set(p, s);
  LiteralSet out = s;
  for (const LpRule& r : p.rules()) {
    if (std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) { return s.contains(l); }))
      out.insert(r.head);
  }
  return out;
}

inline ClosureResult closure_lp_counted(const LogicProgram& p, const LiteralSet& s) {
  detail::require_literal_set(p, s);
  auto res = forward_chain<Literal>(
      2 * p.atom_count(), p.rules(), s, [](const LpRule& r) { return std::optional<Literal>(r.head); },
      [](const LpRule& r) -> const std::vector<Literal>& { return r.body; });
  return {std::move(res.derived), res.rounds};
}

/// Least fixpoint of `supp` containing `s`.
inline LiteralSet closure_lp(const LogicProgram& p, const LiteralSet& s) {
  return closure_lp_counted(p, s).literals;
}

/// Contraposition rules `a <- b` for every `not b` reachable from `not a`
/// (a != b). They depend on the program only.
inline std::vector<ReductRule> contraposition_rules(const LogicProgram& p) {
  const std::size_t n = p.atom_count();
  std::vector<ReductRule> out;
  for (std::size_t ai = 0; ai < n; ++ai) {
    const AtomId a(ai);
    LiteralSet start(2 * n);
    start.insert(neg(a));
    const LiteralSet cl = closure_lp(p, start);
    for (std::size_t bi = 0; bi < n; ++bi) {
      const AtomId b(bi);
      if (b != a && cl.contains(neg(b)))
        out.push_back(ReductRule{a, {b}});
    }
  }
  detail::sort_unique(out);
  return out;
}

namespace detail {

inline std::vector<ReductRule> merge_rules(std::vector<ReductRule> a, const std::vector<ReductRule>& b) {
  a.insert(a.end(), b.begin(), b.end());
  sort_unique(a);
  return a;
}

} // namespace detail

/// Reduct extended by the contraposition rules.
inline std::vector<ReductRule> set_stable_reduct(const LogicProgram& p, const Interpretation& i) {
  return detail::merge_rules(reduct(p, i), contraposition_rules(p));
}

inline bool is_set_stable_model(const LogicProgram& p, const Interpretation& i) {
  const auto rules = set_stable_reduct(p, i);
  const auto m = least_model(rules, p.atom_count());
  return m && *m == i;
}

/// Every set-stable model, in canonical order.
inline std::vector<Interpretation> set_stable_models(const LogicProgram& p, const EnumerationOptions& opts = {}) {
  check_enumeration_bound(p.atom_count(), opts);
  const auto contra = contraposition_rules(p);
  return detail::enumerate_interpretations(p, opts, [&](const Interpretation& i) {
    const auto rules = detail::merge_rules(reduct(p, i), contra);
    const auto m = least_model(rules, p.atom_count());
    return m && *m == i;
  });
}

/// Every rule has exactly one body literal and it is naf-negated.
inline bool is_bipolar_lp(const LogicProgram& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const LpRule& r) { return r.body.size() == 1 && r.body.front().negated; });
}

} // namespace nafaba
