#pragma once

// Executable correspondence checks between programs and frameworks. Each
// check enumerates both sides by brute force and compares them through the
// relevant translation; a failure carries a witness naming the offending
// interpretation, extension, or rule.

#include "nafaba/aba.hpp"
#include "nafaba/generate.hpp"
#include "nafaba/io.hpp"
#include "nafaba/lp.hpp"
#include "nafaba/translate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace nafaba {

enum class TheoremId {
  lp_aba_stable,       // I stable in P iff delta(I) stable in D_P
  lp_aba_set_stable,   // same for set-stable semantics
  lp_round_trip,       // P = P_{D_P}
  aba_round_trip,      // D_{P_D} = rep(D)
  fragment_stable,     // LP-ABA D: stable extensions <-> stable models of P_D
  fragment_set_stable, // LP-ABA D: set-stable extensions <-> set-stable models of P_D
  projection,          // S stable in D' iff S ∩ A stable in D
  constraint_reading,  // adding a <- M keeps exactly the stable S with M ⊄ S or a ∈ S
};

inline const char* to_string(TheoremId t) {
  switch (t) {
  case TheoremId::lp_aba_stable:
    return "lp-aba-stable";
  case TheoremId::lp_aba_set_stable:
    return "lp-aba-set-stable";
  case TheoremId::lp_round_trip:
    return "lp-round-trip";
  case TheoremId::aba_round_trip:
    return "aba-round-trip";
  case TheoremId::fragment_stable:
    return "fragment-stable";
  case TheoremId::fragment_set_stable:
    return "fragment-set-stable";
  case TheoremId::projection:
    return "projection";
  case TheoremId::constraint_reading:
    return "constraint-reading";
  }
  return "?";
}

inline std::optional<TheoremId> theorem_from_string(std::string_view s) {
  for (TheoremId t : {TheoremId::lp_aba_stable, TheoremId::lp_aba_set_stable, TheoremId::lp_round_trip,
                      TheoremId::aba_round_trip, TheoremId::fragment_stable, TheoremId::fragment_set_stable,
                      TheoremId::projection, TheoremId::constraint_reading})
    if (s == to_string(t))
      return t;
  return std::nullopt;
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\t')
      c = ' ';
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  return s;
}

class VerificationReport {
public:
  static VerificationReport pass(TheoremId t, std::string instance) {
    return VerificationReport(t, std::move(instance), true, {});
  }
  static VerificationReport fail(TheoremId t, std::string instance, std::string witness) {
    assert(!witness.empty());
    if (witness.empty())
      witness = "(no witness)";
    return VerificationReport(t, std::move(instance), false, std::move(witness));
  }

  TheoremId theorem() const noexcept { return theorem_; }
  bool passed() const noexcept { return passed_; }
  /// Canonical serialization of the checked instance.
  const std::string& instance() const noexcept { return instance_; }
  std::uint64_t instance_hash() const noexcept { return fnv1a(instance_); }
  /// Empty exactly when the check passed.
  const std::string& witness() const noexcept { return witness_; }

  void set_witness(std::string w) {
    if (!passed_ && !w.empty())
      witness_ = std::move(w);
  }

  /// `theorem-id TAB status TAB instance-hash TAB witness-or-dash`
  std::string to_line() const {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(instance_hash()));
    return std::string(to_string(theorem_)) + "\t" + (passed_ ? "pass" : "fail") + "\t" + hash + "\t" +
           (passed_ ? std::string("-") : one_line(witness_));
  }

private:
  VerificationReport(TheoremId t, std::string instance, bool passed, std::string witness)
      : theorem_(t), passed_(passed), instance_(std::move(instance)), witness_(std::move(witness)) {}

  TheoremId theorem_;
  bool passed_;
  std::string instance_;
  std::string witness_;
};

namespace detail {

inline std::string lp_set(const LogicProgram& p, const Interpretation& i) { return format_set(atom_names(p, i)); }
inline std::string aba_set(const AbaFramework& d, const AssumptionSet& s) {
  return format_set(sentence_names(d, s));
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline VerificationReport check_lp_aba(const LogicProgram& p, bool set_stable, const EnumerationOptions& opts) {
  const TheoremId id = set_stable ? TheoremId::lp_aba_set_stable : TheoremId::lp_aba_stable;
  const char* sem = set_stable ? "set-stable" : "stable";
  const AbaFramework dp = lp_to_aba(p);
  const auto models = set_stable ? set_stable_models(p, opts) : stable_models(p, opts);
  const auto extensions = set_stable ? set_stable_extensions(dp, opts) : stable_extensions(dp, opts);

  std::vector<AssumptionSet> mapped;
  for (const auto& i : models)
    mapped.push_back(delta(p, dp, i));
  mapped = sorted_unique(std::move(mapped));

  const std::string inst = serialize_lp(p);
  if (mapped == extensions)
    return VerificationReport::pass(id, inst);

  for (const auto& s : mapped)
    if (!std::binary_search(extensions.begin(), extensions.end(), s)) {
      const Interpretation i = delta_inverse(p, dp, s);
      return VerificationReport::fail(id, inst,
                                      "I=" + lp_set(p, i) + ": " + sem + " in P=yes; delta(I)=" + aba_set(dp, s) +
                                          ": " + sem + " in D_P=no");
    }
  for (const auto& s : extensions)
    if (!std::binary_search(mapped.begin(), mapped.end(), s)) {
      const Interpretation i = delta_inverse(p, dp, s);
      return VerificationReport::fail(id, inst,
                                      "I=" + lp_set(p, i) + ": " + sem + " in P=no; delta(I)=" + aba_set(dp, s) +
                                          ": " + sem + " in D_P=yes");
    }
  return VerificationReport::fail(id, inst, "model and extension sets differ");
}

inline std::string rule_diff(const std::string& expected, const std::string& actual) {
  auto lines = [](const std::string& s) {
    std::set<std::string> out;
    std::size_t b = 0;
    for (std::size_t e; (e = s.find('\n', b)) != std::string::npos; b = e + 1)
      out.insert(s.substr(b, e - b));
    return out;
  };
  const auto x = lines(expected);
  const auto y = lines(actual);
  for (const auto& l : x)
    if (!y.count(l))
      return "missing: " + l;
  for (const auto& l : y)
    if (!x.count(l))
      return "unexpected: " + l;
  return "symbol tables differ";
}

} // namespace detail

/// I is stable in P iff delta(I) is a stable extension of D_P.
inline VerificationReport check_lp_aba_stable(const LogicProgram& p, const EnumerationOptions& opts = {}) {
  return detail::check_lp_aba(p, false, opts);
}

/// I is set-stable in P iff delta(I) is a set-stable extension of D_P.
inline VerificationReport check_lp_aba_set_stable(const LogicProgram& p, const EnumerationOptions& opts = {}) {
  return detail::check_lp_aba(p, true, opts);
}

/// P equals the program associated with D_P.
inline VerificationReport check_round_trips(const LogicProgram& p) {
  const LogicProgram back = lp_aba_to_lp(lp_to_aba(p)).program;
  const std::string inst = serialize_lp(p);
  if (back == p)
    return VerificationReport::pass(TheoremId::lp_round_trip, inst);
  return VerificationReport::fail(TheoremId::lp_round_trip, inst,
                                  "P_{D_P} " + detail::rule_diff(inst, serialize_lp(back)));
}

/// D_{P_D} equals rep(D) for an LP-ABA framework, where rep renames each
/// assumption a to `not contrary(a)` (taken from the provenance record).
/// Assumption/contrary pairs mentioned by no rule cannot survive the trip
/// through P_D and are left out of the comparison.
inline VerificationReport check_round_trips(const AbaFramework& d) {
  const LpTranslation t = lp_aba_to_lp(d);
  const std::string inst = serialize_aba(d);
  for (SentenceId a : d.assumption_list()) {
    auto it = t.record.generated.find(naf_name(d.name(d.contrary(a))));
    if (it == t.record.generated.end() || it->second != Provenance{Provenance::Kind::rep_image_of, d.name(a)})
      return VerificationReport::fail(TheoremId::aba_round_trip, inst,
                                      "provenance does not record the rep image of " + d.name(a));
  }
  const AbaFramework expected = rep_framework(d, true);
  const AbaFramework back = lp_to_aba(t.program);
  if (back == expected)
    return VerificationReport::pass(TheoremId::aba_round_trip, inst);
  return VerificationReport::fail(TheoremId::aba_round_trip, inst,
                                  "D_{P_D} vs rep(D) " + detail::rule_diff(serialize_aba(expected), serialize_aba(back)));
}

/// For an LP-ABA framework: stable extensions map onto the stable models of
/// P_D via S -> Th_D(S) \ A. For set-stable semantics the correspondence is
/// read through delta and rep, i.e. S <-> {contrary(a) | a ∉ S}.
inline VerificationReport check_lp_aba_fragment(const AbaFramework& d, bool set_stable,
                                                const EnumerationOptions& opts = {}) {
  const TheoremId id = set_stable ? TheoremId::fragment_set_stable : TheoremId::fragment_stable;
  const char* sem = set_stable ? "set-stable" : "stable";
  const LogicProgram pd = lp_aba_to_lp(d).program;
  const std::string inst = serialize_aba(d);
  const auto extensions = set_stable ? set_stable_extensions(d, opts) : stable_extensions(d, opts);
  const auto models = set_stable ? set_stable_models(pd, opts) : stable_models(pd, opts);

  if (!set_stable) {
    std::vector<Interpretation> image;
    for (const auto& s : extensions)
      image.push_back(extension_to_model(d, pd, s));
    for (std::size_t k = 0; k < extensions.size(); ++k)
      if (!std::binary_search(models.begin(), models.end(), image[k]))
        return VerificationReport::fail(id, inst,
                                        "S=" + detail::aba_set(d, extensions[k]) + " stable in D but Th(S)\\A=" +
                                            detail::lp_set(pd, image[k]) + " not stable in P_D");
    auto unique = detail::sorted_unique(image);
    if (unique.size() != image.size())
      return VerificationReport::fail(id, inst, "two stable extensions share Th(S)\\A");
    for (const auto& i : models)
      if (!std::binary_search(unique.begin(), unique.end(), i))
        return VerificationReport::fail(id, inst,
                                        "I=" + detail::lp_set(pd, i) + " stable in P_D but no stable S has Th(S)\\A=I");
    return VerificationReport::pass(id, inst);
  }

  std::vector<AssumptionSet> preimage;
  for (const auto& i : models)
    preimage.push_back(model_to_extension(d, pd, i));
  for (std::size_t k = 0; k < models.size(); ++k)
    if (!std::binary_search(extensions.begin(), extensions.end(), preimage[k]))
      return VerificationReport::fail(id, inst,
                                      "I=" + detail::lp_set(pd, models[k]) + ": " + sem + " in P_D=yes; S=" +
                                          detail::aba_set(d, preimage[k]) + ": " + sem + " in D=no");
  auto unique = detail::sorted_unique(preimage);
  if (unique.size() != preimage.size())
    return VerificationReport::fail(id, inst, "two set-stable models map to the same assumption set");
  for (const auto& s : extensions)
    if (!std::binary_search(unique.begin(), unique.end(), s))
      return VerificationReport::fail(id, inst,
                                      "S=" + detail::aba_set(d, s) + ": " + sem + " in D=yes; matching model " +
                                          sem + " in P_D=no");
  return VerificationReport::pass(id, inst);
}

/// {S ∩ A | S stable in aba_to_lp_aba(D)} equals the stable extensions of D.
inline VerificationReport check_projection(const AbaFramework& d, const EnumerationOptions& opts = {}) {
  const AbaTranslation t = aba_to_lp_aba(d);
  const std::string inst = serialize_aba(d);
  if (auto f = lp_aba_violation(t.framework))
    return VerificationReport::fail(TheoremId::projection, inst,
                                    "normalized framework violates LP-ABA clause (" + std::to_string(f->clause) +
                                        "): " + f->detail);
  const auto target = stable_extensions(t.framework, opts);
  const auto source = stable_extensions(d, opts);
  std::vector<AssumptionSet> projected;
  for (const auto& s : target) {
    AssumptionSet p = d.empty_set();
    for (const auto& a : t.record.projection)
      if (s.contains(t.framework.sentence(a)))
        p.insert(d.sentence(a));
    projected.push_back(std::move(p));
  }
  projected = detail::sorted_unique(std::move(projected));
  if (projected == source)
    return VerificationReport::pass(TheoremId::projection, inst);
  for (const auto& s : projected)
    if (!std::binary_search(source.begin(), source.end(), s))
      return VerificationReport::fail(TheoremId::projection, inst,
                                      "S=" + detail::aba_set(d, s) + " is a projected stable extension of D' but not stable in D");
  for (const auto& s : source)
    if (!std::binary_search(projected.begin(), projected.end(), s))
      return VerificationReport::fail(TheoremId::projection, inst,
                                      "S=" + detail::aba_set(d, s) + " is stable in D but no stable extension of D' projects to it");
  return VerificationReport::fail(TheoremId::projection, inst, "extension sets differ");
}

/// Adding a <- M (M ∪ {a} ⊆ A) keeps exactly the stable S with M ⊄ S or a ∈ S.
inline VerificationReport check_constraint_reading(const AbaFramework& d, const NamedAbaRule& r,
                                                   const EnumerationOptions& opts = {}) {
  auto is_assumption_name = [&](const std::string& n) {
    auto id = d.symbols().find(n);
    return id && d.is_assumption(*id);
  };
  if (!is_assumption_name(r.head) || !std::all_of(r.body.begin(), r.body.end(), is_assumption_name))
    throw DomainError("constraint rule must have an assumption head and an assumption body");

  const AbaFramework extended = to_builder(d).rule(r).build();
  const SentenceId head = d.sentence(r.head);
  AssumptionSet body = d.empty_set();
  for (const auto& b : r.body)
    body.insert(d.sentence(b));

  std::vector<AssumptionSet> expected;
  for (const auto& s : stable_extensions(d, opts))
    if (!body.is_subset_of(s) || s.contains(head))
      expected.push_back(s);
  const auto actual = stable_extensions(extended, opts);

  std::string rule_text = serialize_sentence(r.head) + " <-";
  for (std::size_t i = 0; i < r.body.size(); ++i)
    rule_text += (i ? ", " : " ") + serialize_sentence(r.body[i]);
  rule_text += ".";
  const std::string inst = serialize_aba(d) + "% added: " + rule_text + "\n";

  if (expected == actual)
    return VerificationReport::pass(TheoremId::constraint_reading, inst);
  for (const auto& s : actual)
    if (!std::binary_search(expected.begin(), expected.end(), s))
      return VerificationReport::fail(TheoremId::constraint_reading, inst,
                                      "rule " + rule_text + ": S=" + detail::aba_set(d, s) +
                                          " stable after adding the rule but not predicted");
  for (const auto& s : expected)
    if (!std::binary_search(actual.begin(), actual.end(), s))
      return VerificationReport::fail(TheoremId::constraint_reading, inst,
                                      "rule " + rule_text + ": S=" + detail::aba_set(d, s) +
                                          " predicted but not stable after adding the rule");
  return VerificationReport::fail(TheoremId::constraint_reading, inst, "extension sets differ");
}

// ---------------------------------------------------------------------------
// Witness shrinking

namespace detail {

inline std::vector<LogicProgram> lp_shrink_candidates(const LogicProgram& p) {
  std::vector<LogicProgram> out;
  const auto rules = p.named_rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto fewer = rules;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(fewer);
  }
  for (const std::string& atom : p.symbols().names()) {
    std::vector<NamedRule> kept;
    for (const auto& r : rules) {
      const bool mentions = r.head.atom == atom || std::any_of(r.body.begin(), r.body.end(),
                                                               [&](const NamedLiteral& l) { return l.atom == atom; });
      if (!mentions)
        kept.push_back(r);
    }
    if (kept.size() != rules.size() && !kept.empty())
      out.emplace_back(kept);
  }
  return out;
}

/// Drops `victim`, every assumption whose contrary is dropped, and every rule
/// mentioning a dropped sentence.
inline std::optional<AbaFramework> without_sentence(const AbaFramework& d, SentenceId victim) {
  SentenceSet gone(d.sentence_count());
  gone.insert(victim);
  for (bool grew = true; grew;) {
    grew = false;
    for (SentenceId a : d.assumption_list())
      if (!gone.contains(a) && gone.contains(d.contrary(a))) {
        gone.insert(a);
        grew = true;
      }
  }
  AbaBuilder b;
  for (std::size_t i = 0; i < d.sentence_count(); ++i)
    if (!gone.contains(SentenceId(i)))
      b.sentence(d.name(SentenceId(i)));
  for (SentenceId a : d.assumption_list())
    if (!gone.contains(a))
      b.assumption(d.name(a)).contrary(d.name(a), d.name(d.contrary(a)));
  for (const AbaRule& r : d.rules()) {
    if (gone.contains(r.head) || std::any_of(r.body.begin(), r.body.end(), [&](SentenceId s) { return gone.contains(s); }))
      continue;
    std::vector<std::string> body;
    for (SentenceId s : r.body)
      body.push_back(d.name(s));
    b.rule(d.name(r.head), std::move(body));
  }
  return b.build();
}

inline std::vector<AbaFramework> aba_shrink_candidates(const AbaFramework& d) {
  std::vector<AbaFramework> out;
  const auto rules = d.named_rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    AbaBuilder b;
    for (const std::string& s : d.symbols().names())
      b.sentence(s);
    for (SentenceId a : d.assumption_list())
      b.assumption(d.name(a)).contrary(d.name(a), d.name(d.contrary(a)));
    for (std::size_t j = 0; j < rules.size(); ++j)
      if (j != i)
        b.rule(rules[j]);
    out.push_back(b.build());
  }
  for (std::size_t i = 0; i < d.sentence_count(); ++i)
    if (auto smaller = without_sentence(d, SentenceId(i)))
      out.push_back(std::move(*smaller));
  return out;
}

} // namespace detail

/// Greedy single-element removal: keep any smaller candidate on which the
/// check still fails, until none does. Candidates the check rejects (by
/// throwing) are skipped.
template <class T, class Check, class Candidates>
std::pair<T, VerificationReport> shrink_witness(T instance, VerificationReport report, Check&& check,
                                                Candidates&& candidates) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : candidates(instance)) {
      std::optional<VerificationReport> r;
      try {
        r = check(c);
      } catch (const Error&) {
        continue;
      }
      if (!r->passed()) {
        instance = std::move(c);
        report = std::move(*r);
        progress = true;
        break;
      }
    }
  }
  return {std::move(instance), std::move(report)};
}

inline std::pair<LogicProgram, VerificationReport>
shrink_lp(const LogicProgram& p, VerificationReport report, const std::function<VerificationReport(const LogicProgram&)>& check) {
  return shrink_witness(p, std::move(report), check, detail::lp_shrink_candidates);
}

inline std::pair<AbaFramework, VerificationReport>
shrink_aba(const AbaFramework& d, VerificationReport report, const std::function<VerificationReport(const AbaFramework&)>& check) {
  return shrink_witness(d, std::move(report), check, detail::aba_shrink_candidates);
}

// ---------------------------------------------------------------------------
// Batches

/// Checks that apply to a program.
inline std::vector<TheoremId> lp_theorems() {
  return {TheoremId::lp_aba_stable, TheoremId::lp_aba_set_stable, TheoremId::lp_round_trip};
}

/// Checks that apply to a framework (those needing LP-ABA only when it is).
inline std::vector<TheoremId> aba_theorems(const AbaFramework& d) {
  std::vector<TheoremId> out;
  if (is_lp_aba(d))
    out = {TheoremId::aba_round_trip, TheoremId::fragment_stable, TheoremId::fragment_set_stable};
  out.push_back(TheoremId::projection);
  out.push_back(TheoremId::constraint_reading);
  return out;
}

inline VerificationReport run_lp_check(TheoremId t, const LogicProgram& p, const EnumerationOptions& opts) {
  switch (t) {
  case TheoremId::lp_aba_stable:
    return check_lp_aba_stable(p, opts);
  case TheoremId::lp_aba_set_stable:
    return check_lp_aba_set_stable(p, opts);
  case TheoremId::lp_round_trip:
    return check_round_trips(p);
  default:
    throw DomainError(std::string(to_string(t)) + " does not apply to logic programs");
  }
}

inline VerificationReport run_aba_check(TheoremId t, const AbaFramework& d, const EnumerationOptions& opts) {
  switch (t) {
  case TheoremId::aba_round_trip:
    return check_round_trips(d);
  case TheoremId::fragment_stable:
    return check_lp_aba_fragment(d, false, opts);
  case TheoremId::fragment_set_stable:
    return check_lp_aba_fragment(d, true, opts);
  case TheoremId::projection:
    return check_projection(d, opts);
  default:
    throw DomainError(std::string(to_string(t)) + " does not apply to a single framework");
  }
}

namespace detail {

inline std::string shrunk_witness(const VerificationReport& r, const std::string& shrunk) {
  return r.witness() + " | shrunk instance: " + one_line(shrunk);
}

} // namespace detail

/// Runs `t` on `p`, shrinking the instance on failure.
inline VerificationReport check_lp_shrinking(TheoremId t, const LogicProgram& p, const EnumerationOptions& opts) {
  VerificationReport r = run_lp_check(t, p, opts);
  if (r.passed())
    return r;
  auto [small, small_report] = shrink_lp(p, r, [&](const LogicProgram& q) { return run_lp_check(t, q, opts); });
  r.set_witness(detail::shrunk_witness(small_report, serialize_lp(small)));
  return r;
}

inline VerificationReport check_aba_shrinking(TheoremId t, const AbaFramework& d, const EnumerationOptions& opts) {
  VerificationReport r = run_aba_check(t, d, opts);
  if (r.passed())
    return r;
  auto [small, small_report] = shrink_aba(d, r, [&](const AbaFramework& e) { return run_aba_check(t, e, opts); });
  r.set_witness(detail::shrunk_witness(small_report, serialize_aba(small)));
  return r;
}

inline VerificationReport check_constraint_shrinking(const AbaFramework& d, const NamedAbaRule& rule,
                                                     const EnumerationOptions& opts) {
  VerificationReport r = check_constraint_reading(d, rule, opts);
  if (r.passed())
    return r;
  auto [small, small_report] =
      shrink_aba(d, r, [&](const AbaFramework& e) { return check_constraint_reading(e, rule, opts); });
  r.set_witness(detail::shrunk_witness(small_report, serialize_aba(small)));
  return r;
}

/// Every applicable check on a program, in theorem order.
inline std::vector<VerificationReport> verify_lp(const LogicProgram& p, const EnumerationOptions& opts = {}) {
  std::vector<VerificationReport> out;
  for (TheoremId t : lp_theorems())
    out.push_back(check_lp_shrinking(t, p, opts));
  return out;
}

/// Every applicable check on a framework. The constraint reading is checked
/// for each rule whose head and body are assumptions, against the framework
/// without that rule. The projection needs an atom/naf-atom language.
inline std::vector<VerificationReport> verify_aba(const AbaFramework& d, const EnumerationOptions& opts = {}) {
  std::vector<VerificationReport> out;
  for (TheoremId t : aba_theorems(d)) {
    if (t == TheoremId::constraint_reading) {
      const auto rules = d.named_rules();
      for (std::size_t i = 0; i < rules.size(); ++i) {
        const AbaRule& r = d.rules()[i];
        if (!d.is_assumption(r.head) ||
            !std::all_of(r.body.begin(), r.body.end(), [&](SentenceId s) { return d.is_assumption(s); }))
          continue;
        AbaBuilder b;
        for (const std::string& s : d.symbols().names())
          b.sentence(s);
        for (SentenceId a : d.assumption_list())
          b.assumption(d.name(a)).contrary(d.name(a), d.name(d.contrary(a)));
        for (std::size_t j = 0; j < rules.size(); ++j)
          if (j != i)
            b.rule(rules[j]);
        out.push_back(check_constraint_shrinking(b.build(), rules[i], opts));
      }
      continue;
    }
    if (t == TheoremId::projection) {
      try {
        detail::require_atom_language(d);
      } catch (const FragmentViolation&) {
        continue;
      }
    }
    out.push_back(check_aba_shrinking(t, d, opts));
  }
  return out;
}

struct FuzzOptions {
  InstanceGenConfig generator;
  std::size_t count = 0;
  EnumerationOptions enumeration;
  /// Instances checked concurrently; reports stay in instance order.
  unsigned jobs = 1;
};

/// Checks every applicable theorem on `count` seeded instances. Instance i is
/// generated from instance_seed(seed, i). Frameworks are additionally paired
/// with a random rule a <- M for the constraint reading.
inline std::vector<VerificationReport> run_fuzz(const FuzzOptions& opts) {
  std::vector<std::vector<VerificationReport>> per_instance(opts.count);
  auto work = [&](std::size_t i) {
    InstanceGenConfig cfg = opts.generator;
    cfg.seed = instance_seed(opts.generator.seed, i);
    auto& out = per_instance[i];
    if (is_lp_fragment(cfg.fragment)) {
      const auto p = std::get<LogicProgram>(generate_instance(cfg));
      out = verify_lp(p, opts.enumeration);
      return;
    }
    const auto d = std::get<AbaFramework>(generate_instance(cfg));
    for (TheoremId t : aba_theorems(d))
      if (t != TheoremId::constraint_reading)
        out.push_back(check_aba_shrinking(t, d, opts.enumeration));
    const ConstraintInstance ci = generate_constraint_instance(cfg);
    out.push_back(check_constraint_shrinking(ci.framework, ci.rule, opts.enumeration));
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, opts.count));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < opts.count; ++i)
      work(i);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        for (std::size_t i = j; i < opts.count; i += jobs)
          work(i);
      });
  }
  std::vector<VerificationReport> out;
  for (auto& v : per_instance)
    out.insert(out.end(), v.begin(), v.end());
  return out;
}

} // namespace nafaba
