#pragma once

// Translations between naf-head logic programs and ABA frameworks, and the
// maps between models and extensions across them.

#include "nafaba/aba.hpp"
#include "nafaba/lp.hpp"
#include "nafaba/names.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace nafaba {

enum class FormalismKind { lp, aba, lp_aba };

inline const char* to_string(FormalismKind k) {
  switch (k) {
  case FormalismKind::lp:
    return "lp";
  case FormalismKind::aba:
    return "aba";
  case FormalismKind::lp_aba:
    return "lp-aba";
  }
  return "?";
}

struct Provenance {
  enum class Kind { contrary_of, fresh_assumption_for, rep_image_of, naf_of };
  Kind kind;
  std::string origin;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline std::string to_string(const Provenance& p) {
  switch (p.kind) {
  case Provenance::Kind::contrary_of:
    return "contrary-of(" + p.origin + ")";
  case Provenance::Kind::fresh_assumption_for:
    return "fresh-assumption-for(" + p.origin + ")";
  case Provenance::Kind::rep_image_of:
    return "rep-image-of(" + p.origin + ")";
  case Provenance::Kind::naf_of:
    return "naf-of(" + p.origin + ")";
  }
  return "?";
}

struct TranslationRecord {
  FormalismKind source = FormalismKind::aba;
  FormalismKind target = FormalismKind::lp;
  /// Generated symbol -> where it came from.
  std::map<std::string, Provenance> generated;
  /// Assumptions of the source framework; extensions of the target are read
  /// back by intersecting with this set.
  std::vector<std::string> projection;
};

/// `generated TAB origin` lines in symbol order.
inline std::string provenance_lines(const TranslationRecord& rec) {
  std::string out;
  for (const auto& [sym, prov] : rec.generated)
    out += sym + "\t" + to_string(prov) + "\n";
  return out;
}

struct LpTranslation {
  LogicProgram program;
  TranslationRecord record;
};

struct AbaTranslation {
  AbaFramework framework;
  TranslationRecord record;
};

/// D_P: the rules of `p` read as ABA rules over HB ∪ not HB, with the naf
/// literals as assumptions and contrary(not x) = x.
inline AbaFramework lp_to_aba(const LogicProgram& p) {
  AbaBuilder b;
  for (const std::string& x : p.symbols().names()) {
    b.sentence(x);
    b.assumption(naf_name(x));
    b.contrary(naf_name(x), x);
  }
  for (const LpRule& r : p.rules()) {
    std::vector<std::string> body;
    for (const Literal& l : r.body)
      body.push_back(p.to_string(l));
    b.rule(p.to_string(r.head), std::move(body));
  }
  return b.build();
}

/// D_P with its record: every assumption `not x` is generated from x.
inline AbaTranslation lp_to_aba_translation(const LogicProgram& p) {
  AbaTranslation t{lp_to_aba(p), {}};
  t.record.source = FormalismKind::lp;
  t.record.target = FormalismKind::lp_aba;
  for (const std::string& x : p.symbols().names()) {
    t.record.generated.emplace(naf_name(x), Provenance{Provenance::Kind::naf_of, x});
    t.record.projection.push_back(naf_name(x));
  }
  return t;
}

/// Assumption set {not x | x ∉ i} in `dp`, which must be lp_to_aba(p).
inline AssumptionSet delta(const LogicProgram& p, const AbaFramework& dp, const Interpretation& i) {
  detail::require_interpretation(p, i);
  AssumptionSet s(dp.sentence_count());
  for (std::size_t k = 0; k < p.atom_count(); ++k)
    if (!i.contains(AtomId(k)))
      s.insert(dp.sentence(naf_name(p.name(AtomId(k)))));
  return s;
}

inline AssumptionSet delta(const LogicProgram& p, const Interpretation& i) { return delta(p, lp_to_aba(p), i); }

/// Inverse of delta: the atoms whose naf literal is not in `s`.
inline Interpretation delta_inverse(const LogicProgram& p, const AbaFramework& dp, const AssumptionSet& s) {
  detail::require_assumption_set(dp, s);
  Interpretation i(p.atom_count());
  for (std::size_t k = 0; k < p.atom_count(); ++k)
    if (!s.contains(dp.sentence(naf_name(p.name(AtomId(k))))))
      i.insert(AtomId(k));
  return i;
}

namespace detail {

inline void require_lp_aba(const AbaFramework& d) {
  if (auto f = lp_aba_violation(d))
    throw FragmentViolation("framework is not in the LP-ABA fragment: clause (" + std::to_string(f->clause) +
                            ") violated: " + f->detail);
  for (SentenceId a : d.assumption_list()) {
    const std::string& c = d.name(d.contrary(a));
    if (!is_atom_name(c))
      throw FragmentViolation("contrary '" + c + "' of " + d.name(a) + " is not an atom");
  }
}

inline NamedLiteral rep_unchecked(const AbaFramework& d, SentenceId p) {
  if (d.is_assumption(p))
    return named_neg(d.name(d.contrary(p)));
  return named_pos(d.name(p));
}

} // namespace detail

/// Assumptions become the naf of their contrary; contraries stay as atoms.
inline NamedLiteral rep_sentence(const AbaFramework& d, SentenceId p) {
  detail::require_lp_aba(d);
  return detail::rep_unchecked(d, p);
}

/// P_D = {rep(r) | r ∈ R} for an LP-ABA framework.
inline LpTranslation lp_aba_to_lp(const AbaFramework& d) {
  detail::require_lp_aba(d);
  std::vector<NamedRule> rules;
  for (const AbaRule& r : d.rules()) {
    NamedRule out{detail::rep_unchecked(d, r.head), {}};
    for (SentenceId b : r.body)
      out.body.push_back(detail::rep_unchecked(d, b));
    rules.push_back(std::move(out));
  }
  LpTranslation t{LogicProgram(rules), {}};
  t.record.source = FormalismKind::lp_aba;
  t.record.target = FormalismKind::lp;
  for (SentenceId a : d.assumption_list()) {
    t.record.generated.emplace(naf_name(d.name(d.contrary(a))), Provenance{Provenance::Kind::rep_image_of, d.name(a)});
    t.record.projection.push_back(d.name(a));
  }
  return t;
}

/// rep(D): every assumption a renamed to `not contrary(a)`. With
/// `rule_sentences_only`, assumption/contrary pairs that occur in no rule are
/// dropped, which is what a round trip through P_D can reproduce.
inline AbaFramework rep_framework(const AbaFramework& d, bool rule_sentences_only = false) {
  detail::require_lp_aba(d);
  SentenceSet mentioned(d.sentence_count());
  for (const AbaRule& r : d.rules()) {
    mentioned.insert(r.head);
    for (SentenceId b : r.body)
      mentioned.insert(b);
  }
  AbaBuilder b;
  for (SentenceId a : d.assumption_list()) {
    const SentenceId c = d.contrary(a);
    if (rule_sentences_only && !mentioned.contains(a) && !mentioned.contains(c))
      continue;
    const std::string renamed = naf_name(d.name(c));
    b.assumption(renamed);
    b.contrary(renamed, d.name(c));
  }
  for (const AbaRule& r : d.rules()) {
    std::vector<std::string> body;
    for (SentenceId s : r.body) {
      const NamedLiteral l = detail::rep_unchecked(d, s);
      body.push_back(l.negated ? naf_name(l.atom) : l.atom);
    }
    const NamedLiteral h = detail::rep_unchecked(d, r.head);
    b.rule(h.negated ? naf_name(h.atom) : h.atom, std::move(body));
  }
  return b.build();
}

namespace detail {

inline void require_atom_language(const AbaFramework& d) {
  for (const std::string& s : d.symbols().names())
    if (!is_atom_name(s) && !is_naf_name(s))
      throw FragmentViolation("language restricted to atoms and naf-negated atoms: sentence '" + s +
                              "' is neither");
}

class FreshNames {
public:
  explicit FreshNames(const std::vector<std::string>& taken) : taken_(taken.begin(), taken.end()) {}

  std::string make(const std::string& stem) {
    std::string candidate = stem;
    for (int k = 1; taken_.count(candidate); ++k)
      candidate = stem + "_" + std::to_string(k);
    taken_.insert(candidate);
    return candidate;
  }

private:
  std::set<std::string> taken_;
};

} // namespace detail

/// Normalizes any framework over atoms/naf-atoms into the LP-ABA fragment:
/// each assumption a gets a fresh contrary c_a with the bridge rule
/// c_a <- contrary(a), and every non-assumption p gets a fresh assumption a_p
/// whose contrary is p. Stable extensions correspond under projection onto A.
inline AbaTranslation aba_to_lp_aba(const AbaFramework& d) {
  detail::require_atom_language(d);
  detail::FreshNames fresh(d.symbols().names());
  AbaTranslation t;
  t.record.source = FormalismKind::aba;
  t.record.target = FormalismKind::lp_aba;

  AbaBuilder b;
  for (const std::string& s : d.symbols().names())
    b.sentence(s);
  for (const NamedAbaRule& r : d.named_rules())
    b.rule(r);
  for (SentenceId a : d.assumption_list()) {
    const std::string ca = fresh.make("c_" + atomize(d.name(a)));
    b.assumption(d.name(a));
    b.contrary(d.name(a), ca);
    b.rule(ca, {d.name(d.contrary(a))});
    t.record.generated.emplace(ca, Provenance{Provenance::Kind::contrary_of, d.name(a)});
    t.record.projection.push_back(d.name(a));
  }
  for (std::size_t i = 0; i < d.sentence_count(); ++i) {
    const SentenceId p(i);
    if (d.is_assumption(p))
      continue;
    const std::string ap = fresh.make("a_" + atomize(d.name(p)));
    b.assumption(ap);
    b.contrary(ap, d.name(p));
    t.record.generated.emplace(ap, Provenance{Provenance::Kind::fresh_assumption_for, d.name(p)});
  }
  t.framework = b.build();
  return t;
}

/// aba_to_lp_aba followed by lp_aba_to_lp, with both provenance maps merged.
inline LpTranslation aba_to_lp(const AbaFramework& d) {
  AbaTranslation normalized = aba_to_lp_aba(d);
  LpTranslation t = lp_aba_to_lp(normalized.framework);
  t.record.source = FormalismKind::aba;
  t.record.generated.insert(normalized.record.generated.begin(), normalized.record.generated.end());
  t.record.projection = normalized.record.projection;
  return t;
}

/// Th_D(s) minus the assumptions, read as atoms of `pd` = lp_aba_to_lp(d).
inline Interpretation extension_to_model(const AbaFramework& d, const LogicProgram& pd, const AssumptionSet& s) {
  const SentenceSet th = theory(d, s) - d.assumptions();
  Interpretation i(pd.atom_count());
  th.for_each([&](SentenceId x) {
    if (auto a = pd.symbols().find(d.name(x)))
      i.insert(*a);
    else
      throw DomainError("derived sentence " + d.name(x) + " has no atom in the associated program");
  });
  return i;
}

/// Assumptions whose contrary lies outside `i`; the delta correspondence read
/// back through rep.
inline AssumptionSet model_to_extension(const AbaFramework& d, const LogicProgram& pd, const Interpretation& i) {
  detail::require_interpretation(pd, i);
  AssumptionSet s(d.sentence_count());
  for (SentenceId a : d.assumption_list()) {
    const auto atom = pd.symbols().find(d.name(d.contrary(a)));
    if (!atom || !i.contains(*atom))
      s.insert(a);
  }
  return s;
}

} // namespace nafaba
