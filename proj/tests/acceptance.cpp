// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace nafaba;
using oracle::Family;
using oracle::Names;
using support::family;
using support::names;

namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kFuzzSeconds = 300.0;
constexpr double kScalingSeconds = 1.0;
constexpr std::size_t kFuzzCount = 500;
constexpr std::size_t kRoundTripCount = 1000;
constexpr std::size_t kChainLength = 1000;

class Gate {
public:
  void line(const std::string& id, bool ok, const std::string& text) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << text << "\n";
    if (!ok)
      ++failed_;
  }
  void note(const std::string& text) { std::cout << "      " << text << "\n"; }
  int failed() const { return failed_; }

private:
  int failed_ = 0;
};

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string secs(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

/// Collects failed facts of a criterion.
struct Facts {
  std::vector<std::string> failed;
  std::size_t total = 0;
  void expect(bool ok, const std::string& what) {
    ++total;
    if (!ok)
      failed.push_back(what);
  }
};

Names lits(const LogicProgram& p, const LiteralSet& s) { return names(p, s); }

void golden_corpus(Gate& gate) {
  Stopwatch sw;
  Facts f;
  {
    const auto p = support::golden_lp("running.lp");
    f.expect(family(p, stable_models(p)) == Family{{"p", "s"}}, "running example: stable models {{p,s}}");
    f.expect(support::reduct_text(p, reduct(p, p.interpretation({"p", "s"}))) == std::set<std::string>{"p <-", "s <-"},
             "running example: reduct w.r.t. {p,s}");
    f.expect(support::reduct_text(p, reduct(p, p.interpretation({"q", "s"}))) ==
                 std::set<std::string>{"q <-", "s <-", " <- s"},
             "running example: reduct w.r.t. {q,s}");
  }
  {
    const auto d = support::golden_aba("nonflat.aba");
    f.expect(family(d, stable_extensions(d)) == Family{{"a", "b"}}, "non-flat framework: stable {a,b}");
    f.expect(family(d, set_stable_extensions(d)) == Family{{"c"}, {"a", "b"}}, "non-flat framework: set-stable {c},{a,b}");
  }
  {
    const auto d = support::golden_aba("lp_aba.aba");
    const auto pd = lp_aba_to_lp(d).program;
    f.expect(family(d, stable_extensions(d)) == Family{{"q"}}, "LP-ABA example: stable extension {q}");
    f.expect(family(pd, stable_models(pd)) == Family{{"contrary_p", "contrary_s"}},
             "LP-ABA example: stable model {contrary_p, contrary_s}");
  }
  {
    const auto d = support::golden_aba("composed.aba");
    const auto p = aba_to_lp(d).program;
    f.expect(family(p, stable_models(p)) == Family{{"p", "c_a", "c_b"}}, "composed example: stable model {p,c_a,c_b}");
    const auto t = aba_to_lp_aba(d);
    Family projected;
    for (const auto& s : stable_extensions(t.framework)) {
      Names n;
      for (const auto& a : t.record.projection)
        if (s.contains(t.framework.sentence(a)))
          n.insert(a);
      projected.insert(n);
    }
    f.expect(projected == Family{{"c"}}, "composed example: projected extension {c}");
    f.expect(family(d, stable_extensions(d)) == Family{{"c"}}, "composed example: stable extension {c}");
  }
  {
    const auto p = support::golden_lp("bipolar.lp");
    f.expect(stable_models(p).empty(), "bipolar example: no stable model");
    f.expect(family(p, set_stable_models(p)) == Family{{"p", "q"}}, "bipolar example: set-stable {p,q}");
    f.expect(lits(p, closure_lp(p, p.literal_set({named_neg("p")}))) == Names{"not p", "p", "not q"},
             "bipolar example: cl({not p})");
    f.expect(lits(p, closure_lp(p, p.literal_set({named_neg("q")}))) == Names{"not q"}, "bipolar example: cl({not q})");
    f.expect(lits(p, closure_lp(p, p.literal_set({named_neg("s")}))) == Names{"not s", "q"},
             "bipolar example: cl({not s})");
    f.expect(support::reduct_text(p, contraposition_rules(p)) == std::set<std::string>{"p <- q"},
             "bipolar example: contraposition rules {p <- q}");
  }
  {
    const auto p1 = support::golden_lp("contraposition_p1.lp");
    const auto p2 = support::golden_lp("contraposition_p2.lp");
    f.expect(family(p1, set_stable_models(p1)) == Family{{"p", "q"}}, "P1: set-stable {p,q}");
    f.expect(set_stable_models(p2).empty(), "P2: no set-stable model");
    const auto d1 = support::golden_aba("contraposition_d1.aba");
    const auto d2 = support::golden_aba("contraposition_d2.aba");
    f.expect(family(d1, set_stable_extensions(d1)) == Family{{}}, "D1: empty set set-stable");
    f.expect(set_stable_extensions(d2).empty(), "D2: no set-stable extension");
  }
  {
    const auto d = support::golden_aba("constraint.aba");
    AbaBuilder without;
    for (const auto a : d.assumption_list())
      without.assumption(d.name(a)).contrary(d.name(a), d.name(d.contrary(a)));
    for (const auto& r : d.named_rules())
      if (!(r.head == "a" && r.body == std::vector<std::string>{"d"}))
        without.rule(r);
    const auto before = without.build();
    f.expect(family(before, stable_extensions(before)) == Family{{"a", "b", "d"}, {"b", "c", "d"}},
             "constraint example: two stable extensions without a <- d");
    f.expect(family(d, stable_extensions(d)) == Family{{"a", "b", "d"}}, "constraint example: {{a,b,d}} with a <- d");
  }
  const double t = sw.seconds();
  gate.line("AC1", f.failed.empty() && t < kGoldenSeconds,
            "golden corpus: " + std::to_string(f.total - f.failed.size()) + "/" + std::to_string(f.total) +
                " facts exact, " + secs(t) + " (limit " + secs(kGoldenSeconds) + ")");
  for (const auto& m : f.failed)
    gate.note("failed: " + m);
}

struct Tally {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> witnesses;
  void add(const VerificationReport& r) {
    ++total;
    if (r.passed())
      ++passed;
    else
      witnesses.push_back(r.witness());
  }
  bool ok() const { return passed == total; }
  std::string summary(TheoremId t) const {
    return std::string(to_string(t)) + " " + std::to_string(passed) + "/" + std::to_string(total);
  }
};

void report(Gate& gate, const std::string& id, const std::string& what,
            const std::vector<std::pair<TheoremId, Tally>>& parts) {
  bool ok = true;
  std::string text = what + ":";
  for (const auto& [t, tally] : parts) {
    ok = ok && tally.ok();
    text += " " + tally.summary(t);
  }
  gate.line(id, ok, text);
  for (const auto& [t, tally] : parts)
    for (const auto& w : tally.witnesses)
      gate.note(std::string(to_string(t)) + ": " + w);
}

struct Corpus {
  std::vector<LogicProgram> lps;
  std::vector<LogicProgram> bipolar_lps;
  std::vector<AbaFramework> lp_abas;
  std::vector<AbaFramework> abas;
  std::vector<ConstraintInstance> constraints;
};

Corpus fuzz_corpus() {
  Corpus c;
  for (std::size_t i = 0; i < kFuzzCount; ++i) {
    InstanceGenConfig g;
    g.seed = instance_seed(1, i);
    g.fragment = Fragment::general_lp;
    g.max_atoms = 7;
    g.max_rules = 10;
    c.lps.push_back(std::get<LogicProgram>(generate_instance(g)));
    g.seed = instance_seed(2, i);
    g.fragment = Fragment::lp_aba;
    c.lp_abas.push_back(std::get<AbaFramework>(generate_instance(g)));
    g.seed = instance_seed(3, i);
    g.fragment = Fragment::general_aba;
    g.max_atoms = 6;
    c.abas.push_back(std::get<AbaFramework>(generate_instance(g)));
    g.seed = instance_seed(4, i);
    c.constraints.push_back(generate_constraint_instance(g));
    g.seed = instance_seed(5, i);
    g.fragment = Fragment::bipolar_lp;
    g.max_atoms = 7;
    c.bipolar_lps.push_back(std::get<LogicProgram>(generate_instance(g)));
  }
  return c;
}

void theorem_fuzzing(Gate& gate, const Corpus& c) {
  Stopwatch sw;
  const EnumerationOptions opts;
  Tally stable, set_stable, round_trip, frag_stable, frag_set_stable, projection, constraint, bipolar;
  for (const auto& p : c.lps) {
    stable.add(check_lp_shrinking(TheoremId::lp_aba_stable, p, opts));
    set_stable.add(check_lp_shrinking(TheoremId::lp_aba_set_stable, p, opts));
  }
  for (const auto& d : c.lp_abas) {
    round_trip.add(check_aba_shrinking(TheoremId::aba_round_trip, d, opts));
    frag_stable.add(check_aba_shrinking(TheoremId::fragment_stable, d, opts));
    frag_set_stable.add(check_aba_shrinking(TheoremId::fragment_set_stable, d, opts));
  }
  for (const auto& d : c.abas)
    projection.add(check_aba_shrinking(TheoremId::projection, d, opts));
  for (const auto& ci : c.constraints)
    constraint.add(check_constraint_shrinking(ci.framework, ci.rule, opts));
  for (const auto& p : c.bipolar_lps)
    bipolar.add(check_lp_shrinking(TheoremId::lp_aba_set_stable, p, opts));
  const double t = sw.seconds();

  report(gate, "AC2a", "500 general LPs (seed 1)",
         {{TheoremId::lp_aba_stable, stable}, {TheoremId::lp_aba_set_stable, set_stable}});
  report(gate, "AC2b", "500 LP-ABA frameworks (seed 2)",
         {{TheoremId::aba_round_trip, round_trip},
          {TheoremId::fragment_stable, frag_stable},
          {TheoremId::fragment_set_stable, frag_set_stable}});
  report(gate, "AC2c", "500 general frameworks (seed 3)", {{TheoremId::projection, projection}});
  report(gate, "AC2d", "500 constraint pairs (seed 4)", {{TheoremId::constraint_reading, constraint}});
  gate.line("AC2e", t < kFuzzSeconds, "theorem fuzzing time " + secs(t) + " (limit " + secs(kFuzzSeconds) + ")");
  std::cout << "info  AC2   supplementary: 500 bipolar LPs (seed 5): " << bipolar.summary(TheoremId::lp_aba_set_stable)
            << "\n";
}

template <class T>
bool included(const std::vector<T>& small, const std::vector<T>& large) {
  return std::all_of(small.begin(), small.end(),
                     [&](const T& s) { return std::find(large.begin(), large.end(), s) != large.end(); });
}

void inclusions(Gate& gate, const Corpus& c) {
  std::size_t lp_total = 0, lp_ok = 0, aba_total = 0, aba_ok = 0, flat_total = 0, flat_ok = 0;
  std::vector<std::string> bad;
  auto lp = [&](const LogicProgram& p) {
    ++lp_total;
    if (included(stable_models(p), set_stable_models(p)))
      ++lp_ok;
    else
      bad.push_back("LP: " + one_line(serialize_lp(p)));
  };
  auto aba = [&](const AbaFramework& d) {
    const auto st = stable_extensions(d);
    const auto ss = set_stable_extensions(d);
    ++aba_total;
    if (included(st, ss))
      ++aba_ok;
    else
      bad.push_back("ABA: " + one_line(serialize_aba(d)));
    if (is_flat(d)) {
      ++flat_total;
      if (st == ss)
        ++flat_ok;
      else
        bad.push_back("flat ABA: " + one_line(serialize_aba(d)));
    }
  };
  for (const auto& p : c.lps)
    lp(p);
  for (const auto& p : c.bipolar_lps)
    lp(p);
  for (const auto& d : c.lp_abas)
    aba(d);
  for (const auto& d : c.abas)
    aba(d);
  for (std::size_t i = 0; i < kFuzzCount; ++i) {
    InstanceGenConfig g;
    g.seed = instance_seed(6, i);
    g.fragment = Fragment::general_aba;
    g.max_atoms = 6;
    g.naf_head_probability = 0.0;
    aba(std::get<AbaFramework>(generate_instance(g)));
  }
  gate.line("AC3", bad.empty() && flat_total > 0,
            "inclusions: LP stable in set-stable " + std::to_string(lp_ok) + "/" + std::to_string(lp_total) +
                ", ABA stable in set-stable " + std::to_string(aba_ok) + "/" + std::to_string(aba_total) +
                ", flat equality " + std::to_string(flat_ok) + "/" + std::to_string(flat_total));
  for (const auto& b : bad)
    gate.note(b);
}

const std::vector<std::string> kLpPool = {
    "p :- not q.", "q :- not p.",       "r :- p.", "s :- r, not t.",  "t :- not s, q.", "not p :- r.",
    "not s :- s, not p.", "p.",         "not q :- not r.", "r :- s, t.", "t :- not t.", "not t :- p, q."};

struct AbaSkeleton {
  std::vector<std::pair<std::string, std::string>> contraries;
};

const std::vector<NamedAbaRule> kAbaPool = {{"x", {"b"}}, {"y", {"a"}}, {"z", {"a", "b"}}, {"a", {"z"}},
                                            {"x", {"z"}}, {"b", {}},    {"y", {"x", "a"}}, {"z", {"y"}}};

void oracle_equivalence(Gate& gate) {
  std::size_t programs = 0, interpretations = 0, frameworks = 0, sets = 0;
  std::vector<std::string> bad;
  const std::size_t n = kLpPool.size();
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) > 6)
      continue;
    std::string text;
    for (std::size_t k = 0; k < n; ++k)
      if (m >> k & 1U)
        text += kLpPool[k] + "\n";
    const auto p = parse_lp(text);
    ++programs;
    const std::size_t atoms = p.atom_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms); ++mask) {
      const auto i = Interpretation::from_mask(atoms, mask);
      ++interpretations;
      if (is_stable_model(p, i) != oracle::is_stable(p, names(p, i)))
        bad.push_back("LP " + one_line(text) + " I=" + format_set(atom_names(p, i)));
    }
  }
  const std::vector<AbaSkeleton> skeletons = {{{{"a", "x"}, {"b", "y"}}}, {{{"a", "x"}, {"b", "y"}, {"z", "x"}}},
                                              {{{"a", "b"}, {"b", "a"}}}};
  for (const auto& sk : skeletons) {
    for (std::uint32_t m = 0; m < (1U << kAbaPool.size()); ++m) {
      AbaBuilder b;
      for (const auto& [a, c] : sk.contraries)
        b.assumption(a).contrary(a, c);
      for (std::size_t k = 0; k < kAbaPool.size(); ++k)
        if (m >> k & 1U)
          b.rule(kAbaPool[k]);
      AbaFramework d;
      try {
        d = b.build();
      } catch (const Error&) {
        continue;
      }
      if (d.sentence_count() > 5)
        continue;
      ++frameworks;
      const auto& as = d.assumption_list();
      for (std::uint32_t s = 0; s < (1U << as.size()); ++s) {
        AssumptionSet set = d.empty_set();
        Names sn;
        for (std::size_t k = 0; k < as.size(); ++k)
          if (s >> k & 1U) {
            set.insert(as[k]);
            sn.insert(d.name(as[k]));
          }
        ++sets;
        if (names(d, theory(d, set)) != oracle::theory(d, sn))
          bad.push_back("ABA " + one_line(serialize_aba(d)) + " S=" + format_set(std::vector<std::string>(sn.begin(), sn.end())));
      }
    }
  }
  gate.line("AC4", bad.empty() && programs > 0 && frameworks > 0,
            "oracle equivalence: " + std::to_string(programs) + " programs / " + std::to_string(interpretations) +
                " interpretations, " + std::to_string(frameworks) + " frameworks / " + std::to_string(sets) +
                " assumption sets, " + std::to_string(bad.size()) + " disagreements");
  for (std::size_t k = 0; k < std::min<std::size_t>(bad.size(), 10); ++k)
    gate.note(bad[k]);
}

void scaling(Gate& gate) {
  std::string text = "p0.\n";
  for (std::size_t i = 1; i < kChainLength; ++i)
    text += "p" + std::to_string(i) + " :- p" + std::to_string(i - 1) + ".\n";
  for (std::size_t i = 1; i < kChainLength; ++i)
    text += "not p" + std::to_string(i - 1) + " :- not p" + std::to_string(i) + ".\n";
  const auto p = parse_lp(text);

  std::string aba = "#assumption a.\n#contrary a = c.\ns0 <- a.\n";
  for (std::size_t i = 1; i < kChainLength; ++i)
    aba += "s" + std::to_string(i) + " <- s" + std::to_string(i - 1) + ".\n";
  const auto d = parse_aba(aba);

  Stopwatch sw;
  const std::string last = "p" + std::to_string(kChainLength - 1);
  const auto pos = closure_lp_counted(p, p.literal_set({}));
  const auto neg = closure_lp_counted(p, p.literal_set({named_neg(last)}));
  const auto th = theory_counted(d, d.assumption_set({"a"}));
  const double t = sw.seconds();

  const std::size_t lp_bound = 2 * p.atom_count();
  const std::size_t aba_bound = d.sentence_count();
  const bool complete = pos.literals.size() == kChainLength && neg.literals.size() == 2 * kChainLength &&
                        th.derived.size() == kChainLength + 1;
  const bool ok = complete && pos.rounds <= lp_bound && neg.rounds <= lp_bound && th.rounds <= aba_bound &&
                  t < kScalingSeconds;
  gate.line("AC5", ok,
            "scaling on " + std::to_string(kChainLength) + "-atom chains: closure rounds " + std::to_string(pos.rounds) +
                "/" + std::to_string(neg.rounds) + " (bound " + std::to_string(lp_bound) + "), theory rounds " +
                std::to_string(th.rounds) + " (bound " + std::to_string(aba_bound) + "), " + secs(t) + " (limit " +
                secs(kScalingSeconds) + ")");
}

void format_round_trips(Gate& gate) {
  std::size_t lp_ok = 0, aba_ok = 0;
  std::vector<std::string> bad;
  const Fragment lp_fragments[] = {Fragment::general_lp, Fragment::bipolar_lp};
  const Fragment aba_fragments[] = {Fragment::general_aba, Fragment::lp_aba, Fragment::bipolar_aba};
  for (std::size_t i = 0; i < kRoundTripCount; ++i) {
    InstanceGenConfig g;
    g.seed = instance_seed(7, i);
    g.fragment = lp_fragments[i % 2];
    const auto p = std::get<LogicProgram>(generate_instance(g));
    const auto ps = serialize_lp(p);
    const auto p2 = parse_lp(ps);
    if (p2 == p && serialize_lp(p2) == ps)
      ++lp_ok;
    else
      bad.push_back("LP: " + one_line(ps));
    g.seed = instance_seed(8, i);
    g.fragment = aba_fragments[i % 3];
    const auto d = std::get<AbaFramework>(generate_instance(g));
    const auto ds = serialize_aba(d);
    const auto d2 = parse_aba(ds);
    if (d2 == d && serialize_aba(d2) == ds)
      ++aba_ok;
    else
      bad.push_back("ABA: " + one_line(ds));
  }
  gate.line("AC6", bad.empty(),
            "format round trips: LP " + std::to_string(lp_ok) + "/" + std::to_string(kRoundTripCount) + ", ABA " +
                std::to_string(aba_ok) + "/" + std::to_string(kRoundTripCount));
  for (const auto& b : bad)
    gate.note(b);
}

template <class F>
void guarded(Gate& gate, const std::string& id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    gate.line(id, false, std::string("exception: ") + e.what());
  }
}

} // namespace

int main() {
  Gate gate;
  guarded(gate, "AC1", [&] { golden_corpus(gate); });
  Corpus corpus;
  guarded(gate, "AC2", [&] {
    corpus = fuzz_corpus();
    theorem_fuzzing(gate, corpus);
  });
  guarded(gate, "AC3", [&] { inclusions(gate, corpus); });
  guarded(gate, "AC4", [&] { oracle_equivalence(gate); });
  guarded(gate, "AC5", [&] { scaling(gate); });
  guarded(gate, "AC6", [&] { format_round_trips(gate); });
  std::cout << (gate.failed() ? "acceptance: " + std::to_string(gate.failed()) + " criteria failed\n"
                              : std::string("acceptance: all criteria passed\n"));
  return gate.failed() ? 1 : 0;
}
