#pragma once

// Subcommand implementations behind the nafaba executable. Each command
// writes to the given streams and returns the process exit code: 0 success,
// 1 a negative answer (no solution, a failed check, fragment not satisfied),
// 2 an error.

#include "nafaba/aba.hpp"
#include "nafaba/generate.hpp"
#include "nafaba/io.hpp"
#include "nafaba/lp.hpp"
#include "nafaba/translate.hpp"
#include "nafaba/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nafaba {

enum class InputKind { lp, aba };
enum class Semantics { stable, set_stable };
enum class Direction { lp_to_aba, aba_to_lp, aba_to_lp_aba };
enum class OutputFormat { human, tabular };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

inline constexpr const char* kBoundEnvVar = "NAFABA_ENUM_BOUND";

struct CliConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::optional<InputKind> kind;
  std::optional<Semantics> semantics;
  std::optional<Direction> direction;
  std::optional<std::size_t> bound;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  Fragment fragment = Fragment::general_lp;
  std::optional<std::size_t> max_atoms;
  std::optional<std::size_t> max_rules;
  /// check-fragment: the predicate whose truth decides the exit code.
  std::optional<std::string> required_fragment;
  /// verify: descend into directories given as inputs.
  bool all = false;
  OutputFormat format = OutputFormat::human;
  std::optional<std::string> provenance_path;
  std::optional<std::string> output_path;
};

inline std::optional<Semantics> semantics_from_string(std::string_view s) {
  if (s == "stable")
    return Semantics::stable;
  if (s == "set-stable")
    return Semantics::set_stable;
  return std::nullopt;
}

inline std::optional<Direction> direction_from_string(std::string_view s) {
  if (s == "lp-to-aba")
    return Direction::lp_to_aba;
  if (s == "aba-to-lp")
    return Direction::aba_to_lp;
  if (s == "aba-to-lp-aba")
    return Direction::aba_to_lp_aba;
  return std::nullopt;
}

inline std::optional<Fragment> fragment_from_string(std::string_view s) {
  for (Fragment f : {Fragment::general_lp, Fragment::bipolar_lp, Fragment::general_aba, Fragment::lp_aba,
                     Fragment::bipolar_aba})
    if (s == to_string(f))
      return f;
  return std::nullopt;
}

namespace detail {

inline std::optional<InputKind> kind_of_path(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".lp")
    return InputKind::lp;
  if (ext == ".aba")
    return InputKind::aba;
  return std::nullopt;
}

inline InputKind resolve_kind(const CliConfig& cfg, const std::string& path) {
  if (cfg.kind)
    return *cfg.kind;
  if (auto k = kind_of_path(path))
    return *k;
  throw Error(path + ": cannot infer input kind from the extension; pass --kind lp|aba");
}

/// Explicit --bound, else the environment variable, else the built-in default.
inline EnumerationOptions enumeration_options(const CliConfig& cfg) {
  EnumerationOptions o;
  o.jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
  if (cfg.bound) {
    o.bound = *cfg.bound;
  } else if (const char* env = std::getenv(kBoundEnvVar); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0')
      throw Error(std::string(kBoundEnvVar) + " must be a non-negative integer");
    o.bound = static_cast<std::size_t>(v);
  }
  return o;
}

struct Loaded {
  InputKind kind;
  std::optional<LogicProgram> program;
  std::optional<AbaFramework> framework;
};

inline Loaded load(const CliConfig& cfg, const std::string& path, std::ostream& err) {
  const InputKind kind = resolve_kind(cfg, path);
  const std::string text = read_file(path);
  std::vector<Diagnostic> warnings;
  Loaded out{kind, std::nullopt, std::nullopt};
  try {
    if (kind == InputKind::lp)
      out.program = parse_lp(text, &warnings);
    else
      out.framework = parse_aba(text, &warnings);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
  for (const auto& w : warnings)
    err << path << ":" << to_string(w.location) << ": warning: " << w.message << "\n";
  return out;
}

inline void print_set(std::ostream& out, const std::vector<std::string>& names, OutputFormat f) {
  if (f == OutputFormat::human) {
    out << format_set(names) << "\n";
    return;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    out << (i ? "\t" : "") << names[i];
  out << "\n";
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error("cannot write " + path);
  f << text;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

inline void print_report(std::ostream& out, const VerificationReport& r, const std::string& source, OutputFormat f) {
  if (f == OutputFormat::tabular) {
    out << r.to_line() << "\n";
    return;
  }
  out << (r.passed() ? "pass" : "FAIL") << "  " << to_string(r.theorem());
  if (!source.empty())
    out << "  " << source;
  out << "\n";
  if (!r.passed())
    out << "      witness: " << r.witness() << "\n";
}

} // namespace detail

/// Lists every stable or set-stable model (programs) or extension
/// (frameworks), one sorted set per line, in canonical order.
inline int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (!cfg.semantics)
      throw Error("solve requires --semantics stable|set-stable");
    if (cfg.inputs.size() != 1)
      throw Error("solve takes exactly one input file");
    const auto opts = detail::enumeration_options(cfg);
    const auto in = detail::load(cfg, cfg.inputs.front(), err);
    std::size_t found = 0;
    if (in.program) {
      const auto models = *cfg.semantics == Semantics::stable ? stable_models(*in.program, opts)
                                                              : set_stable_models(*in.program, opts);
      for (const auto& i : models)
        detail::print_set(out, atom_names(*in.program, i), cfg.format);
      found = models.size();
    } else {
      const auto exts = *cfg.semantics == Semantics::stable ? stable_extensions(*in.framework, opts)
                                                            : set_stable_extensions(*in.framework, opts);
      for (const auto& s : exts)
        detail::print_set(out, sentence_names(*in.framework, s), cfg.format);
      found = exts.size();
    }
    return found > 0 ? kExitOk : kExitNegative;
  });
}

/// Writes the translated instance in canonical syntax; with a provenance
/// path, also the generated-symbol map as `generated TAB origin` lines.
inline int cmd_translate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (!cfg.direction)
      throw Error("translate requires --direction lp-to-aba|aba-to-lp|aba-to-lp-aba");
    if (cfg.inputs.size() != 1)
      throw Error("translate takes exactly one input file");
    const auto in = detail::load(cfg, cfg.inputs.front(), err);
    const bool wants_lp = *cfg.direction == Direction::lp_to_aba;
    if (wants_lp != (in.kind == InputKind::lp))
      throw Error(std::string("direction ") + (wants_lp ? "lp-to-aba expects a logic program" : "expects a framework") +
                  " as input");

    std::string text;
    TranslationRecord record;
    switch (*cfg.direction) {
    case Direction::lp_to_aba: {
      auto t = lp_to_aba_translation(*in.program);
      text = serialize_aba(t.framework);
      record = std::move(t.record);
      break;
    }
    case Direction::aba_to_lp: {
      auto t = is_lp_aba(*in.framework) ? lp_aba_to_lp(*in.framework) : aba_to_lp(*in.framework);
      text = serialize_lp(t.program);
      record = std::move(t.record);
      break;
    }
    case Direction::aba_to_lp_aba: {
      auto t = aba_to_lp_aba(*in.framework);
      text = serialize_aba(t.framework);
      record = std::move(t.record);
      break;
    }
    }
    if (cfg.output_path)
      detail::write_text(*cfg.output_path, text);
    else
      out << text;
    if (cfg.provenance_path)
      detail::write_text(*cfg.provenance_path, provenance_lines(record));
    return kExitOk;
  });
}

/// Prints each fragment predicate as `name TAB yes|no`; LP-ABA failures name
/// the violated clause. With a required fragment the exit code is 0 iff it
/// holds.
inline int cmd_check_fragment(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (cfg.inputs.size() != 1)
      throw Error("check-fragment takes exactly one input file");
    const auto in = detail::load(cfg, cfg.inputs.front(), err);
    std::vector<std::pair<std::string, bool>> results;
    std::string note;
    if (in.program) {
      results.emplace_back("bipolar-lp", is_bipolar_lp(*in.program));
    } else {
      const AbaFramework& d = *in.framework;
      results.emplace_back("flat", is_flat(d));
      results.emplace_back("bipolar-aba", is_bipolar_aba(d));
      const auto f = lp_aba_violation(d);
      results.emplace_back("lp-aba", !f);
      if (f)
        note = "clause (" + std::to_string(f->clause) + ") violated: " + f->detail;
    }
    std::optional<bool> required;
    for (const auto& [name, holds] : results) {
      out << name << (cfg.format == OutputFormat::human ? ": " : "\t") << (holds ? "yes" : "no");
      if (name == "lp-aba" && !holds)
        out << (cfg.format == OutputFormat::human ? " (" + note + ")" : "\t" + note);
      out << "\n";
      if (cfg.required_fragment && *cfg.required_fragment == name)
        required = holds;
    }
    if (cfg.required_fragment && !required)
      throw Error("fragment '" + *cfg.required_fragment + "' does not apply to this input");
    return required.value_or(true) ? kExitOk : kExitNegative;
  });
}

namespace detail {

inline std::vector<std::string> expand_inputs(const CliConfig& cfg) {
  std::vector<std::string> files;
  for (const auto& in : cfg.inputs) {
    if (!std::filesystem::is_directory(in)) {
      files.push_back(in);
      continue;
    }
    if (!cfg.all)
      throw Error(in + " is a directory; pass --all to check every instance in it");
    std::vector<std::string> found;
    for (const auto& e : std::filesystem::recursive_directory_iterator(in))
      if (e.is_regular_file() && kind_of_path(e.path().string()))
        found.push_back(e.path().string());
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  return files;
}

} // namespace detail

/// Runs every applicable check on each instance file.
inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const auto files = detail::expand_inputs(cfg);
    if (files.empty())
      throw Error("verify needs at least one instance file");
    const auto opts = detail::enumeration_options(cfg);
    bool all_pass = true;
    for (const auto& path : files) {
      const auto in = detail::load(cfg, path, err);
      const auto reports = in.program ? verify_lp(*in.program, opts) : verify_aba(*in.framework, opts);
      for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        detail::print_report(out, r, path, cfg.format);
      }
    }
    return all_pass ? kExitOk : kExitNegative;
  });
}

/// Generates `count` seeded instances of the chosen fragment and checks them.
inline int cmd_fuzz(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    FuzzOptions f;
    f.generator.seed = cfg.seed;
    f.generator.fragment = cfg.fragment;
    if (!is_lp_fragment(cfg.fragment))
      f.generator.max_atoms = 6;
    if (cfg.max_atoms) {
      f.generator.max_atoms = *cfg.max_atoms;
      f.generator.min_atoms = std::min(f.generator.min_atoms, *cfg.max_atoms);
    }
    if (cfg.max_rules) {
      f.generator.max_rules = *cfg.max_rules;
      f.generator.min_rules = std::min(f.generator.min_rules, *cfg.max_rules);
    }
    f.count = cfg.count;
    f.enumeration = detail::enumeration_options(cfg);
    f.enumeration.jobs = 1;
    f.jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
    std::size_t failed = 0;
    const auto reports = run_fuzz(f);
    for (const auto& r : reports) {
      failed += r.passed() ? 0 : 1;
      detail::print_report(out, r, "", cfg.format);
    }
    if (cfg.format == OutputFormat::human && !reports.empty())
      err << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitNegative;
  });
}

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == "solve")
    return cmd_solve(cfg, out, err);
  if (cfg.subcommand == "translate")
    return cmd_translate(cfg, out, err);
  if (cfg.subcommand == "check-fragment")
    return cmd_check_fragment(cfg, out, err);
  if (cfg.subcommand == "verify")
    return cmd_verify(cfg, out, err);
  if (cfg.subcommand == "fuzz")
    return cmd_fuzz(cfg, out, err);
  err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
  return kExitError;
}

} // namespace nafaba
