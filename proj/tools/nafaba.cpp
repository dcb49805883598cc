#include "nafaba/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  nafaba::CliConfig cfg;
  CLI::App app{"Stable and set-stable semantics for naf-head logic programs and ABA frameworks"};
  app.require_subcommand(1);

  std::string kind, semantics, direction, fragment = "lp", format = "human";
  std::size_t bound = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "Input kind, overriding the file extension")
        ->check(CLI::IsMember({"lp", "aba"}));
    sub->add_option("--bound", bound, "Enumeration bound (default from NAFABA_ENUM_BOUND, else 24)");
    sub->add_option("--jobs", cfg.jobs, "Worker threads; output order is unaffected")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "tabular"}));
  };

  auto* solve = app.add_subcommand("solve", "List models or extensions");
  common(solve);
  solve->add_option("--semantics", semantics, "stable or set-stable")
      ->required()
      ->check(CLI::IsMember({"stable", "set-stable"}));
  solve->add_option("input", cfg.inputs, "Instance file (.lp or .aba)")->required()->expected(1);

  auto* translate = app.add_subcommand("translate", "Translate between programs and frameworks");
  common(translate);
  translate->add_option("--direction", direction, "lp-to-aba, aba-to-lp or aba-to-lp-aba")
      ->required()
      ->check(CLI::IsMember({"lp-to-aba", "aba-to-lp", "aba-to-lp-aba"}));
  translate->add_option("--provenance", cfg.provenance_path, "Write generated-symbol origins here");
  translate->add_option("-o,--output", cfg.output_path, "Write the translation here instead of stdout");
  translate->add_option("input", cfg.inputs, "Instance file")->required()->expected(1);

  auto* check = app.add_subcommand("check-fragment", "Report fragment membership");
  common(check);
  check->add_option("--fragment", cfg.required_fragment, "Exit 1 unless this predicate holds")
      ->check(CLI::IsMember({"bipolar-lp", "flat", "bipolar-aba", "lp-aba"}));
  check->add_option("input", cfg.inputs, "Instance file")->required()->expected(1);

  auto* verify = app.add_subcommand("verify", "Check the correspondence theorems on instance files");
  common(verify);
  verify->add_flag("--all", cfg.all, "Check every .lp and .aba file below the given directories");
  verify->add_option("inputs", cfg.inputs, "Instance files or directories")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Check the correspondence theorems on random instances");
  common(fuzz);
  fuzz->add_option("--seed", cfg.seed, "Batch seed");
  fuzz->add_option("--count", cfg.count, "Number of instances");
  fuzz->add_option("--fragment", fragment, "Instance fragment")
      ->check(CLI::IsMember({"lp", "bipolar-lp", "aba", "lp-aba", "bipolar-aba"}));
  fuzz->add_option("--max-atoms", cfg.max_atoms, "Largest atom (or assumption) count");
  fuzz->add_option("--max-rules", cfg.max_rules, "Largest rule count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : nafaba::kExitError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!kind.empty())
    cfg.kind = kind == "lp" ? nafaba::InputKind::lp : nafaba::InputKind::aba;
  if (!semantics.empty())
    cfg.semantics = nafaba::semantics_from_string(semantics);
  if (!direction.empty())
    cfg.direction = nafaba::direction_from_string(direction);
  if (app.get_subcommands().front()->count("--bound"))
    cfg.bound = bound;
  cfg.fragment = *nafaba::fragment_from_string(fragment);
  cfg.format = format == "tabular" ? nafaba::OutputFormat::tabular : nafaba::OutputFormat::human;
  return nafaba::run(cfg, std::cout, std::cerr);
}
