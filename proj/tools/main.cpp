// Command-line front end: thin argument parsing over run_command.

#include <CLI11.hpp>
#include <iostream>

#include "pathbasis/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Basis path sets of layered fully connected networks"};
  app.require_subcommand(1);

  pathbasis::Command cmd;
  bool deterministic = false;  // the default; flag kept for explicitness

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cmd.input_path, "network spec document")->required();
    sub->add_option("-o,--output", cmd.output_path, "write the result here");
    sub->add_option("--format", cmd.format, "structured|summary")
        ->check(CLI::IsMember({"structured", "summary"}))
        ->capture_default_str();
    return sub;
  };
  auto add_tiebreaks = [&](CLI::App* sub) {
    auto* det = sub->add_flag("--deterministic", deterministic,
                              "lowest-index tie-breaks (default)");
    auto* seed = sub->add_option("--seed", cmd.seed, "seeded tie-breaks");
    auto* ovr = sub->add_option("--override", cmd.override_path,
                                "explicit tie-break override document");
    det->excludes(seed)->excludes(ovr);
    seed->excludes(det)->excludes(ovr);
    ovr->excludes(det)->excludes(seed);
    return sub;
  };

  add_common(app.add_subcommand("build", "validate a spec and print graph stats"));
  add_common(app.add_subcommand("enumerate", "list every input-to-output path"))
      ->add_option("--max-paths", cmd.max_paths, "enumeration cap")
      ->capture_default_str();
  add_tiebreaks(add_common(
      app.add_subcommand("basis", "basis of a skip-free network")));
  auto* hbps = add_tiebreaks(add_common(
      app.add_subcommand("hbps", "hierarchical basis via substructures")));
  hbps->add_option("--jobs", cmd.jobs, "concurrent substructure workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* verify = add_tiebreaks(add_common(
      app.add_subcommand("verify", "check coverage/rank/cardinality/span")));
  verify->add_option("--basis", cmd.basis_path, "basis document to check");
  verify->add_option("--max-paths", cmd.max_paths, "full span-check cap")
      ->capture_default_str();
  verify->add_option("--sample", cmd.sample_size, "sampled span-check size")
      ->capture_default_str();
  verify->add_option("--jobs", cmd.jobs, "concurrent substructure workers")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timings", cmd.timings,
                   "include timings in structured output");
  auto* represent = add_tiebreaks(add_common(
      app.add_subcommand("represent", "express a path in a basis")));
  represent->add_option("--path", cmd.path_file, "path document")->required();
  represent->add_option("--basis", cmd.basis_path, "basis document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  return pathbasis::run_command(cmd, std::cout, std::cerr);
}
