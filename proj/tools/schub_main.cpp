#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "schub/cli.hpp"

namespace {

schub::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return schub::OutputFormat::Json;
  if (s == "csv") return schub::OutputFormat::Csv;
  return schub::OutputFormat::Text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multiplicity of the Schubert variety Y_w at the point X_w0.\n"
      "Builds the determinantal ideal of Y_w on the opposite big cell, computes a\n"
      "Groebner basis under a degree-in-t-first order and reads the multiplicity\n"
      "off the initial ideal."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string order = "grevlex";
  int jobs = 0;
  std::string cache;
  bool no_cache = false;

  auto add_common = [&](CLI::App* cmd, bool with_cache) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--order", order, "Tie-break order on the z variables")
        ->check(CLI::IsMember({"grevlex", "lex"}))
        ->capture_default_str();
    if (with_cache) {
      cmd->add_option("--jobs", jobs, "Worker count (default: available parallelism)")
          ->check(CLI::PositiveNumber);
      cmd->add_option("--cache", cache,
                      "Record cache file (also via " + std::string(schub::kCacheEnvVar) +
                          "); lex-order runs use <path>.lex");
      cmd->add_flag("--no-cache", no_cache, "Ignore any configured cache");
    }
  };

  std::string perm;
  std::vector<std::string> show;
  CLI::App* compute = app.add_subcommand("compute", "Multiplicity of a single permutation");
  compute->add_option("--perm", perm, "One-line word, e.g. 2143 or 10,1,2,...")->required();
  compute
      ->add_option("--show", show,
                   "Trace stages: rank-matrix, generators, gb, leadterms, hilbert")
      ->delimiter(',')
      ->check(CLI::IsMember({"rank-matrix", "generators", "gb", "leadterms", "hilbert"}));
  add_common(compute, false);

  int n = 0;
  CLI::App* tab = app.add_subcommand("table", "Multiplicities for all of Sn");
  tab->add_option("--n", n, "Group size")->required()->check(CLI::PositiveNumber);
  add_common(tab, true);

  CLI::App* ver = app.add_subcommand("verify", "Compare an Sn run against the reference tables");
  ver->add_option("--n", n, "Group size (reference data: 5 or 6)")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(ver, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  schub::CliConfig config;
  config.format = parse_format(format);
  config.order = order == "lex" ? schub::TieBreak::Lex : schub::TieBreak::Grevlex;
  config.jobs = jobs;
  config.cache_path = cache;
  config.no_cache = no_cache;
  config.n = n;
  config.perm = perm;
  config.show.insert(show.begin(), show.end());
  if (compute->parsed())
    config.command = schub::CliConfig::Command::Compute;
  else if (tab->parsed())
    config.command = schub::CliConfig::Command::Table;
  else
    config.command = schub::CliConfig::Command::Verify;

  return schub::run(config, std::cout, std::cerr);
}
