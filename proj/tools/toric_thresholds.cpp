#include "toric/cli/commands.hpp"
#include "toric/config.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact alpha/delta thresholds and K-stability for toric varieties"};
  app.set_version_flag("--version", "toric-thresholds 0.1");

  std::string command;
  std::string input;
  std::string v;
  std::int64_t m = 0;
  std::string out;
  std::size_t threads = 0;
  app.add_option("command", command, "validate | thresholds | kstability | measure | report")
      ->required()
      ->check(CLI::IsMember({"validate", "thresholds", "kstability", "measure", "report"}));
  app.add_option("input", input, "input JSON document")->required();
  auto* v_opt = app.add_option("--v", v, "valuation as comma-separated rationals, e.g. 1,1/2");
  auto* m_opt = app.add_option("--m", m, "level m for jumping numbers (measure)");
  auto* out_opt = app.add_option("--out", out, "directory for CSV output");
  app.add_option("--threads", threads, "worker threads for lattice enumeration (default TT_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), 2);
  }

  if (threads > 0) toric::set_worker_threads(threads);
  toric::cli::CommandOptions opts;
  if (*v_opt) opts.v = v;
  if (*m_opt) opts.m = m;
  if (*out_opt) opts.out = out;

  const auto result = toric::cli::run_command(command, input, opts);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
