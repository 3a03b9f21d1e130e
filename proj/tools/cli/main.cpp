#include <iostream>

#include "CLI11.hpp"
#include "run.hpp"

using namespace locoh::cli;

int main(int argc, char** argv) {
  CLI::App app{"locoh: local cohomology, local homology and duality over graded polynomial rings"};
  app.set_version_flag("--version", "locoh 0.1.0");

  std::string command = "hilbert", check, input, ideal, ideal_b, i_range, window, report, vars;
  std::optional<unsigned> k_max, stab, K_max, threads, power;
  std::optional<std::uint32_t> field;
  std::optional<int> twist;
  std::string convention;

  app.add_option("command", command, "hilbert | koszul | lc | lh | hom-cech | ext | verify")
      ->check(CLI::IsMember(kCommands));
  app.add_option("check", check, "verify target: selfdual | gm | duality | dualizing | generators | corpus")
      ->check(CLI::IsMember(kChecks));
  app.add_option("--input", input, "job file (JSON)");
  app.add_option("--vars", vars, "ring variables, e.g. \"x,y\" (when no input file)");
  app.add_option("--ideal", ideal, "ideal generators, e.g. \"x,y\"");
  app.add_option("--ideal-b", ideal_b, "second generator list for verify generators");
  app.add_option("--i", i_range, "homological range lo:hi");
  app.add_option("--window", window, "degree window lo:hi");
  app.add_option("--kmax", k_max, "truncation for towers")->check(CLI::PositiveNumber);
  app.add_option("--stab", stab, "stabilization window")->check(CLI::PositiveNumber);
  app.add_option("--Kmax", K_max, "stable Cech truncation")->check(CLI::PositiveNumber);
  app.add_option("--power", power, "Koszul power k")->check(CLI::PositiveNumber);
  app.add_option("--convention", convention, "direct | inverse")->check(CLI::IsMember({"direct", "inverse"}));
  app.add_option("--twist", twist, "twist t for ext and gm");
  app.add_option("--field", field, "0 for Q, otherwise a prime p");
  app.add_option("--report", report, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--threads", threads, "worker threads, 0 = hardware");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  JobSpec job;
  try {
    if (!input.empty()) job = load_job(input);
    if (app.count("command")) job.command = command;
    if (!check.empty()) job.check = check;
    if (!vars.empty()) job.ring.vars = split_list(vars);
    if (!ideal.empty()) job.ideal = split_list(ideal);
    if (!ideal_b.empty()) job.ideal_b = split_list(ideal_b);
    if (!i_range.empty()) {
      auto [lo, hi] = parse_range(i_range, "--i");
      job.i_range = {lo, hi};
    }
    if (!window.empty()) {
      auto [lo, hi] = parse_range(window, "--window");
      job.window = {lo, hi};
    }
    if (k_max) job.k_max = *k_max;
    if (stab) job.stab = *stab;
    if (K_max) job.K_max = *K_max;
    if (power) job.power = *power;
    if (!convention.empty()) job.convention = convention;
    if (twist) job.twist = *twist;
    if (field) job.ring.characteristic = *field;
    if (!report.empty()) job.report = report;
    if (threads) job.threads = *threads;
    if (job.command == "verify" && job.check.empty()) throw SchemaError("check", "verify needs a check name");
    if (job.ring.vars.empty() && !(job.command == "verify" && job.check == "corpus"))
      throw SchemaError("ring.vars", "no variables given (use --input or --vars)");
  } catch (...) {
    return classify_current_exception(std::cerr);
  }
  return run_and_emit(job, std::cout, std::cerr);
}
