// Command-line front end: reads a problem file and runs one task on it.
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/run.hpp"

int main(int argc, char** argv) {
  using skew::cli::Task;
  CLI::App app{"skewpoly: exact computations with free multivariate skew polynomials"};
  app.require_subcommand(1);

  skew::cli::Options opt;
  std::string side;
  std::string file;
  std::string polynomial;

  const std::map<std::string, std::string> help = {
      {"interpolate", "Hermite interpolation from points, chains and targets"},
      {"verify", "recompute every constraint value of a polynomial"},
      {"independence", "test DP-independence of the points and chains"},
      {"eval", "evaluate a polynomial at a point"},
      {"derive", "derivatives along the chain of a word"},
      {"vandermonde", "print the confluent Vandermonde matrix"},
      {"minimal-poly", "generator (one variable) or an ideal member of degree <= N"},
      {"run", "run the task named in the file"},
  };
  std::vector<std::pair<CLI::App*, std::string>> commands;
  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    sub->add_option("file", file, "problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--side", side, "right or left; overrides the file")->check(CLI::IsMember({"right", "left"}));
    sub->add_flag("--json", opt.json, "print a JSON report");
    sub->add_option("--seed", opt.seed, "seed for sampling the twist laws");
    if (name == "verify" || name == "eval" || name == "derive") {
      sub->add_option("--polynomial", polynomial, "polynomial to use instead of problem.polynomial");
    }
    commands.emplace_back(sub, name);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : skew::cli::kExitInvalid;
  }

  for (const auto& [sub, name] : commands) {
    if (!sub->parsed()) continue;
    if (name != "run") opt.task = skew::cli::task_from_name(name);
  }
  if (!side.empty()) opt.side = side == "left" ? skew::Side::left : skew::Side::right;
  if (!polynomial.empty()) opt.polynomial = polynomial;

  const skew::cli::Outcome out = skew::cli::run_file(file, opt);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
