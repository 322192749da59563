#include "CLI11.hpp"
#include "kimura/cli/commands.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace kimura::cli;
  CLI::App app{"kimura: exact verification of finite-dimensional motive calculus in a super-graded model"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "pretty";
  std::string file;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", format, "report format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--file", file, "write the report to this path instead of stdout");
    sub->add_option("--cap", cfg.cap, "dimension cap for tensor powers");
    sub->add_flag("--timing", cfg.timing, "include wall-clock timing in the report");
  };

  auto* chars = app.add_subcommand("chars", "character table of the symmetric group");
  chars->add_option("-n,--n", cfg.n, "degree")->required();
  common(chars);

  auto* schur = app.add_subcommand("schur", "Schur functor of a (p|q) object");
  schur->add_option("--lambda", cfg.lambda, "partition, e.g. 2,1")->required();
  schur->add_option("-p,--p", cfg.p, "even dimension");
  schur->add_option("-q,--q", cfg.q, "odd dimension");
  schur->add_option("--k", cfg.k, "truncation order 1..6");
  schur->add_option("--seed", cfg.seed, "perturbation seed (0: unperturbed)");
  common(schur);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "suite name")->required();
  verify->add_option("--grid", cfg.grid, "parameter bounds, e.g. p=2,q=2,k=3");
  verify->add_option("--seeds", cfg.seeds, "number of seeds");
  verify->add_option("--seed", cfg.seed, "base seed");
  common(verify);

  auto* surface = app.add_subcommand("surface", "surface calculus from a spec file");
  surface->add_option("spec", cfg.spec_path, "spec file")->required();
  common(surface);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = parse_format(format);

  const Outcome out = run(cfg);
  if (!out.error.empty()) std::cerr << out.error << "\n";
  if (!out.output.empty()) {
    if (file.empty()) {
      std::cout << out.output;
    } else {
      std::ofstream f(file);
      if (!f) {
        std::cerr << "error: cannot write '" << file << "'\n";
        return kExitUsage;
      }
      f << out.output;
    }
  }
  return out.exit_code;
}
