#include "weilcensus/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace weilcensus {

int cli_main(int argc, char** argv) {
  CLI::App app{"Weil polynomial census and verification toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime");
    sub->add_option("--g", cfg.g, "dimension");
    sub->add_option("--eps", cfg.eps, "epsilon u/v with v | 4 (density: comma-separated list)");
    sub->add_option("--seed", cfg.seed, "seed for randomized searches")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "JSON report path");
    sub->add_option("--cache", cfg.cache, "class-number cache file (WEILCENSUS_CACHE overrides)");
    sub->add_flag("--timing", cfg.timing, "record wall-clock time in the report");
  };

  struct Sub {
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {Command::kWeilEnum, "enumerate Y_g and test each F(a)"},
      {Command::kCensus, "compare the class-number census of elliptic curves with brute force"},
      {Command::kDensity, "S/T discriminant densities over Y_g"},
      {Command::kLowerBound, "class-number lower-bound sum (g = 1) or disc(R) statistics (g = 2, 3)"},
      {Command::kBoundsCheck, "numerical checks of the analytic lemmas"},
  };
  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(command_name(s.command), s.help);
    add_common(sub);
    if (s.command == Command::kBoundsCheck) {
      sub->add_option("--check", cfg.check,
                      "lemma31, cor43, sublevel, prop31, hardy-ramanujan, fekete, stark, exponents or all")
          ->capture_default_str();
      sub->add_option("--lmax", cfg.lmax, "largest prime l for prop31")->capture_default_str();
      sub->add_option("--nmax", cfg.nmax, "largest n for prop31")->capture_default_str();
      sub->add_option("--dmax", cfg.dmax, "largest delta for prop31")->capture_default_str();
    }
    registered.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const auto& [sub, command] : registered)
    if (sub->parsed()) cfg.command = command;
  if (const char* env = std::getenv("WEILCENSUS_CACHE"); env && *env) cfg.cache = env;
  return run(cfg, std::cout, std::cerr);
}

}  // namespace weilcensus
