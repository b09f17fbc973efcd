#include <iostream>

#include <CLI11.hpp>

#include "toricdef/cli.hpp"

int main(int argc, char** argv) {
  using namespace toricdef;
  RunConfig cfg;
  try {
    cfg.window = default_window();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  }

  CLI::App app{"Deformation invariants of affine toric Gorenstein varieties"};
  app.require_subcommand(1);

  auto cone_opts = [&](CLI::App* sub, bool many) {
    auto* o = sub->add_option("--cone", cfg.cones, many ? "cone files (json)" : "cone file (json)");
    if (!many) o->expected(1);
    sub->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  };
  auto scan_opts = [&](CLI::App* sub) {
    sub->add_option("--q-max", cfg.q_max, "scan bound on q");
    sub->add_option("--p-max", cfg.p_max, "scan bound on |p|");
  };

  auto* dual = app.add_subcommand("dual", "dual cone, canonical degree, edge lengths");
  cone_opts(dual, false);

  auto* t1 = app.add_subcommand("t1", "dim T1_(i)(-R) for one degree or over a scan");
  cone_opts(t1, false);
  scan_opts(t1);
  t1->add_option("--degree", cfg.degree, "raw degree x,y,z");
  t1->add_option("--family", cfg.family, "q,j,p meaning qR* - p s_j");
  t1->add_option("--hodge-i", cfg.hodge_i, "Hodge index (default 1..3)");

  auto* cls = app.add_subcommand("classify", "closed-form T1 classification and HH assembly");
  cone_opts(cls, false);
  scan_opts(cls);
  cls->add_flag("--crosscheck", cfg.crosscheck, "compare with the evaluator over the scan");

  auto* surf = app.add_subcommand("surface", "the A_n surface singularity xy = z^(n+1)");
  surf->add_option("--n", cfg.n, "n in A_n");
  surf->add_option("--report", cfg.report, "dims, e1 or poisson")->check(CLI::IsMember({"dims", "e1", "poisson"}));
  surf->add_option("--mu-p", cfg.mu_p, "pig, zero or a json file {kappa, m}");
  surf->add_option("--window", cfg.window, "window bound d (default $TORICDEF_WINDOW or 6)");
  surf->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* check = app.add_subcommand("check", "seeded property suites");
  cone_opts(check, true);
  scan_opts(check);
  check->add_option("--suite", cfg.suite, "pal-lemma, hodge, poisson-axioms, gauge or crosscheck")->required();
  check->add_option("--seed", cfg.seed, "random seed");
  check->add_option("--trials", cfg.trials, "number of trials (0: suite default)");
  check->add_option("--artin", cfg.artin, "coefficient ring, e.g. t^3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, std::cout, std::cerr);
}
