// polylink: classification, verification, export and bound calculations.

#include <iostream>

#include <CLI11.hpp>

#include "polylink/cli.hpp"

using polylink::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::Range(1, 256));
  sub->add_option("--output,-o", c.output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex links of integral polyhedral 3-manifolds"};
  app.require_subcommand(1);
  RunConfig c;
  int exact_n = 0;

  auto* classify = app.add_subcommand("classify", "Enumerate and classify the vertex links");
  classify->add_option("--base", c.base, "s4, d6 or all")->default_str("all");
  classify->add_option("--n", exact_n, "Only links with exactly this many cone points");
  classify->add_option("--n-min", c.n_min, "Smallest number of cone points (default 3)");
  classify->add_option("--n-max", c.n_max, "Largest number of cone points (default: positivity ceiling)");
  classify->add_option("--format,-f", c.format, "table, json or csv")->default_str("table");
  add_common(classify, c);

  auto* verify = app.add_subcommand("verify", "Compare against the reference link table");
  verify->add_flag("--counts-only", c.counts_only, "Check only the summary counts");
  verify->add_option("--golden", c.golden, "Reference table as JSON")->check(CLI::ExistingFile);
  add_common(verify, c);

  auto* dessin = app.add_subcommand("dessin", "Dessin of a table row as Graphviz DOT");
  dessin->add_option("--row,-r", c.row, "Table row")->required();
  dessin->add_option("--realization", c.realization, "Realization index within the row");
  add_common(dessin, c);

  auto* surface = app.add_subcommand("surface", "Cone surface of a table row");
  surface->add_option("--row,-r", c.row, "Table row");
  surface->add_option("--realization", c.realization, "Realization index within the row");
  surface->add_option("--format,-f", c.format, "off, obj, csv (distances) or table")->default_str("table");
  surface->add_option("--refinement", c.refinement, "Subdivision level")->default_str("3");
  surface->add_option("--sample-level", c.sample_level, "Sample lattice level for diameter upper bounds");
  surface->add_flag("--certify", c.certify, "Bracket the largest link diameter over all rows");
  surface->add_option("--max-refinement", c.max_refinement, "Ceiling for --certify")->default_str("6");
  add_common(surface, c);

  auto* bounds = app.add_subcommand("bounds", "Packing threshold m_n and the bound B(n, eps)");
  bounds->add_option("--n", c.dimension, "Dimension")->default_str("3");
  bounds->add_option("--epsilon,-e", c.epsilon, "Angle such as 5pi/6, pi/2 or 2.5");
  bounds->add_flag("--epsilon-grid", c.epsilon_grid, "Tabulate m_n on delta = k pi/(N+1)");
  bounds->add_option("--grid-points", c.grid_points, "N for --epsilon-grid")->default_str("1000");
  bounds->add_option("--digits", c.precision_digits, "Starting working precision in decimal digits")
      ->default_str("60");
  add_common(bounds, c);

  std::uint64_t seed = 0;
  auto* demo = app.add_subcommand("narrow-demo", "Net, shrink and wide-triangle procedures on point clouds");
  auto* seed_opt = demo->add_option("--seed,-s", seed, "Random seed")->required();
  demo->add_option("--n", c.dimension, "Ambient dimension")->default_str("3");
  demo->add_option("--generator,-g", c.generator, "uniform or clustered")->default_str("uniform");
  demo->add_option("--input,-i", c.input, "CSV point cloud instead of a generator")->check(CLI::ExistingFile);
  demo->add_option("--points", c.points, "Points per cloud")->default_str("2000");
  demo->add_option("--levels", c.levels, "Cluster levels for the clustered generator")->default_str("5");
  demo->add_option("--alpha", c.alpha, "Shrink ratio as p/q")->default_str("1/3");
  demo->add_option("--epsilon,-e", c.epsilon, "Narrowness angle")->default_str("pi/2");
  demo->add_option("--clouds", c.clouds, "Number of clouds, seeds seed, seed+1, ...")->default_str("1");
  add_common(demo, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return polylink::kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  if (exact_n) c.n_min = c.n_max = exact_n;
  if (*seed_opt) c.seed = seed;
  return polylink::run(c, std::cout, std::cerr);
}
