#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "oqbm/error.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm_app/runner.hpp"

namespace {

std::filesystem::path default_out() {
  if (const char* env = std::getenv("OQBM_OUT_DIR"); env && *env) return env;
  return "out";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace oqbm;
  CLI::App app{"Open quantum Brownian motion solver"};
  app.require_subcommand(1);
  std::string out_dir;
  std::size_t threads = 0;
  app.add_option("--out", out_dir, "output directory (default $OQBM_OUT_DIR or ./out)");
  app.add_option("--threads", threads, "worker threads, 0 = auto");

  std::string config_path;
  auto* solve = app.add_subcommand("solve", "solve one configured scenario");
  solve->add_option("--config", config_path, "flat JSON config")->required();

  std::string figure;
  auto* fig = app.add_subcommand("figure", "write panel data for a built-in figure");
  fig->add_option("--figure", figure, "fig1 .. fig6")->required();

  std::string level = "fast";
  auto* val = app.add_subcommand("validate", "run the cross-validation suite");
  val->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  for (auto* sub : {solve, fig, val}) {
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads, 0 = auto");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : app::exit_code(ErrorCode::ConfigError);
  }

  try {
    set_thread_count(threads);
    const std::filesystem::path out = out_dir.empty() ? default_out() : std::filesystem::path(out_dir);
    if (*solve) {
      for (const auto& f : app::run_solve(app::load_config(config_path), out)) std::cout << f.string() << '\n';
    } else if (*fig) {
      for (const auto& f : app::run_figure(figure, out)) std::cout << f.string() << '\n';
    } else {
      return app::run_validate(app::parse_level(level), std::cout) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
