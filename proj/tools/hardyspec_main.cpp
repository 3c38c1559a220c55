#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "hardyspec/job.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_base;
  std::string format = "csv";
  int n_override = 0;
  int resolution_override = 0;
  unsigned long long seed = 0;
};

void attach_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config_path, "job config (JSON)")
      ->required();
  sub->add_option("--out", flags.out_base,
                  "output path without extension; nothing is written when "
                  "omitted");
  sub->add_option("--format", flags.format, "csv, svg or both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));
  sub->add_option("--n", flags.n_override, "override truncation size");
  sub->add_option("--resolution", flags.resolution_override,
                  "override spectrum raster resolution");
  sub->add_option("--seed", flags.seed, "override the config seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spectral toolkit for sums of Toeplitz and Fourier-multiplier products "
      "on the Hardy space"};
  app.require_subcommand(1);

  CommonFlags flags;
  const char* commands[] = {"essential-spectrum", "spectrum",       "index",
                            "invertible",         "homotopy-trace", "compose"};
  const char* blurbs[] = {
      "sample the essential spectrum (whisker and circle arcs)",
      "flood-fill the full spectrum from the essential arcs and indices",
      "Fredholm index at lambda",
      "invertibility verdict at lambda",
      "index and containment along the canonical homotopy",
      "series and direct-matrix analysis of a quasi-parabolic composition "
      "operator"};
  for (int c = 0; c < 6; ++c)
    attach_common(app.add_subcommand(commands[c], blurbs[c]), flags);

  unsigned long long validate_seed = 7;
  CLI::App* validate = app.add_subcommand("validate", "run built-in checks");
  validate->add_option("--seed", validate_seed, "seed for random elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    if (validate->parsed()) {
      hardyspec::run_validate(validate_seed);
      std::printf("all checks passed\n");
      return 0;
    }
    for (const char* command : commands) {
      CLI::App* sub = app.get_subcommand(command);
      if (!sub->parsed()) continue;
      hardyspec::JobConfig cfg = hardyspec::load_job(flags.config_path);
      if (flags.n_override > 0) cfg.trunc.n = flags.n_override;
      if (flags.resolution_override > 0)
        cfg.resolution = flags.resolution_override;
      if (sub->count("--seed") > 0) cfg.seed = flags.seed;
      hardyspec::CommandOptions opt;
      opt.out_base = flags.out_base;
      opt.format = flags.format;
      hardyspec::run_command(command, cfg, opt);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return hardyspec::exit_code_for(e);
  }
  return 0;
}
