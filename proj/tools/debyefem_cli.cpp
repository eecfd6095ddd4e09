// Command-line front end; talks to the solver only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "debyefem.h"

namespace {

struct ConfigDeleter {
  void operator()(df_config* c) const { df_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<df_config, ConfigDeleter>;

int die(const std::string& where) {
  std::cerr << "error: " << where << ": " << df_last_error() << "\n";
  return 2;
}

ConfigPtr load_config(const std::string& config_path, bool postprocess,
                      bool strict_paper_mode, const std::string& out_dir,
                      int& status) {
  df_config* raw = nullptr;
  df_status rc = config_path.empty() ? df_config_create(&raw)
                                     : df_config_load(config_path.c_str(), &raw);
  if (rc != DF_OK) {
    status = die("loading config");
    return nullptr;
  }
  ConfigPtr config(raw);
  if (postprocess) df_config_set(config.get(), "postprocess", "true");
  if (strict_paper_mode)
    df_config_set(config.get(), "strict_paper_mode", "true");
  if (!out_dir.empty()) df_config_set(config.get(), "out_dir", out_dir.c_str());
  status = 0;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D Maxwell-Debye edge-element solver"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  bool postprocess = false;
  bool strict_paper_mode = false;
  app.add_option("--config", config_path, "configuration file (key = value)");
  app.add_flag("--postprocess", postprocess,
               "add superconvergence post-processing columns / fields");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--strict-paper-mode", strict_paper_mode,
               "reference linear-law mode with zero polarization source");

  CLI::App* converge =
      app.add_subcommand("converge", "mesh sweep; prints a CSV error table");
  CLI::App* run =
      app.add_subcommand("run", "single simulation; writes field snapshots");
  CLI::App* check =
      app.add_subcommand("check", "built-in oracle and property checks");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    char* report = nullptr;
    int failures = 0;
    if (df_run_checks(&report, &failures) != DF_OK) return die("check");
    std::cout << report;
    df_string_free(report);
    return failures == 0 ? 0 : 1;
  }

  int status = 0;
  ConfigPtr config =
      load_config(config_path, postprocess, strict_paper_mode, out_dir, status);
  if (!config) return status;

  if (converge->parsed()) {
    char* csv = nullptr;
    if (df_converge_csv(config.get(), &csv) != DF_OK) return die("converge");
    std::cout << csv;
    if (!out_dir.empty()) {
      std::ofstream file(out_dir + "/convergence.csv");
      if (!file) {
        df_string_free(csv);
        std::cerr << "error: cannot write " << out_dir << "/convergence.csv\n";
        return 2;
      }
      file << csv;
    }
    df_string_free(csv);
    return 0;
  }

  if (run->parsed()) {
    const std::string target = out_dir.empty() ? "." : out_dir;
    if (df_write_snapshots(config.get(), target.c_str()) != DF_OK)
      return die("run");
    std::cout << "snapshots written to " << target << "\n";
    return 0;
  }

  return 0;
}
