/**
 * @file config.hpp
 * @brief Flat `key = value` configuration text, plus the parsed simulation
 *        settings used by the harness and the C API.
 */

#ifndef DEBYEFEM_CONFIG_HPP
#define DEBYEFEM_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "debyefem/linalg.hpp"
#include "debyefem/manufactured.hpp"
#include "debyefem/nonlinearity.hpp"
#include "debyefem/spaces.hpp"
#include "debyefem/timestepper.hpp"

namespace debyefem {

/// Flat key = value store. Lines starting with '#' and blank lines are
/// ignored; parse errors report the 1-based line number.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_real(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// comma-separated integer list
  std::vector<int> get_int_list(const std::string& key,
                                const std::vector<int>& fallback) const;

  void set(const std::string& key, const std::string& value);

 private:
  std::map<std::string, std::string> values_;
};

struct SimConfig {
  std::string case_name = "example1";
  std::vector<int> n_list = {4, 8, 16, 32};
  int n = 32;
  int n_steps = 100;
  std::string law_name = "cubic";
  double delta1 = 1.0;
  double delta2 = 1.0;
  bool strict_paper_mode = false;
  bool postprocess = false;
  std::string out_dir = ".";
  StepperOptions stepper;

  ExactCase exact() const;
  NonlinearLaw law() const;
  PhysParams params() const;  // the reference parameter set
};

SimConfig parse_sim_config(const Config& config);

}  // namespace debyefem

#endif
