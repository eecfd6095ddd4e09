#include "debyefem/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace debyefem {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config config;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    line_no++;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config parse error at line " +
                                  std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config parse error at line " +
                                  std::to_string(line_no) + ": empty key");
    config.values_[key] = value;
  }
  return config;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse(buffer.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::get_real(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': not a real number: " +
                                it->second);
  }
}

int Config::get_int(const std::string& key, int fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    std::size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "': not an integer: " +
                                it->second);
  }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("config key '" + key + "': not a boolean: " +
                              it->second);
}

std::vector<int> Config::get_int_list(const std::string& key,
                                      const std::vector<int>& fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<int> out;
  std::istringstream stream(it->second);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw std::invalid_argument("config key '" + key +
                                  "': not an integer list: " + it->second);
    }
  }
  return out;
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

ExactCase SimConfig::exact() const { return case_by_name(case_name); }

NonlinearLaw SimConfig::law() const {
  if (strict_paper_mode) return NonlinearLaw::linear(0.0);
  if (law_name == "linear") return NonlinearLaw::linear(delta1);
  if (law_name == "cubic") return NonlinearLaw::cubic(delta1, delta2);
  if (law_name == "saturating") return NonlinearLaw::saturating(delta1, delta2);
  throw std::invalid_argument("unknown law: " + law_name);
}

PhysParams SimConfig::params() const { return PhysParams{}; }

SimConfig parse_sim_config(const Config& config) {
  SimConfig sim;
  sim.case_name = config.get_string("case", sim.case_name);
  sim.n_list = config.get_int_list("N_list", sim.n_list);
  sim.n = config.get_int("N", sim.n);
  sim.n_steps = config.get_int("n_steps", sim.n_steps);
  sim.law_name = config.get_string("law", sim.law_name);
  sim.delta1 = config.get_real("delta1", sim.delta1);
  sim.delta2 = config.get_real("delta2", sim.delta2);
  sim.strict_paper_mode =
      config.get_bool("strict_paper_mode", sim.strict_paper_mode);
  sim.postprocess = config.get_bool("postprocess", sim.postprocess);
  sim.out_dir = config.get_string("out_dir", sim.out_dir);
  sim.stepper.dt = config.get_real("dt", sim.stepper.dt);
  sim.stepper.newton_tol = config.get_real("newton_tol", sim.stepper.newton_tol);
  sim.stepper.newton_max_iter =
      config.get_int("newton_max_iter", sim.stepper.newton_max_iter);
  sim.stepper.linear_tol = config.get_real("linear_tol", sim.stepper.linear_tol);
  sim.stepper.linear_max_iter =
      config.get_int("linear_max_iter", sim.stepper.linear_max_iter);
  sim.stepper.quad_order = config.get_int("quad_order", sim.stepper.quad_order);
  const std::string precond = config.get_string("precond", "jacobi");
  if (precond == "jacobi")
    sim.stepper.precond = Precond::Jacobi;
  else if (precond == "none")
    sim.stepper.precond = Precond::None;
  else
    throw std::invalid_argument("unknown precond: " + precond);
  return sim;
}

}  // namespace debyefem
