#include "debyefem.h"

#include <cstring>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "debyefem/config.hpp"
#include "debyefem/harness.hpp"
#include "debyefem/mesh.hpp"
#include "debyefem/timestepper.hpp"

struct df_config {
  debyefem::Config config;
};

struct df_result {
  debyefem::ErrorReport report;
};

namespace {

thread_local std::string g_last_error = "no error";

df_status fail(df_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
df_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(DF_ERR_INVALID, e.what());
  } catch (const std::runtime_error& e) {
    return fail(DF_ERR_RUNTIME, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DF_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(DF_ERR_RUNTIME, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* df_last_error(void) { return g_last_error.c_str(); }

df_status df_config_create(df_config** out) {
  if (!out) return fail(DF_ERR_NULL_ARGUMENT, "df_config_create: out is NULL");
  return guarded([&] {
    *out = new df_config{};
    return DF_OK;
  });
}

df_status df_config_parse(const char* text, df_config** out) {
  if (!text || !out)
    return fail(DF_ERR_NULL_ARGUMENT, "df_config_parse: NULL argument");
  return guarded([&] {
    auto* handle = new df_config{debyefem::Config::parse(text)};
    *out = handle;
    return DF_OK;
  });
}

df_status df_config_load(const char* path, df_config** out) {
  if (!path || !out)
    return fail(DF_ERR_NULL_ARGUMENT, "df_config_load: NULL argument");
  try {
    auto* handle = new df_config{debyefem::Config::parse_file(path)};
    *out = handle;
    return DF_OK;
  } catch (const std::invalid_argument& e) {
    // distinguish unreadable files from malformed content
    if (std::string(e.what()).rfind("cannot open", 0) == 0)
      return fail(DF_ERR_IO, e.what());
    return fail(DF_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(DF_ERR_RUNTIME, e.what());
  }
}

df_status df_config_set(df_config* config, const char* key, const char* value) {
  if (!config || !key || !value)
    return fail(DF_ERR_NULL_ARGUMENT, "df_config_set: NULL argument");
  return guarded([&] {
    config->config.set(key, value);
    return DF_OK;
  });
}

void df_config_destroy(df_config* config) { delete config; }

df_status df_mesh_counts(const char* domain, int n, int* n_cells, int* n_edges,
                         int* n_boundary_edges) {
  if (!domain)
    return fail(DF_ERR_NULL_ARGUMENT, "df_mesh_counts: domain is NULL");
  return guarded([&] {
    debyefem::DomainKind kind;
    if (std::string(domain) == "unit_square")
      kind = debyefem::DomainKind::UnitSquare;
    else if (std::string(domain) == "l_shape")
      kind = debyefem::DomainKind::LShape;
    else
      throw std::invalid_argument(std::string("unknown domain: ") + domain);
    debyefem::QuadMesh mesh = debyefem::build_mesh(kind, n);
    if (n_cells) *n_cells = mesh.n_cells();
    if (n_edges) *n_edges = mesh.n_edges();
    if (n_boundary_edges)
      *n_boundary_edges =
          static_cast<int>(debyefem::boundary_edges(mesh).size());
    return DF_OK;
  });
}

df_status df_simulate(const df_config* config, df_result** out) {
  if (!config || !out)
    return fail(DF_ERR_NULL_ARGUMENT, "df_simulate: NULL argument");
  return guarded([&] {
    debyefem::SimConfig sim = debyefem::parse_sim_config(config->config);
    debyefem::ErrorReport report = debyefem::run_case_row(sim, sim.n);
    *out = new df_result{std::move(report)};
    return DF_OK;
  });
}

df_status df_result_metric(const df_result* result, const char* name,
                           double* out) {
  if (!result || !name || !out)
    return fail(DF_ERR_NULL_ARGUMENT, "df_result_metric: NULL argument");
  const debyefem::ErrorReport& r = result->report;
  const std::string key(name);
  if (key == "N") {
    *out = r.n;
  } else if (key == "errE") {
    *out = r.err_E;
  } else if (key == "errP") {
    *out = r.err_P;
  } else if (key == "errCurlE") {
    *out = r.err_curl_E;
  } else if (key == "SerrE" || key == "SerrP") {
    const auto& opt = key == "SerrE" ? r.serr_E : r.serr_P;
    if (!opt)
      return fail(DF_ERR_INVALID,
                  "df_result_metric: " + key +
                      " requires postprocess = true in the config");
    *out = *opt;
  } else if (key == "runtime_seconds") {
    *out = r.runtime_seconds;
  } else if (key == "steps") {
    *out = r.diagnostics.steps_taken;
  } else if (key == "total_linear_iters") {
    *out = r.diagnostics.total_linear_iters;
  } else if (key == "max_linear_iters") {
    *out = r.diagnostics.max_linear_iters;
  } else if (key == "max_newton_iters") {
    *out = r.diagnostics.max_newton_iters;
  } else if (key == "max_abs_P") {
    *out = r.diagnostics.max_abs_P;
  } else if (key == "law_range_warning") {
    *out = r.diagnostics.law_range_warning ? 1.0 : 0.0;
  } else {
    return fail(DF_ERR_INVALID, "df_result_metric: unknown metric: " + key);
  }
  return DF_OK;
}

void df_result_destroy(df_result* result) { delete result; }

df_status df_dt_bound(const df_config* config, double* out) {
  if (!config || !out)
    return fail(DF_ERR_NULL_ARGUMENT, "df_dt_bound: NULL argument");
  return guarded([&] {
    debyefem::SimConfig sim = debyefem::parse_sim_config(config->config);
    *out = debyefem::dt_admissible_bound(sim.params(), sim.law());
    return DF_OK;
  });
}

df_status df_converge_csv(const df_config* config, char** out_csv) {
  if (!config || !out_csv)
    return fail(DF_ERR_NULL_ARGUMENT, "df_converge_csv: NULL argument");
  return guarded([&] {
    debyefem::SimConfig sim = debyefem::parse_sim_config(config->config);
    *out_csv = dup_string(debyefem::converge_csv(sim));
    return DF_OK;
  });
}

df_status df_write_snapshots(const df_config* config, const char* out_dir) {
  if (!config || !out_dir)
    return fail(DF_ERR_NULL_ARGUMENT, "df_write_snapshots: NULL argument");
  return guarded([&] {
    debyefem::SimConfig sim = debyefem::parse_sim_config(config->config);
    debyefem::write_snapshots(sim, out_dir);
    return DF_OK;
  });
}

df_status df_run_checks(char** out_report, int* out_failures) {
  return guarded([&] {
    std::ostringstream report;
    const int failures = debyefem::run_checks(report);
    if (out_report) *out_report = dup_string(report.str());
    if (out_failures) *out_failures = failures;
    return DF_OK;
  });
}

void df_string_free(char* s) { delete[] s; }

}  // extern "C"
