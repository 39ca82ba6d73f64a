#include "tropkp/tropkp.h"

#include <fstream>
#include <sstream>
#include <string>

#include "tropkp/app.hpp"
#include "tropkp/tau_kp.hpp"

struct tropkp_config {
  tropkp::RunConfig cfg;
};

struct tropkp_result {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

tropkp_status code_of(tropkp::ErrorCode c) {
  switch (c) {
    case tropkp::ErrorCode::InvalidArgument: return TROPKP_E_INVALID_ARGUMENT;
    case tropkp::ErrorCode::Config: return TROPKP_E_CONFIG;
    case tropkp::ErrorCode::Degenerate: return TROPKP_E_DEGENERATE;
    case tropkp::ErrorCode::Domain: return TROPKP_E_DOMAIN;
    case tropkp::ErrorCode::Numeric: return TROPKP_E_NUMERIC;
    case tropkp::ErrorCode::Internal: return TROPKP_E_INTERNAL;
  }
  return TROPKP_E_UNKNOWN;
}

template <class F>
tropkp_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return TROPKP_OK;
  } catch (const tropkp::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return TROPKP_E_UNKNOWN;
  } catch (...) {
    last_error = "unknown failure";
    return TROPKP_E_UNKNOWN;
  }
}

tropkp_status emit(tropkp_result** out, const nlohmann::json& j, bool passed = true) {
  auto* r = new tropkp_result;
  r->text = j.dump(2);
  r->passed = passed;
  *out = r;
  return TROPKP_OK;
}

bool null_out(void* out) {
  if (out) return false;
  last_error = "null output pointer";
  return true;
}

}  // namespace

extern "C" {

const char* tropkp_version(void) { return "1.0.0"; }

const char* tropkp_last_error(void) { return last_error.c_str(); }

tropkp_status tropkp_set_precision(unsigned digits) {
  return guarded([&] { tropkp::set_working_precision(digits); });
}

tropkp_status tropkp_config_parse(const char* json_text, tropkp_config** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!json_text) throw tropkp::InvalidArgument("null config text");
    auto* c = new tropkp_config{tropkp::parse_config_text(json_text)};
    *out = c;
  });
}

tropkp_status tropkp_config_load(const char* path, tropkp_config** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!path) throw tropkp::InvalidArgument("null config path");
    std::ifstream in(path);
    if (!in) throw tropkp::ConfigError(std::string("cannot open config file ") + path);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = new tropkp_config{tropkp::parse_config_text(ss.str())};
  });
}

tropkp_status tropkp_config_set_sampling(tropkp_config* cfg, int samples, unsigned long long seed, int set_seed,
                                         double tolerance) {
  return guarded([&] {
    if (!cfg) throw tropkp::InvalidArgument("null config");
    if (samples >= 0) cfg->cfg.samples = samples;
    if (set_seed) cfg->cfg.seed = seed;
    if (tolerance > 0) cfg->cfg.tolerance = tolerance;
  });
}

void tropkp_config_free(tropkp_config* cfg) { delete cfg; }

#define TROPKP_GENUS_CALL(name, fn)                                        \
  tropkp_status name(int genus, tropkp_result** out) {                     \
    if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;                   \
    return guarded([&] { emit(out, tropkp::fn(genus)); });                 \
  }

TROPKP_GENUS_CALL(tropkp_voronoi, run_voronoi)
TROPKP_GENUS_CALL(tropkp_delaunay, run_delaunay)
TROPKP_GENUS_CALL(tropkp_orient, run_orient)
TROPKP_GENUS_CALL(tropkp_matroid, run_matroid)

#undef TROPKP_GENUS_CALL

tropkp_status tropkp_limits(const tropkp_config* cfg, tropkp_result** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!cfg) throw tropkp::InvalidArgument("null config");
    emit(out, tropkp::run_limits(cfg->cfg));
  });
}

tropkp_status tropkp_param(const tropkp_config* cfg, tropkp_result** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!cfg) throw tropkp::InvalidArgument("null config");
    emit(out, tropkp::run_param(cfg->cfg));
  });
}

tropkp_status tropkp_certify(const tropkp_config* cfg, tropkp_result** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!cfg) throw tropkp::InvalidArgument("null config");
    auto j = tropkp::run_certify(cfg->cfg);
    emit(out, j, j.at("passed").get<bool>());
  });
}

tropkp_status tropkp_eqs(int k, int n, tropkp_result** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] { emit(out, tropkp::run_eqs(k, n)); });
}

tropkp_status tropkp_field(const tropkp_config* cfg, double lo, double hi, int steps, double t, tropkp_result** out) {
  if (null_out(out)) return TROPKP_E_INVALID_ARGUMENT;
  return guarded([&] {
    if (!cfg) throw tropkp::InvalidArgument("null config");
    auto* r = new tropkp_result;
    try {
      r->text = tropkp::run_field(cfg->cfg, lo, hi, steps, t);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

const char* tropkp_result_text(const tropkp_result* r) { return r ? r->text.c_str() : ""; }

int tropkp_result_passed(const tropkp_result* r) { return r && r->passed ? 1 : 0; }

void tropkp_result_free(tropkp_result* r) { delete r; }

}  // extern "C"
