#pragma once

// Subcommand bodies shared by the C API and the command-line tool. Each
// returns a JSON document with sorted keys and rationals as "p/q" strings.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tropkp/hirota_param.hpp"

namespace tropkp {

struct RunConfig {
  int genus = 0;
  RatVec kappas;
  int class_k = 1;
  GraphVertex vertex_choice = GraphVertex::V1;
  std::optional<RatVec> beta;
  std::optional<RatVec> lambda;
  std::optional<Divisor> divisor;
  int samples = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
};

/// Throws ConfigError on malformed or inconsistent input.
RunConfig parse_config(const nlohmann::json& j);
RunConfig parse_config_text(const std::string& text);
nlohmann::json config_to_json(const RunConfig& cfg);

/// Hirota point of the configured parametrization.
HirotaPoint hirota_point(const RunConfig& cfg);

nlohmann::json run_voronoi(int genus);
nlohmann::json run_delaunay(int genus);
nlohmann::json run_orient(int genus);
nlohmann::json run_matroid(int genus);
nlohmann::json run_limits(const RunConfig& cfg);
nlohmann::json run_param(const RunConfig& cfg);
/// Has a boolean "passed" that is false whenever an exact residual is nonzero.
nlohmann::json run_certify(const RunConfig& cfg);
nlohmann::json run_eqs(int k, int n);
/// CSV with header x,y,t,u over a steps x steps grid of [lo, hi]^2 at time t.
std::string run_field(const RunConfig& cfg, double lo, double hi, int steps, double t);

}  // namespace tropkp
