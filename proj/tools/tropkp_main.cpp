// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "tropkp/tropkp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertify = 2;

struct Options {
  int genus = 0;
  int k = 0;
  int n = 0;
  std::string config;
  std::string out;
  bool json = false;
  int samples = -1;
  long long seed = -1;
  double tolerance = -1;
  double lo = -1.0, hi = 1.0, t = 0.0;
  int steps = 21;
};

using ConfigPtr = std::unique_ptr<tropkp_config, decltype(&tropkp_config_free)>;
using ResultPtr = std::unique_ptr<tropkp_result, decltype(&tropkp_result_free)>;

int fail(const char* what) {
  std::cerr << "tropkp: " << what << ": " << tropkp_last_error() << '\n';
  return kExitUsage;
}

ConfigPtr load_config(const Options& o) {
  tropkp_config* raw = nullptr;
  if (tropkp_config_load(o.config.c_str(), &raw) != TROPKP_OK) return {nullptr, tropkp_config_free};
  ConfigPtr cfg(raw, tropkp_config_free);
  tropkp_config_set_sampling(cfg.get(), o.samples, o.seed < 0 ? 0ULL : static_cast<unsigned long long>(o.seed),
                             o.seed >= 0, o.tolerance);
  return cfg;
}

int write(const Options& o, const tropkp_result* r) {
  const char* text = tropkp_result_text(r);
  if (o.out.empty()) {
    std::cout << text;
    if (*text && text[std::char_traits<char>::length(text) - 1] != '\n') std::cout << '\n';
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "tropkp: cannot write " << o.out << '\n';
      return kExitUsage;
    }
    f << text << '\n';
  }
  return kExitOk;
}

template <class Call>
int run(const Options& o, const char* what, Call&& call) {
  tropkp_result* raw = nullptr;
  if (call(&raw) != TROPKP_OK) return fail(what);
  ResultPtr r(raw, tropkp_result_free);
  int rc = write(o, r.get());
  if (rc != kExitOk) return rc;
  return tropkp_result_passed(r.get()) ? kExitOk : kExitCertify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voronoi-Delaunay combinatorics of banana graphs and KP soliton certification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tropkp_version()));
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_flag("--json", o.json, "JSON output (the default for structured subcommands)");
  };
  auto add_genus = [&](CLI::App* sub) {
    sub->add_option("--genus,-g", o.genus, "Genus of the banana graph")->required()->check(CLI::Range(1, 12));
    add_out(sub);
  };
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config,-c", o.config, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--samples", o.samples, "Number of random sample points")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Seed for sample points")->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance", o.tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);
    add_out(sub);
  };

  auto* voronoi = app.add_subcommand("voronoi", "Voronoi vertices, classes and f-vector");
  add_genus(voronoi);
  auto* delaunay = app.add_subcommand("delaunay", "Delaunay sets, hypersimplex labels and shift vectors");
  add_genus(delaunay);
  auto* orient = app.add_subcommand("orient", "Vertex/orientation bijection and circuits");
  add_genus(orient);
  auto* matroid = app.add_subcommand("matroid", "Matroid bases at both graph vertices");
  add_genus(matroid);
  auto* limits = app.add_subcommand("limits", "Limit Riemann matrix, periods and Abel map");
  add_config(limits);
  auto* param = app.add_subcommand("param", "Hirota parameters, matrices and conversions");
  add_config(param);
  auto* certify = app.add_subcommand("certify", "Exact Hirota and numeric KP certification");
  add_config(certify);
  auto* eqs = app.add_subcommand("eqs", "Quartic relations of the hypersimplex Hirota variety");
  eqs->add_option("--k", o.k, "Rank")->required()->check(CLI::PositiveNumber);
  eqs->add_option("--n", o.n, "Ground set size")->required()->check(CLI::Range(2, 12));
  add_out(eqs);
  auto* field = app.add_subcommand("field", "CSV grid x,y,t,u of the solution");
  add_config(field);
  field->add_option("--min", o.lo, "Lower bound of x and y");
  field->add_option("--max", o.hi, "Upper bound of x and y");
  field->add_option("--steps", o.steps, "Grid points per axis")->check(CLI::Range(2, 2000));
  field->add_option("--time,-t", o.t, "Time slice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto by_genus = [&](auto fn, const char* what) {
    return run(o, what, [&](tropkp_result** r) { return fn(o.genus, r); });
  };
  auto by_config = [&](auto fn, const char* what) {
    ConfigPtr cfg = load_config(o);
    if (!cfg) return fail("config");
    return run(o, what, [&](tropkp_result** r) { return fn(cfg.get(), r); });
  };

  if (*voronoi) return by_genus(tropkp_voronoi, "voronoi");
  if (*delaunay) return by_genus(tropkp_delaunay, "delaunay");
  if (*orient) return by_genus(tropkp_orient, "orient");
  if (*matroid) return by_genus(tropkp_matroid, "matroid");
  if (*limits) return by_config(tropkp_limits, "limits");
  if (*param) return by_config(tropkp_param, "param");
  if (*certify) return by_config(tropkp_certify, "certify");
  if (*eqs) return run(o, "eqs", [&](tropkp_result** r) { return tropkp_eqs(o.k, o.n, r); });
  if (*field) {
    ConfigPtr cfg = load_config(o);
    if (!cfg) return fail("config");
    return run(o, "field", [&](tropkp_result** r) { return tropkp_field(cfg.get(), o.lo, o.hi, o.steps, o.t, r); });
  }
  return kExitUsage;
}
