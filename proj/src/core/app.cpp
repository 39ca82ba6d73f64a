#include "tropkp/app.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "tropkp/hirota_eqs.hpp"
#include "tropkp/subsets.hpp"
#include "tropkp/tau_kp.hpp"
#include "tropkp/voronoi.hpp"

namespace tropkp {

using nlohmann::json;

namespace {

std::string label_key(const IntVec& J) {
  std::string s;
  for (long j : J) s += std::to_string(j);
  return s;
}

json rat_list(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json rat_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json rat_map(const std::map<IntVec, Rational>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[label_key(k)] = to_string(v);
  return o;
}

json lattice_map(const std::map<IntVec, Rational>& m) {
  json o = json::object();
  for (const auto& [k, v] : m) o[to_string(std::span<const long>(k))] = to_string(v);
  return o;
}

json vertex_json(const VoronoiVertex& v) { return {{"coords", rat_list(v.coords)}, {"class_k", v.class_k}}; }

RatVec parse_rat_list(const json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
  RatVec out;
  for (const auto& x : j) {
    try {
      if (x.is_string())
        out.push_back(parse_rational(x.get<std::string>()));
      else if (x.is_number_integer())
        out.emplace_back(x.get<long>());
      else
        throw ConfigError(std::string(what) + " entries must be rational strings or integers");
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string(what) + ": " + e.what());
    }
  }
  return out;
}

Component parse_component(const json& j) {
  std::string s = j.get<std::string>();
  if (s == "X+" || s == "XPlus" || s == "plus") return Component::XPlus;
  if (s == "X-" || s == "XMinus" || s == "minus") return Component::XMinus;
  throw ConfigError("p0_component must be \"X+\" or \"X-\", got \"" + s + "\"");
}

const char* component_name(Component c) { return c == Component::XPlus ? "X+" : "X-"; }

json periods_json(const PeriodVectors& p) {
  return {{"U", rat_list(p.U)}, {"V", rat_list(p.V)}, {"W", rat_list(p.W)}, {"component", component_name(p.component)}};
}

json double_json(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << v;
  return os.str();
}

KappaConfig kappas_of(const RunConfig& cfg) { return make_kappas(cfg.kappas); }

}  // namespace

HirotaPoint hirota_point(const RunConfig& cfg) {
  KappaConfig kc = kappas_of(cfg);
  if (cfg.beta) return alpha_from_beta(kc, *cfg.beta, cfg.class_k, cfg.vertex_choice);
  if (cfg.lambda) return alpha_from_lambda(kc, *cfg.lambda, cfg.class_k, cfg.vertex_choice);
  return alpha_from_divisor(kc, *cfg.divisor, cfg.class_k, cfg.vertex_choice);
}

namespace {

// beta of the configured parametrization; other inputs are pulled back
// through the inverse of the beta map.
RatVec beta_of(const RunConfig& cfg) {
  if (cfg.beta) return *cfg.beta;
  return invert_psi(hirota_point(cfg)).beta;
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  try {
    if (!j.contains("genus") || !j.contains("kappas")) throw ConfigError("config needs \"genus\" and \"kappas\"");
    cfg.genus = j.at("genus").get<int>();
    if (cfg.genus < 1) throw ConfigError("genus must be positive");
    cfg.kappas = parse_rat_list(j.at("kappas"), "kappas");
    if (static_cast<int>(cfg.kappas.size()) != cfg.genus + 1)
      throw ConfigError("kappas must have genus + 1 = " + std::to_string(cfg.genus + 1) + " entries");
    try {
      make_kappas(cfg.kappas);
    } catch (const Error& e) {
      throw ConfigError(std::string("kappas: ") + e.what());
    }
    cfg.class_k = j.value("class_k", 1);
    if (cfg.class_k < 1 || cfg.class_k > cfg.genus) throw ConfigError("class_k must lie in [1, genus]");
    std::string v = j.value("vertex_choice", std::string("v1"));
    if (v == "v1")
      cfg.vertex_choice = GraphVertex::V1;
    else if (v == "v2")
      cfg.vertex_choice = GraphVertex::V2;
    else
      throw ConfigError("vertex_choice must be \"v1\" or \"v2\"");

    const json& p = j.contains("parametrization") ? j.at("parametrization") : j;
    int present = 0;
    if (p.contains("beta")) {
      cfg.beta = parse_rat_list(p.at("beta"), "beta");
      ++present;
    }
    if (p.contains("lambda")) {
      cfg.lambda = parse_rat_list(p.at("lambda"), "lambda");
      ++present;
    }
    if (p.contains("divisor")) {
      const json& d = p.at("divisor");
      Divisor div;
      div.points = parse_rat_list(d.at("points"), "divisor.points");
      div.split_k = d.value("split_k", cfg.class_k);
      div.p0_component = d.contains("p0_component") ? parse_component(d.at("p0_component")) : Component::XPlus;
      cfg.divisor = div;
      ++present;
    }
    if (present != 1) throw ConfigError("exactly one of beta, lambda, divisor must be given");
    auto check_len = [&](const std::optional<RatVec>& v, const char* what) {
      if (!v) return;
      if (static_cast<int>(v->size()) != cfg.genus)
        throw ConfigError(std::string(what) + " must have genus = " + std::to_string(cfg.genus) + " entries");
      for (const auto& x : *v)
        if (x == 0) throw ConfigError(std::string(what) + " entries must be nonzero");
    };
    check_len(cfg.beta, "beta");
    check_len(cfg.lambda, "lambda");
    if (cfg.divisor) {
      if (static_cast<int>(cfg.divisor->points.size()) != cfg.genus)
        throw ConfigError("divisor.points must have genus entries");
      int want = cfg.vertex_choice == GraphVertex::V1 ? cfg.class_k : cfg.genus + 1 - cfg.class_k;
      if (cfg.divisor->split_k != want)
        throw ConfigError("divisor.split_k must be " + std::to_string(want) + " for this class and vertex");
    }
    cfg.samples = j.value("samples", 20);
    if (cfg.samples < 0) throw ConfigError("samples must be nonnegative");
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.tolerance = j.value("tolerance", 1e-8);
    if (!(cfg.tolerance > 0)) throw ConfigError("tolerance must be positive");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const RunConfig& cfg) {
  json j = {{"genus", cfg.genus},
            {"kappas", rat_list(cfg.kappas)},
            {"class_k", cfg.class_k},
            {"vertex_choice", cfg.vertex_choice == GraphVertex::V1 ? "v1" : "v2"},
            {"samples", cfg.samples},
            {"seed", cfg.seed},
            {"tolerance", cfg.tolerance}};
  if (cfg.beta) j["beta"] = rat_list(*cfg.beta);
  if (cfg.lambda) j["lambda"] = rat_list(*cfg.lambda);
  if (cfg.divisor)
    j["divisor"] = {{"points", rat_list(cfg.divisor->points)},
                    {"split_k", cfg.divisor->split_k},
                    {"p0_component", component_name(cfg.divisor->p0_component)}};
  return j;
}

json run_voronoi(int genus) {
  auto classes = voronoi_vertices(genus);
  json vs = json::object(), sizes = json::object();
  long total = 0;
  for (const auto& [k, list] : classes) {
    json arr = json::array();
    for (const auto& v : list) arr.push_back(rat_list(v.coords));
    vs[std::to_string(k)] = arr;
    sizes[std::to_string(k)] = list.size();
    total += static_cast<long>(list.size());
  }
  return {{"genus", genus}, {"classes", vs}, {"class_sizes", sizes}, {"total", total}, {"f_vector", f_vector(genus)}};
}

json run_delaunay(int genus) {
  BananaData data = build_banana(genus);
  json out = json::array();
  for (const auto& [k, list] : voronoi_vertices(genus))
    for (const auto& v : list) {
      json labels = json::object();
      for (const auto& [c, J] : normalize_delaunay(data, v)) labels[to_string(std::span<const long>(c))] = J;
      out.push_back({{"vertex", vertex_json(v)},
                     {"delaunay", delaunay_set(data, v).points},
                     {"labels", labels},
                     {"shift", shift_vector(data, v).s}});
    }
  return {{"genus", genus}, {"vertices", out}};
}

json run_orient(int genus) {
  BananaData data = build_banana(genus);
  json table = json::array(), circuits = json::array();
  for (const auto& [k, list] : voronoi_vertices(genus)) {
    Orientation ref = vertex_to_orientation(data, list.front());
    for (const auto& v : list) {
      Orientation o = vertex_to_orientation(data, v);
      table.push_back({{"vertex", vertex_json(v)}, {"signs", o.signs}, {"out_degree_v1", o.out_degree_v1}});
      if (!(v == list.front()))
        circuits.push_back({{"from", rat_list(list.front().coords)},
                            {"to", rat_list(v.coords)},
                            {"edges", *circuit_difference(ref, o)}});
    }
  }
  return {{"genus", genus},
          {"orientations", table},
          {"strongly_connected_count", strongly_connected_orientations(genus).size()},
          {"circuits", circuits}};
}

json run_matroid(int genus) {
  BananaData data = build_banana(genus);
  json out = json::array();
  for (const auto& [k, list] : voronoi_vertices(genus))
    for (const auto& v : list) {
      MatroidBases m1 = delaunaytroid(data, v, GraphVertex::V1), m2 = delaunaytroid(data, v, GraphVertex::V2);
      out.push_back({{"vertex", vertex_json(v)},
                     {"v1", {{"rank", m1.k}, {"bases", m1.bases}}},
                     {"v2", {{"rank", m2.k}, {"bases", m2.bases}}}});
    }
  return {{"genus", genus}, {"matroids", out}};
}

json run_limits(const RunConfig& cfg) {
  KappaConfig kc = kappas_of(cfg);
  RMatrix R = limit_R(kc);
  json expR = json::array();
  for (int i = 1; i <= kc.genus(); ++i) {
    json row = json::array();
    for (int j = 1; j <= kc.genus(); ++j) row.push_back(to_string(R(i, j).exp()));
    expR.push_back(row);
  }
  BananaData data = build_banana(kc.genus());
  auto D = delaunay_set(data, canonical_vertex(kc.genus(), cfg.class_k));
  PeriodVectors plus = uvw(kc, Component::XPlus), minus = uvw(kc, Component::XMinus);
  json disp = json::array();
  for (int j = 0; j < kc.genus(); ++j) disp.push_back(to_string(dispersion(plus.U[j], plus.V[j], plus.W[j])));
  json out = {{"exp_R", expR},
              {"theta_coefficients", lattice_map(theta_coefficients(R, D.points))},
              {"periods", {{"X+", periods_json(plus)}, {"X-", periods_json(minus)}}},
              {"dispersion", disp}};
  if (cfg.divisor) {
    json abel = json::array();
    for (const auto& a : abel_map(kc, *cfg.divisor)) abel.push_back({{"exp", to_string(a.exp())}, {"sign", a.sign}});
    out["abel_map"] = abel;
  }
  return out;
}

json run_param(const RunConfig& cfg) {
  KappaConfig kc = kappas_of(cfg);
  const int k = cfg.class_k;
  RatVec beta = beta_of(cfg), lambda = lambda_from_beta(kc, beta, k);
  HirotaPoint hp = hirota_point(cfg);
  GrassmannPoint A = matrix_A(kc, beta, k), At = matrix_A_tilde(kc, lambda, k);
  MinorCheck mc = verify_minor_identity(kc, beta, k);
  json out = {{"alphas", rat_map(hp.alphas)},
              {"periods", periods_json(hp.uvw)},
              {"beta", rat_list(beta)},
              {"lambda", rat_list(lambda)},
              {"A", {{"matrix", rat_matrix(A.matrix)}, {"pluecker", rat_map(A.pluecker)}}},
              {"A_tilde", {{"matrix", rat_matrix(At.matrix)}, {"pluecker", rat_map(At.pluecker)}}},
              {"A_equals_A_tilde", same_point(A, At)},
              {"minor_identity", mc.ok}};
  if (!mc.ok) out["minor_identity_failure"] = *mc.failing;
  if (cfg.divisor) {
    GrassmannPoint Ad = matrix_A_dual(kc, *cfg.divisor);
    out["A_dual"] = {{"matrix", rat_matrix(Ad.matrix)}, {"pluecker", rat_map(Ad.pluecker)}};
    if (kc.sorted_flag) out["dn_interlaced"] = check_dn_interlacing(kc, *cfg.divisor);
  }
  try {
    PsiPreimage pre = invert_psi(alpha_from_beta(kc, beta, k));
    out["psi_inverse"] = {{"kappas", rat_list(pre.kappas.kappas)},
                          {"beta", rat_list(pre.beta)},
                          {"round_trip", pre.kappas.kappas == kc.kappas && pre.beta == beta}};
  } catch (const DegenerateParameters& e) {
    out["psi_inverse"] = {{"error", e.what()}};
  }
  return out;
}

json run_certify(const RunConfig& cfg) {
  KappaConfig kc = kappas_of(cfg);
  HirotaPoint hp = hirota_point(cfg);
  TauFunction tau = tau_from_hirota_point(hp);
  auto residual = hirota_residual(tau);
  bool exact_zero = all_zero(residual);
  bool grouping = residual_groupings_agree(tau);
  bool cross = relation_values_by_lattice(hp) == residual;
  auto samples = random_samples(static_cast<std::size_t>(cfg.samples), cfg.seed);
  double numeric = kp_residual_numeric(tau, samples);

  // Space-time inversion against the opposite graph vertex of the same data.
  RunConfig other = cfg;
  other.vertex_choice = cfg.vertex_choice == GraphVertex::V1 ? GraphVertex::V2 : GraphVertex::V1;
  if (!cfg.beta) {
    other.divisor.reset();
    other.lambda.reset();
    other.beta = beta_of(cfg);
  }
  TauFunction tau_other = tau_from_hirota_point(hirota_point(other));
  double inversion = cfg.vertex_choice == GraphVertex::V1 ? spacetime_inversion_check(tau, tau_other, samples)
                                                          : spacetime_inversion_check(tau_other, tau, samples);

  json res = json::object();
  for (const auto& [d, v] : residual) res[to_string(std::span<const long>(d))] = to_string(v);
  bool passed = exact_zero && grouping && cross && numeric < cfg.tolerance && inversion < cfg.tolerance;
  json out = {{"config", config_to_json(cfg)},
          {"terms", tau.terms.size()},
          {"exact_residuals", res},
          {"exact_all_zero", exact_zero},
          {"grouping_agrees", grouping},
          {"relations_agree", cross},
          {"numeric_kp_max", double_json(numeric)},
          {"inversion_max", double_json(inversion)},
          {"working_precision", working_precision()}};

  // The dual matrix of a v1 divisor gives the inverted soliton through an
  // independent construction.
  if (cfg.divisor && cfg.vertex_choice == GraphVertex::V1) {
    GrassmannPoint A = matrix_A(kc, beta_of(cfg), cfg.class_k), Ad = matrix_A_dual(kc, *cfg.divisor);
    double dual = spacetime_inversion_check(tau_from_grassmannian(Ad, kc), tau_from_grassmannian(A, kc), samples);
    out["dual_inversion_max"] = double_json(dual);
    passed = passed && dual < cfg.tolerance;
  }
  out["passed"] = passed;
  return out;
}

json run_eqs(int k, int n) {
  auto sq = squared_set(k, n);
  json points = json::array();
  for (const auto& sp : sq) points.push_back({{"d", sp.d}, {"multiplicity", sp.pairs.size()}, {"two_count", sp.two_count}});
  json rels = json::array();
  for (const auto& r : face_direction_classes(k, n)) rels.push_back(to_json(r, n));
  return {{"k", k}, {"n", n}, {"squared_set", points}, {"relations", rels}, {"relation_count", rels.size()}};
}

std::string run_field(const RunConfig& cfg, double lo, double hi, int steps, double t) {
  if (steps < 2) throw InvalidArgument("field grid needs at least 2 steps");
  if (!(hi > lo)) throw InvalidArgument("field range must satisfy hi > lo");
  TauFunction tau = tau_from_hirota_point(hirota_point(cfg));
  std::ostringstream os;
  os << "x,y,t,u\n" << std::setprecision(12);
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j) {
      double x = lo + (hi - lo) * i / (steps - 1), y = lo + (hi - lo) * j / (steps - 1);
      os << x << ',' << y << ',' << t << ',' << evaluate_u(tau, x, y, t) << '\n';
    }
  return os.str();
}

}  // namespace tropkp
