#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tropkp/app.hpp"

using namespace tropkp;
using nlohmann::json;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
const std::string kData = TROPKP_TEST_DATA;
}  // namespace

TEST_CASE("config parsing") {
  auto cfg = parse_config_text(slurp(kData + "/g3k2.json"));
  CHECK(cfg.genus == 3);
  CHECK(cfg.class_k == 2);
  CHECK(cfg.seed == 7);
  REQUIRE(cfg.beta.has_value());
  auto round = parse_config(config_to_json(cfg));
  CHECK(round.kappas == cfg.kappas);
  CHECK(*round.beta == *cfg.beta);

  CHECK_THROWS_AS(parse_config_text(slurp(kData + "/bad_config.json")), Error);
  CHECK_THROWS_AS(parse_config_text("{"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"genus":2,"kappas":["0","1","2"],"class_k":1})"), ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"genus":2,"kappas":["0","1"],"class_k":1,"beta":["1","1"]})"), ConfigError);
  CHECK_THROWS_AS(
      parse_config_text(R"({"genus":2,"kappas":["0","1","2"],"class_k":1,"beta":["1","1"],"lambda":["1","1"]})"),
      ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"genus":2,"kappas":["0","1","2"],"class_k":3,"beta":["1","1"]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text(R"({"genus":2,"kappas":["0","1","2"],"class_k":1,"vertex_choice":"v3","beta":["1","1"]})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config_text(
                      R"({"genus":2,"kappas":["0","1","2"],"class_k":1,"divisor":{"points":["1/2","3/2"],"split_k":2,"p0_component":"X+"}})"),
                  ConfigError);
  auto nested = parse_config_text(
      R"({"genus":2,"kappas":["0","1","2"],"class_k":1,"parametrization":{"lambda":["1","2"]}})");
  CHECK(nested.lambda.has_value());
}

TEST_CASE("subcommand documents") {
  auto v = run_voronoi(3);
  CHECK(v["total"] == 14);
  CHECK(v["f_vector"] == json::array({14, 24, 12}));
  CHECK(run_delaunay(2).contains("vertices"));
  CHECK(run_orient(3)["strongly_connected_count"] == 14);
  CHECK(run_matroid(2).is_object());
  CHECK(run_eqs(2, 4)["relation_count"] == 7);

  auto cfg = parse_config_text(slurp(kData + "/g3k2.json"));
  auto lim = run_limits(cfg);
  CHECK(lim["exp_R"][0][1] == "1/4");
  auto par = run_param(cfg);
  CHECK(par["alphas"]["13"] == "1");
  auto cert = run_certify(cfg);
  CHECK(cert["passed"] == true);
  CHECK(cert["exact_all_zero"] == true);
}

TEST_CASE("certification fails off the variety") {
  auto cfg = parse_config_text(slurp(kData + "/g3k2.json"));
  cfg.tolerance = 1e-300;
  CHECK(run_certify(cfg)["passed"] == false);
}

TEST_CASE("all parametrizations certify") {
  for (const char* text : {
           R"({"genus":3,"kappas":["0","1","2","3"],"class_k":2,"lambda":["1","2","3"]})",
           R"({"genus":3,"kappas":["0","1","2","3"],"class_k":2,"divisor":{"points":["1/2","3/2","5/2"],"split_k":2,"p0_component":"X+"}})",
           R"({"genus":3,"kappas":["0","1","2","3"],"class_k":1,"vertex_choice":"v2","divisor":{"points":["1/2","3/2","5/2"],"split_k":3,"p0_component":"X-"}})",
           R"({"genus":4,"kappas":["-3/2","1/3","2","7/5","5"],"class_k":3,"vertex_choice":"v2","beta":["2","1/3","5","3/7"]})"}) {
    auto cert = run_certify(parse_config_text(text));
    CHECK(cert["passed"] == true);
  }
}

TEST_CASE("field grid") {
  auto cfg = parse_config_text(slurp(kData + "/g3k2.json"));
  auto csv = run_field(cfg, -1, 1, 3, 0);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,t,u");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 9);
  CHECK_THROWS_AS(run_field(cfg, 1, -1, 3, 0), InvalidArgument);
}
