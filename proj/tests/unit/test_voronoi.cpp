#include <doctest.h>

#include "support.hpp"
#include "tropkp/subsets.hpp"
#include "tropkp/voronoi.hpp"

using namespace tropkp;
using tropkp::testing::rv;
using tropkp::testing::vx;

TEST_CASE("genus-2 hexagon") {
  auto v = voronoi_vertices(2);
  REQUIRE(v.size() == 2);
  std::vector<VoronoiVertex> c1{vx({"-1/3", "-1/3"}, 1), vx({"-1/3", "2/3"}, 1), vx({"2/3", "-1/3"}, 1)};
  std::vector<VoronoiVertex> c2{vx({"-2/3", "1/3"}, 2), vx({"1/3", "-2/3"}, 2), vx({"1/3", "1/3"}, 2)};
  CHECK(v[1] == c1);
  CHECK(v[2] == c2);
}

TEST_CASE("genus 1 has two vertices") {
  auto v = voronoi_vertices(1);
  CHECK(v.size() == 1);
  CHECK(v.at(1) == std::vector<VoronoiVertex>{vx({"-1/2"}, 1), vx({"1/2"}, 1)});
}

TEST_CASE("class sizes and totals") {
  for (int g = 1; g <= 8; ++g) {
    auto v = voronoi_vertices(g);
    long total = 0;
    for (int k = 1; k <= g; ++k) {
      CHECK(static_cast<long>(v[k].size()) == binomial(g + 1, k));
      total += static_cast<long>(v[k].size());
    }
    CHECK(total == 2 * ((1L << g) - 1));
  }
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(2) == std::vector<long>{6, 6});
  CHECK(f_vector(3) == std::vector<long>{14, 24, 12});
  CHECK(f_vector(5)[0] == 62);
  for (int g = 1; g <= 4; ++g) CHECK(f_vector_exhaustive(g) == f_vector(g));
}

TEST_CASE("canonical vertices") {
  CHECK(canonical_vertex(3, 2) == vx({"1/2", "-1/2", "-1/2"}, 2));
  CHECK(canonical_vertex(1, 1) == vx({"-1/2"}, 1));
  CHECK(canonical_vertex(4, 2) == vx({"3/5", "-2/5", "-2/5", "-2/5"}, 2));
  auto d = build_banana(4);
  auto a = canonical_vertex(4, 2);
  CHECK(voronoi_contains(d, a.coords));
  CHECK(delaunay_set(d, a).points.size() == 10);
  CHECK_THROWS_AS(canonical_vertex(3, 0), InvalidArgument);
  CHECK_THROWS_AS(canonical_vertex(3, 4), InvalidArgument);
}

TEST_CASE("lift and projection") {
  auto d = build_banana(2);
  auto L = lift(d, vx({"1/3", "1/3"}, 2));
  CHECK(L.coords == rv({"2/3", "-1/3", "-1/3"}));
  CHECK(L.signs == std::vector<int>{1, -1, -1});
  CHECK(lift(d, vx({"-1/3", "2/3"}, 1)).coords == rv({"1/3", "1/3", "-2/3"}));

  auto P = projection_matrix(2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(P(i, j) == (i == j ? Rational(2, 3) : Rational(-1, 3)));
  // The all-equal cube corners project to the origin.
  for (int g = 1; g <= 5; ++g) {
    auto Pg = projection_matrix(g);
    for (int i = 0; i <= g; ++i) {
      Rational row = 0;
      for (int j = 0; j <= g; ++j) row += Pg(i, j) * Rational(1, 2);
      CHECK(row == 0);
    }
  }
}

TEST_CASE("shift vectors") {
  CHECK(shift_vector(build_banana(3), vx({"1/2", "-1/2", "-1/2"}, 2)).s == IntVec{1, 1, 0, 0});
  CHECK(shift_vector(build_banana(3), vx({"-1/2", "1/2", "1/2"}, 2)).s == IntVec{0, 0, 1, 1});
  CHECK(shift_vector(build_banana(2), vx({"1/3", "1/3"}, 2)).s == IntVec{0, 1, 1});
  CHECK(lift_lattice({1, -1, 0}) == IntVec{0, -1, 1, 0});
}

TEST_CASE("hypersimplex labels") {
  auto d3 = build_banana(3);
  auto labels = normalize_delaunay(d3, vx({"1/2", "-1/2", "-1/2"}, 2));
  CHECK(labels.at({0, 0, 0}) == IntVec{1, 2});
  CHECK(labels.at({0, -1, 0}) == IntVec{2, 3});
  CHECK(labels.at({1, -1, -1}) == IntVec{3, 4});

  auto labels2 = normalize_delaunay(build_banana(2), vx({"1/3", "1/3"}, 2));
  std::vector<IntVec> got;
  for (const auto& [c, J] : labels2) got.push_back(J);
  std::sort(got.begin(), got.end());
  CHECK(got == k_subsets(3, 2));
  CHECK(labels2.at({0, 0}) == IntVec{2, 3});

  for (int g = 1; g <= 6; ++g) {
    auto d = build_banana(g);
    for (const auto& [k, vs] : voronoi_vertices(g))
      for (const auto& a : vs) {
        auto lab = normalize_delaunay(d, a);
        std::vector<IntVec> js;
        for (const auto& [c, J] : lab) js.push_back(J);
        std::sort(js.begin(), js.end());
        CHECK(js == k_subsets(g + 1, k));
      }
  }
}
