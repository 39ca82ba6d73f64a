#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tropkp/hirota_eqs.hpp"
#include "tropkp/hirota_param.hpp"
#include "tropkp/subsets.hpp"
#include "tropkp/tau_kp.hpp"
#include "tropkp/voronoi.hpp"

using namespace tropkp;
using tropkp::testing::RationalSource;
using tropkp::testing::rv;

namespace {

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Brute-force pair counts of 1_I + 1_J over unordered distinct labels.
std::map<IntVec, long> pair_counts(int k, int n) {
  std::map<IntVec, long> m;
  auto L = k_subsets(n, k);
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j) ++m[add(indicator(L[i], n), indicator(L[j], n))];
  return m;
}

}  // namespace

TEST_CASE("squared set of the (2,4) hypersimplex") {
  auto sq = squared_set(2, 4);
  REQUIRE(sq.size() == 13);
  int singles = 0;
  for (const auto& p : sq) {
    if (p.d == IntVec{1, 1, 1, 1}) {
      CHECK(p.pairs.size() == 3);
      CHECK(p.two_count == 0);
    } else {
      CHECK(p.pairs.size() == 1);
      CHECK(p.two_count == 1);
      ++singles;
    }
  }
  CHECK(singles == 12);
}

TEST_CASE("squared set multiplicities match the closed formula") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      auto brute = pair_counts(k, n);
      auto sq = squared_set(k, n);
      REQUIRE(sq.size() == brute.size());
      for (const auto& p : sq) {
        CHECK(static_cast<long>(p.pairs.size()) == brute.at(p.d));
        long m = k - p.two_count;
        CHECK(static_cast<long>(p.pairs.size()) == binomial(2 * m, m) / 2);
      }
    }
  long mx = 0;
  for (const auto& p : squared_set(3, 6)) mx = std::max<long>(mx, static_cast<long>(p.pairs.size()));
  CHECK(mx == 10);
  // k = 1: exactly the vertices of the (2, n) hypersimplex, once each.
  auto s1 = squared_set(1, 5);
  CHECK(s1.size() == 10);
  for (const auto& p : s1) CHECK(p.pairs.size() == 1);
}

TEST_CASE("face direction classes for (2,4)") {
  auto rels = face_direction_classes(2, 4);
  REQUIRE(rels.size() == 7);
  for (int i = 0; i < 6; ++i) {
    CHECK(rels[i].dimension() == 1);
    CHECK(rels[i].terms.size() == 1);
  }
  const auto& big = rels[6];
  CHECK(big.dimension() == 3);
  CHECK(big.direction == IntVec{1, 2, 3, 4});
  REQUIRE(big.terms.size() == 3);
  CHECK(big.terms[0].first == IntVec{1, 2});
  CHECK(big.terms[0].second == IntVec{3, 4});
  CHECK(big.terms[1].first == IntVec{1, 3});
  CHECK(big.terms[1].second == IntVec{2, 4});
  CHECK(big.terms[2].first == IntVec{1, 4});
  CHECK(big.terms[2].second == IntVec{2, 3});
  CHECK(polynomial_string(big, 4) ==
        "a1100*a0011*((U1+U2-U3-U4)^4-4*(U1+U2-U3-U4)*(W1+W2-W3-W4)+3*(V1+V2-V3-V4)^2)"
        "+a1010*a0101*((U1-U2+U3-U4)^4-4*(U1-U2+U3-U4)*(W1-W2+W3-W4)+3*(V1-V2+V3-V4)^2)"
        "+a1001*a0110*((U1-U2-U3+U4)^4-4*(U1-U2-U3+U4)*(W1-W2-W3+W4)+3*(V1-V2-V3+V4)^2)");
  CHECK(polynomial_string(rels[0], 4) == "a1001*a0101*((U1-U2)^4-4*(U1-U2)*(W1-W2)+3*(V1-V2)^2)");
  auto j = to_json(big, 4);
  CHECK(j["dimension"] == 3);
}

TEST_CASE("direction counts") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      long expected = 0;
      for (int l = 1; l <= std::min(k, n - k); ++l) expected += binomial(n, 2 * l);
      CHECK(static_cast<long>(face_direction_classes(k, n).size()) == expected);
    }
}

TEST_CASE("relations vanish on the parametrized component") {
  RationalSource src(51);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (auto v : {GraphVertex::V1, GraphVertex::V2}) {
        auto hp = alpha_from_beta(make_kappas(src.distinct(n, false)), src.positives(n - 1), k, v);
        // v2 labels are complements, of size n - k.
        int size = v == GraphVertex::V1 ? k : n - k;
        for (const auto& val : instantiate_and_check(face_direction_classes(size, n), hp)) CHECK(val == 0);
        for (const auto& val : instantiate_and_check(point_relations(size, n), hp)) CHECK(val == 0);
        CHECK(relation_values_by_lattice(hp) == hirota_residual(tau_from_hirota_point(hp)));
      }
  auto hp = alpha_from_beta(make_kappas(rv({"0", "1", "2"})), rv({"1", "1"}), 1);
  CHECK_THROWS_AS(instantiate_and_check(face_direction_classes(2, 4), hp), InvalidArgument);
}

TEST_CASE("relations are homogeneous of degree two in alpha") {
  auto kc = make_kappas(rv({"-1", "1/3", "1", "5/2"}));
  auto hp = alpha_from_beta(kc, rv({"2", "1/2", "3"}), 2);
  hp.uvw.U[0] += 1;  // leave the variety
  auto rels = face_direction_classes(2, 4);
  auto base = instantiate_and_check(rels, hp);
  bool some_nonzero = false;
  for (const auto& b : base) some_nonzero = some_nonzero || b != 0;
  CHECK(some_nonzero);
  for (auto& [J, a] : hp.alphas) a *= 3;
  auto scaled = instantiate_and_check(rels, hp);
  for (std::size_t i = 0; i < rels.size(); ++i) CHECK(scaled[i] == 9 * base[i]);
}

TEST_CASE("faces with one direction give proportional quartics") {
  // With theta coefficients a_c and arbitrary periods, translating a face by
  // u scales its quartic by exp(u^T R d + u^T R u).
  int k = 2, n = 5, g = n - 1;
  RationalSource src(52);
  auto kc = make_kappas(src.distinct(n, false));
  auto R = limit_R(kc);
  auto s = shift_vector(build_banana(g), canonical_vertex(g, k)).s;
  HirotaPoint hp;
  hp.class_k = k;
  hp.n = n;
  for (const auto& J : k_subsets(n, k)) {
    auto c = lattice_point(J, k, g);
    hp.lattice[J] = c;
    hp.alphas[J] = theta_coefficient(R, c);
  }
  for (int i = 0; i < g; ++i) {
    hp.uvw.U.push_back(src.nonzero());
    hp.uvw.V.push_back(src.nonzero());
    hp.uvw.W.push_back(src.nonzero());
  }
  auto rels = point_relations(k, n);
  std::map<IntVec, std::vector<const QuarticRelation*>> by_dir;
  for (const auto& r : rels) by_dir[r.direction].push_back(&r);
  int compared = 0;
  for (const auto& [dir, group] : by_dir) {
    const auto* r0 = group.front();
    auto d0 = label_sum_to_lattice(r0->representative, s);
    Rational v0 = evaluate_relation(*r0, hp);
    REQUIRE(v0 != 0);
    for (const auto* r : group) {
      auto d = label_sum_to_lattice(r->representative, s);
      IntVec u(g);
      for (int i = 0; i < g; ++i) {
        REQUIRE((d[i] - d0[i]) % 2 == 0);
        u[i] = (d[i] - d0[i]) / 2;
      }
      Rational factor = exp_bilinear(R, u, d0) * quadratic_form(R, u).exp();
      CHECK(evaluate_relation(*r, hp) == factor * v0);
      ++compared;
    }
  }
  CHECK(compared == static_cast<int>(rels.size()));
}

TEST_CASE("label sums translate to lattice sums") {
  IntVec s{1, 1, 0, 0};
  // {1,2} + {3,4} = (1,1,1,1): lattice (0,0,0) + (1,-1,-1).
  CHECK(label_sum_to_lattice({1, 1, 1, 1}, s) == IntVec{1, -1, -1});
  CHECK(label_sum_to_lattice({2, 2, 0, 0}, s) == IntVec{0, 0, 0});
  CHECK_THROWS_AS(label_sum_to_lattice({1, 1, 1}, s), InvalidArgument);
  CHECK_THROWS_AS(label_sum_to_lattice({2, 1, 1, 1}, s), InvalidArgument);
}
