#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tropkp/graph_jacobian.hpp"
#include "tropkp/rational.hpp"
#include "tropkp/tropical_limit.hpp"

namespace tropkp::testing {

inline RatVec rv(std::initializer_list<const char*> xs) {
  RatVec v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

inline VoronoiVertex vx(std::initializer_list<const char*> xs, int k) { return {rv(xs), k}; }

// Small-height random rationals; seeded so every run sees the same data.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational nonzero(long max_num = 9, long max_den = 5) {
    std::uniform_int_distribution<long> num(1, max_num), den(1, max_den), sgn(0, 1);
    Rational q(num(rng_) * (sgn(rng_) ? 1 : -1), den(rng_));
    q.canonicalize();
    return q;
  }
  Rational positive(long max_num = 9, long max_den = 5) {
    Rational q = nonzero(max_num, max_den);
    return q < 0 ? Rational(-q) : q;
  }
  /// n distinct rationals; sorted when asked.
  RatVec distinct(int n, bool sorted) {
    RatVec v;
    while (static_cast<int>(v.size()) < n) {
      std::uniform_int_distribution<long> num(-20, 20), den(1, 4);
      Rational q(num(rng_), den(rng_));
      q.canonicalize();
      bool dup = false;
      for (const auto& x : v) dup = dup || x == q;
      if (!dup) v.push_back(q);
    }
    if (sorted) std::sort(v.begin(), v.end());
    return v;
  }
  RatVec positives(int n) {
    RatVec v;
    for (int i = 0; i < n; ++i) v.push_back(positive());
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// One point strictly inside each gap between consecutive sorted kappas.
inline RatVec interlaced_points(const RatVec& sorted_kappas, RationalSource& src) {
  RatVec p;
  std::uniform_int_distribution<long> t(1, 9);
  for (std::size_t i = 0; i + 1 < sorted_kappas.size(); ++i) {
    Rational w = frac(t(src.engine()), 10);
    p.push_back(sorted_kappas[i] + w * (sorted_kappas[i + 1] - sorted_kappas[i]));
  }
  return p;
}

}  // namespace tropkp::testing
