#include "tropkp/tau_kp.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>

#include "tropkp/subsets.hpp"

namespace tropkp {

namespace mp = boost::multiprecision;
using Real = mp::mpfr_float;

TauFunction tau_from_grassmannian(const GrassmannPoint& A, const KappaConfig& kc) {
  if (A.n != kc.n()) throw InvalidArgument("Grassmannian point and kappas differ in n");
  TauFunction tau;
  for (const auto& [J, minor] : A.minors) {
    if (minor == 0) continue;
    TauTerm term;
    term.coefficient = minor * vandermonde_minor(kc, J);
    term.key = indicator(J, A.n);
    term.wave = {Rational(0), Rational(0), Rational(0)};
    for (long j : J) {
      const Rational& x = kc[j];
      term.wave[0] += x;
      term.wave[1] += x * x;
      term.wave[2] += x * x * x;
    }
    tau.terms.push_back(std::move(term));
  }
  return tau;
}

TauFunction tau_from_theta(const std::map<IntVec, Rational>& alphas, const PeriodVectors& p,
                           const std::vector<IntVec>& points) {
  TauFunction tau;
  for (const auto& c : points) {
    auto it = alphas.find(c);
    if (it == alphas.end()) throw InvalidArgument("no alpha for lattice point " + to_string(std::span<const long>(c)));
    if (it->second == 0) continue;
    TauTerm term;
    term.coefficient = it->second;
    term.key = c;
    term.wave = {dot(c, p.U), dot(c, p.V), dot(c, p.W)};
    tau.terms.push_back(std::move(term));
  }
  return tau;
}

TauFunction tau_from_hirota_point(const HirotaPoint& hp) {
  std::map<IntVec, Rational> by_c;
  std::vector<IntVec> points;
  for (const auto& [J, a] : hp.alphas) {
    const IntVec& c = hp.lattice.at(J);
    by_c[c] = a;
    points.push_back(c);
  }
  std::sort(points.begin(), points.end());
  return tau_from_theta(by_c, hp.uvw, points);
}

Rational hirota_P(const Rational& x, const Rational& y, const Rational& t) {
  Rational x2 = x * x;
  return x2 * x2 - 4 * x * t + 3 * y * y;
}

namespace {

template <class KeyFn, class Map>
void fold_pairs(const TauFunction& tau, KeyFn key_of, Map& out) {
  const auto& T = tau.terms;
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      Rational v = T[i].coefficient * T[j].coefficient *
                   hirota_P(T[i].wave[0] - T[j].wave[0], T[i].wave[1] - T[j].wave[1], T[i].wave[2] - T[j].wave[2]);
      out[key_of(T[i], T[j])] += v;
    }
}

IntVec key_sum(const TauTerm& a, const TauTerm& b) {
  if (a.key.size() != b.key.size()) throw InvalidArgument("tau terms have keys of different length");
  IntVec d(a.key.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.key[i] + b.key[i];
  return d;
}

Wave wave_sum(const TauTerm& a, const TauTerm& b) {
  return {a.wave[0] + b.wave[0], a.wave[1] + b.wave[1], a.wave[2] + b.wave[2]};
}

}  // namespace

std::map<IntVec, Rational> hirota_residual(const TauFunction& tau) {
  std::map<IntVec, Rational> out;
  fold_pairs(tau, key_sum, out);
  return out;
}

std::map<Wave, Rational> hirota_residual_by_wave(const TauFunction& tau) {
  std::map<Wave, Rational> out;
  fold_pairs(tau, wave_sum, out);
  return out;
}

bool residual_groupings_agree(const TauFunction& tau) {
  auto by_key = hirota_residual(tau);
  auto by_wave = hirota_residual_by_wave(tau);
  // Map every lattice sum to its wave sum through any pair realizing it.
  std::map<IntVec, Wave> wave_of;
  const auto& T = tau.terms;
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      IntVec d = key_sum(T[i], T[j]);
      Wave w = wave_sum(T[i], T[j]);
      auto [it, fresh] = wave_of.emplace(d, w);
      if (!fresh && it->second != w) return false;
    }
  std::map<Wave, Rational> folded;
  for (const auto& [d, v] : by_key) folded[wave_of.at(d)] += v;
  return folded == by_wave;
}

bool all_zero(const std::map<IntVec, Rational>& residual) {
  return std::all_of(residual.begin(), residual.end(), [](const auto& kv) { return kv.second == 0; });
}

// ---- numeric layer ----

namespace {

std::once_flag precision_once;
std::atomic<unsigned> precision_digits{30};

void init_precision() {
  std::call_once(precision_once, [] {
    if (const char* env = std::getenv("TROPKP_PRECISION")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 16 && v <= 10000) precision_digits = static_cast<unsigned>(v);
    }
    Real::default_precision(precision_digits.load());
  });
}

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

struct NumericTerm {
  Real log_abs;
  int sign;
  std::array<Real, 3> wave;
};

std::vector<NumericTerm> numeric_terms(const TauFunction& tau) {
  init_precision();
  if (tau.terms.empty()) throw InvalidArgument("empty tau function");
  std::vector<NumericTerm> out;
  for (const auto& t : tau.terms) {
    NumericTerm n;
    n.sign = t.coefficient < 0 ? -1 : 1;
    n.log_abs = log(to_real(abs(t.coefficient)));
    for (int a = 0; a < 3; ++a) n.wave[a] = to_real(t.wave[a]);
    out.push_back(std::move(n));
  }
  return out;
}

using Partition = std::vector<std::vector<int>>;

// Set partitions of {0..m-1} without singleton blocks (centered moments of
// order one vanish).
const std::vector<Partition>& partitions(int m) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Partition> all;
  Partition cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      for (const auto& b : cur)
        if (b.size() == 1) return;
      all.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return cache[m] = std::move(all);
}

// Joint cumulants of the wave components under the weights a_i e^{theta_i} / tau;
// these are exactly the mixed partial derivatives of log tau.
class LogTauDerivatives {
 public:
  LogTauDerivatives(const std::vector<NumericTerm>& terms, double x, double y, double t) {
    const Real X[3] = {Real(x), Real(y), Real(t)};
    std::vector<Real> expo;
    Real mx;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Real e = terms[i].log_abs + terms[i].wave[0] * X[0] + terms[i].wave[1] * X[1] + terms[i].wave[2] * X[2];
      if (i == 0 || e > mx) mx = e;
      expo.push_back(e);
    }
    Real total = 0, total_abs = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Real w = exp(expo[i] - mx);
      total_abs += w;
      weights_.push_back(terms[i].sign < 0 ? Real(-w) : w);
      total += weights_.back();
    }
    Real eps = pow(Real(10), -static_cast<int>(working_precision()) + 8);
    if (abs(total) <= eps * total_abs) throw NumericError("tau vanishes at the sample point");
    for (auto& w : weights_) w /= total;
    for (int a = 0; a < 3; ++a) {
      Real mean = 0;
      for (std::size_t i = 0; i < terms.size(); ++i) mean += weights_[i] * terms[i].wave[a];
      for (std::size_t i = 0; i < terms.size(); ++i) centered_[a].push_back(terms[i].wave[a] - mean);
    }
  }

  /// d^m log tau / d vars[0] ... d vars[m-1], with 0 = x, 1 = y, 2 = t.
  Real operator()(const std::vector<int>& vars) {
    Real sum = 0;
    for (const auto& part : partitions(static_cast<int>(vars.size()))) {
      Real prod = 1;
      for (const auto& block : part) {
        std::vector<int> key;
        for (int idx : block) key.push_back(vars[idx]);
        std::sort(key.begin(), key.end());
        prod *= moment(key);
      }
      const int b = static_cast<int>(part.size());
      Real coef = 1;
      for (int i = 2; i < b; ++i) coef *= i;
      sum += (b % 2 ? coef : Real(-coef)) * prod;
    }
    return sum;
  }

 private:
  Real moment(const std::vector<int>& key) {
    auto it = moments_.find(key);
    if (it != moments_.end()) return it->second;
    Real m = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      Real p = weights_[i];
      for (int a : key) p *= centered_[a][i];
      m += p;
    }
    return moments_[key] = m;
  }

  std::vector<Real> weights_;
  std::array<std::vector<Real>, 3> centered_;
  std::map<std::vector<int>, Real> moments_;
};

Real u_at(const std::vector<NumericTerm>& terms, double x, double y, double t) {
  LogTauDerivatives L(terms, x, y, t);
  return 2 * L({0, 0});
}

Real residual_at(const std::vector<NumericTerm>& terms, double x, double y, double t) {
  LogTauDerivatives L(terms, x, y, t);
  Real l2 = L({0, 0}), l3 = L({0, 0, 0}), l4 = L({0, 0, 0, 0});
  Real l3t = L({0, 0, 0, 2}), l6 = L({0, 0, 0, 0, 0, 0}), l2yy = L({0, 0, 1, 1});
  return 2 * (-4 * l3t + l6 + 3 * l2yy) + 24 * (l3 * l3 + l2 * l4);
}

}  // namespace

void set_working_precision(unsigned digits) {
  init_precision();
  if (digits < 16) throw InvalidArgument("working precision must be at least 16 digits");
  precision_digits = digits;
  Real::default_precision(digits);
}

unsigned working_precision() {
  init_precision();
  return precision_digits;
}

std::vector<SamplePoint> random_samples(std::size_t count, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<SamplePoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    SamplePoint s;
    s.x = dist(rng);
    s.y = dist(rng);
    s.t = dist(rng);
    out.push_back(s);
  }
  return out;
}

double evaluate_u(const TauFunction& tau, double x, double y, double t) {
  return u_at(numeric_terms(tau), x, y, t).convert_to<double>();
}

double kp_residual_at(const TauFunction& tau, double x, double y, double t) {
  return residual_at(numeric_terms(tau), x, y, t).convert_to<double>();
}

double kp_residual_numeric(const TauFunction& tau, const std::vector<SamplePoint>& samples) {
  auto terms = numeric_terms(tau);
  Real worst = 0;
  for (const auto& s : samples) worst = max(worst, Real(abs(residual_at(terms, s.x, s.y, s.t))));
  return worst.convert_to<double>();
}

double spacetime_inversion_check(const TauFunction& tau_v1, const TauFunction& tau_v2,
                                 const std::vector<SamplePoint>& samples) {
  auto t1 = numeric_terms(tau_v1), t2 = numeric_terms(tau_v2);
  Real worst = 0;
  for (const auto& s : samples) {
    Real d = abs(u_at(t2, s.x, s.y, s.t) - u_at(t1, -s.x, -s.y, -s.t));
    worst = max(worst, d);
  }
  return worst.convert_to<double>();
}

}  // namespace tropkp
