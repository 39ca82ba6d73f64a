#include "tropkp/tropical_limit.hpp"

#include <algorithm>
#include <set>

namespace tropkp {

KappaConfig make_kappas(RatVec kappas) {
  if (kappas.size() < 2) throw InvalidArgument("need at least two branch points");
  for (auto& q : kappas) q.canonicalize();
  std::set<Rational> seen(kappas.begin(), kappas.end());
  if (seen.size() != kappas.size()) throw InvalidArgument("branch points must be pairwise distinct");
  KappaConfig kc;
  kc.sorted_flag = std::is_sorted(kappas.begin(), kappas.end());
  kc.kappas = std::move(kappas);
  return kc;
}

LogRational RMatrix::operator()(int i, int j) const {
  if (i == 0 || j == 0) return LogRational::zero();
  if (i < 0 || j < 0 || i > g_ || j > g_) throw InvalidArgument("R index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * g_ + (j - 1))];
}

void RMatrix::set(int i, int j, LogRational v) {
  entries_[static_cast<std::size_t>((i - 1) * g_ + (j - 1))] = v;
  entries_[static_cast<std::size_t>((j - 1) * g_ + (i - 1))] = v;
}

RMatrix limit_R(const KappaConfig& kc) {
  const int g = kc.genus();
  RMatrix R(g);
  for (int i = 1; i <= g; ++i) {
    R.set(i, i, LogRational(pow(kc[i + 1] - kc[1], -4)));
    for (int j = i + 1; j <= g; ++j) {
      Rational f = (kc[i + 1] - kc[j + 1]) / ((kc[i + 1] - kc[1]) * (kc[j + 1] - kc[1]));
      R.set(i, j, LogRational(f * f));
    }
  }
  return R;
}

LogRational quadratic_form(const RMatrix& R, const IntVec& c) {
  if (static_cast<int>(c.size()) != R.genus()) throw InvalidArgument("lattice vector dimension mismatch");
  LogRational s;
  for (int i = 1; i <= R.genus(); ++i)
    for (int j = 1; j <= R.genus(); ++j) {
      long m = c[i - 1] * c[j - 1];
      if (m) s += R(i, j) * m;
    }
  return s;
}

Rational exp_bilinear(const RMatrix& R, const IntVec& u, const IntVec& v) {
  LogRational s;
  for (int i = 1; i <= R.genus(); ++i)
    for (int j = 1; j <= R.genus(); ++j) {
      long m = u[i - 1] * v[j - 1];
      if (m) s += R(i, j) * m;
    }
  return s.exp();
}

Rational theta_coefficient(const RMatrix& R, const IntVec& c) { return quadratic_form(R, c).exp_half(); }

std::map<IntVec, Rational> theta_coefficients(const RMatrix& R, const std::vector<IntVec>& points) {
  std::map<IntVec, Rational> out;
  for (const auto& c : points) out[c] = theta_coefficient(R, c);
  return out;
}

PeriodVectors uvw(const KappaConfig& kc, Component component) {
  PeriodVectors p;
  p.component = component;
  const int sign = component == Component::XPlus ? 1 : -1;
  const Rational& k1 = kc[1];
  for (int j = 1; j <= kc.genus(); ++j) {
    const Rational& kj = kc[j + 1];
    p.U.push_back(sign * (k1 - kj));
    p.V.push_back(sign * (k1 * k1 - kj * kj));
    p.W.push_back(sign * (k1 * k1 * k1 - kj * kj * kj));
  }
  return p;
}

Rational dispersion(const Rational& u, const Rational& v, const Rational& w) {
  Rational u2 = u * u;
  return u2 * u2 + 3 * v * v - 4 * u * w;
}

void validate_divisor(const KappaConfig& kc, const Divisor& d) {
  if (static_cast<int>(d.points.size()) != kc.genus())
    throw InvalidArgument("divisor needs " + std::to_string(kc.genus()) + " points, got " +
                          std::to_string(d.points.size()));
  if (d.split_k < 0 || d.split_k > kc.genus()) throw InvalidArgument("split_k out of range");
  for (const auto& p : d.points)
    if (std::find(kc.kappas.begin(), kc.kappas.end(), p) != kc.kappas.end())
      throw DomainError("divisor point " + to_string(p) + " coincides with a branch point");
}

Rational divisor_function(const Divisor& d, const Rational& z) {
  Rational r = 1;
  for (int l = 0; l < static_cast<int>(d.points.size()); ++l) {
    Rational f = z - d.points[l];
    if (l < d.split_k) {
      r *= f;
    } else {
      if (f == 0) throw DomainError("divisor point " + to_string(d.points[l]) + " is a pole at z = " + to_string(z));
      r /= f;
    }
  }
  return r;
}

Rational K_prime(const KappaConfig& kc, int j) {
  Rational r = 1;
  for (int i = 1; i <= kc.n(); ++i)
    if (i != j) r *= kc[j] - kc[i];
  return r;
}

std::vector<SignedLog> abel_map(const KappaConfig& kc, const Divisor& d) {
  validate_divisor(kc, d);
  Rational base = divisor_function(d, kc[1]);
  std::vector<SignedLog> out;
  for (int i = 1; i <= kc.genus(); ++i) {
    Rational arg = divisor_function(d, kc[i + 1]) / base;
    SignedLog s;
    s.sign = arg < 0 ? -1 : 1;
    s.magnitude = LogRational(abs(arg));
    out.push_back(s);
  }
  return out;
}

}  // namespace tropkp
