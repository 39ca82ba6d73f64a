#pragma once

// Limit data of the degenerating hyperelliptic family over rational branch
// points: Riemann matrix, theta coefficients, periods and the Abel map.

#include <map>
#include <vector>

#include "tropkp/rational.hpp"

namespace tropkp {

struct KappaConfig {
  RatVec kappas;  // kappa_1..kappa_n
  bool sorted_flag = false;

  int n() const { return static_cast<int>(kappas.size()); }
  int genus() const { return n() - 1; }
  /// 1-based access.
  const Rational& operator[](int j) const { return kappas.at(j - 1); }
};

/// Validates distinctness and n >= 2.
KappaConfig make_kappas(RatVec kappas);

// Symmetric g x g matrix of log-rationals, 1-based, with R(0, .) = R(., 0) = 0.
class RMatrix {
 public:
  RMatrix() = default;
  explicit RMatrix(int g) : g_(g), entries_(static_cast<std::size_t>(g * g)) {}

  int genus() const { return g_; }
  LogRational operator()(int i, int j) const;
  void set(int i, int j, LogRational v);

 private:
  int g_ = 0;
  std::vector<LogRational> entries_;
};

/// exp(R_ii) = (k_{i+1} - k_1)^-4, exp(R_ij) = f_ij^2 with
/// f_ij = (k_{i+1} - k_{j+1}) / ((k_{i+1} - k_1)(k_{j+1} - k_1)).
RMatrix limit_R(const KappaConfig& kc);

/// exp(c^T R c) as a log-rational.
LogRational quadratic_form(const RMatrix& R, const IntVec& c);
/// exp(u^T R v).
Rational exp_bilinear(const RMatrix& R, const IntVec& u, const IntVec& v);

/// a_c = exp(c^T R c / 2), exact.
Rational theta_coefficient(const RMatrix& R, const IntVec& c);
std::map<IntVec, Rational> theta_coefficients(const RMatrix& R, const std::vector<IntVec>& points);

enum class Component { XPlus, XMinus };

struct PeriodVectors {
  RatVec U, V, W;
  Component component = Component::XPlus;
};

PeriodVectors uvw(const KappaConfig& kc, Component component);

/// U^4 + 3 V^2 - 4 U W.
Rational dispersion(const Rational& u, const Rational& v, const Rational& w);

struct Divisor {
  RatVec points;  // p_1..p_g
  int split_k = 0;
  Component p0_component = Component::XPlus;
};

/// P(z) * prod_l Q_l(z) = prod_{l <= split} (z - p_l) / prod_{l > split} (z - p_l).
Rational divisor_function(const Divisor& d, const Rational& z);
/// K'(kappa_j) = prod_{i != j} (kappa_j - kappa_i).
Rational K_prime(const KappaConfig& kc, int j);

/// Limit Abel image; entry i has exp value P Q(k_{i+1}) / P Q(k_1).
std::vector<SignedLog> abel_map(const KappaConfig& kc, const Divisor& d);

void validate_divisor(const KappaConfig& kc, const Divisor& d);

}  // namespace tropkp
