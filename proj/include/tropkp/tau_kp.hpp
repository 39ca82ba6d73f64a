#pragma once

// Tau functions as finite exponential sums: exact Hirota certification and
// high-precision evaluation of u = 2 (log tau)_xx and the KP residual.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "tropkp/hirota_param.hpp"

namespace tropkp {

using Wave = std::array<Rational, 3>;  // (x, y, t) frequencies

struct TauTerm {
  Rational coefficient;
  IntVec key;  // lattice point, or indicator vector of a basis label
  Wave wave;
};

struct TauFunction {
  std::vector<TauTerm> terms;
};

/// tau_A = sum_J A_J K_J exp(sum_J (k x + k^2 y + k^3 t)).
TauFunction tau_from_grassmannian(const GrassmannPoint& A, const KappaConfig& kc);
/// tau = sum_c alpha_c exp(c.U x + c.V y + c.W t) over the Delaunay points.
TauFunction tau_from_theta(const std::map<IntVec, Rational>& alphas, const PeriodVectors& p,
                           const std::vector<IntVec>& points);
/// Theta form of a Hirota point, keyed by lattice points.
TauFunction tau_from_hirota_point(const HirotaPoint& hp);

/// P(x, y, t) = x^4 - 4 x t + 3 y^2.
Rational hirota_P(const Rational& x, const Rational& y, const Rational& t);

/// Per lattice sum d: sum over unordered pairs with key_i + key_j = d of
/// a_i a_j P(wave_i - wave_j). tau solves KP iff every value is zero.
std::map<IntVec, Rational> hirota_residual(const TauFunction& tau);
/// Same sums grouped by the exact wave sum instead.
std::map<Wave, Rational> hirota_residual_by_wave(const TauFunction& tau);
/// Each wave group equals the total of the lattice groups sharing its wave sum.
bool residual_groupings_agree(const TauFunction& tau);
bool all_zero(const std::map<IntVec, Rational>& residual);

/// Working precision in decimal digits for numeric evaluation. Defaults to
/// 30, or TROPKP_PRECISION when set. The setting is process-wide; change it
/// before starting concurrent evaluations.
void set_working_precision(unsigned digits);
unsigned working_precision();

struct SamplePoint {
  double x, y, t;
};

std::vector<SamplePoint> random_samples(std::size_t count, std::uint64_t seed, double lo = -1.0, double hi = 1.0);

double evaluate_u(const TauFunction& tau, double x, double y, double t);
/// (-4 u_t + 6 u u_x + u_xxx)_x + 3 u_yy at one point.
double kp_residual_at(const TauFunction& tau, double x, double y, double t);
/// max |residual| over the samples.
double kp_residual_numeric(const TauFunction& tau, const std::vector<SamplePoint>& samples);
/// max |u2(x, y, t) - u1(-x, -y, -t)|.
double spacetime_inversion_check(const TauFunction& tau_v1, const TauFunction& tau_v2,
                                 const std::vector<SamplePoint>& samples);

}  // namespace tropkp
