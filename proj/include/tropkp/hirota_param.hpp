#pragma once

// Parametrizations of the main Hirota component by (beta, kappa),
// (lambda, kappa) and (divisor, kappa), together with the Grassmannian
// matrices A, A~ and the dual matrix.

#include <map>
#include <optional>
#include <vector>

#include "tropkp/matrix.hpp"
#include "tropkp/orientations.hpp"
#include "tropkp/tropical_limit.hpp"

namespace tropkp {

struct GrassmannPoint {
  int k = 0, n = 0;
  RatMatrix matrix;
  std::map<IntVec, Rational> minors;     // raw maximal minors, keyed by 1-based J
  std::map<IntVec, Rational> pluecker;   // scaled so the lex-first nonzero minor is 1
};

/// Computes all maximal minors; throws DegenerateParameters below full rank.
GrassmannPoint make_grassmann_point(RatMatrix m);
bool same_point(const GrassmannPoint& a, const GrassmannPoint& b);
std::map<IntVec, Rational> normalize_pluecker(const std::map<IntVec, Rational>& minors);

struct HirotaPoint {
  int class_k = 0;
  int n = 0;
  GraphVertex vertex_choice = GraphVertex::V1;
  std::map<IntVec, Rational> alphas;  // matroid basis label -> alpha
  std::map<IntVec, IntVec> lattice;   // label -> Delaunay lattice point of the canonical vertex
  PeriodVectors uvw;
};

/// K_J = prod_{i<j in J} (kappa_j - kappa_i).
Rational vandermonde_minor(const KappaConfig& kc, const IntVec& J);

/// K_J^2 recovered from the limit Riemann matrix alone.
Rational kj_squared_from_R(const RMatrix& R, const IntVec& J);

/// Lattice point c_J in the Delaunay set of the canonical class-k vertex
/// whose hypersimplex label is J.
IntVec lattice_point(const IntVec& J, int k, int g);

Rational alpha_exp_form(const RMatrix& R, const RatVec& beta, const IntVec& J, int k);
Rational alpha_product_form(const KappaConfig& kc, const RatVec& beta, const IntVec& J, int k);

HirotaPoint alpha_from_beta(const KappaConfig& kc, const RatVec& beta, int k,
                            GraphVertex v = GraphVertex::V1);

GrassmannPoint matrix_A(const KappaConfig& kc, const RatVec& beta, int k);

struct MinorCheck {
  bool ok = true;
  std::optional<IntVec> failing;
};

/// A_J == alpha_J K_{I_k} / K_J for every J, with the alphas computed here.
MinorCheck verify_minor_identity(const KappaConfig& kc, const RatVec& beta, int k);
/// Same check against caller-supplied alphas (keyed by label).
MinorCheck verify_minor_identity(const KappaConfig& kc, const RatVec& beta, int k,
                                 const std::map<IntVec, Rational>& alphas);

/// sum_pi sgn(pi) prod_r prod_{l in I, l != i_r} (kappa_{j_pi(r)} - kappa_l),
/// for |I| = |J| and max I < min J.
Rational pluecker_vandermonde_sum(const KappaConfig& kc, const IntVec& I, const IntVec& J);
/// (-1)^{s(s-1)/2} * sum == K_I K_J.
bool pluecker_vandermonde_identity(const KappaConfig& kc, const IntVec& I, const IntVec& J);

GrassmannPoint matrix_A_tilde(const KappaConfig& kc, const RatVec& lambda, int k);

RatVec beta_from_lambda(const KappaConfig& kc, const RatVec& lambda, int k);
RatVec lambda_from_beta(const KappaConfig& kc, const RatVec& beta, int k);

HirotaPoint alpha_from_lambda(const KappaConfig& kc, const RatVec& lambda, int k,
                              GraphVertex v = GraphVertex::V1);

/// lambda_j = F(kappa_1) / F(kappa_{j+1}) with F = P * prod Q_l * K'.
RatVec lambda_from_divisor(const KappaConfig& kc, const Divisor& d);

/// Divisor parametrization. For v1 the first split_k = k points lie on the
/// component of p0; for v2 the first n - k do.
HirotaPoint alpha_from_divisor(const KappaConfig& kc, const Divisor& d, int k,
                               GraphVertex v = GraphVertex::V1);

/// Rows P Q_l / K' evaluated at the branch points, l = 1..n-k.
GrassmannPoint matrix_A_dual(const KappaConfig& kc, const Divisor& d);

/// One divisor point in each open gap between consecutive sorted kappas.
bool check_dn_interlacing(const KappaConfig& kc, const Divisor& d);

/// beta from the Abel image: exp(A_j) K'(k_{j+1}) / K'(k_1) * exp(k/2 R_jj - sum_{l<k} R_jl).
RatVec beta_from_abel(const KappaConfig& kc, const Divisor& d);

struct PsiPreimage {
  KappaConfig kappas;
  RatVec beta;
};

/// Recovers (kappa, beta) from a point of the beta-image.
PsiPreimage invert_psi(const HirotaPoint& hp);

}  // namespace tropkp
