#include "tropkp/hirota_param.hpp"

#include <algorithm>
#include <numeric>

#include "tropkp/subsets.hpp"

namespace tropkp {

namespace {

std::vector<std::size_t> zero_based(const IntVec& J) {
  std::vector<std::size_t> cols;
  for (long j : J) cols.push_back(static_cast<std::size_t>(j - 1));
  return cols;
}

IntVec first_k(int k) {
  IntVec I(k);
  std::iota(I.begin(), I.end(), 1L);
  return I;
}

void require_k(int k, int n) {
  if (k < 1 || k > n - 1)
    throw InvalidArgument("class k = " + std::to_string(k) + " must lie in [1, " + std::to_string(n - 1) + "]");
}

void require_nonzero(const RatVec& v, int g, const char* what) {
  if (static_cast<int>(v.size()) != g)
    throw InvalidArgument(std::string(what) + " needs " + std::to_string(g) + " entries, got " +
                          std::to_string(v.size()));
  for (const auto& x : v)
    if (x == 0) throw InvalidArgument(std::string(what) + " entries must be nonzero");
}

// beta_0 = lambda_0 = 1 convention, 0-based over {0..g}.
Rational with_unit(const RatVec& v, int idx) { return idx == 0 ? Rational(1) : v[idx - 1]; }

// exp(k/2 R_jj - sum_{l=1}^{k-1} R_jl), exactly.
Rational beta_lambda_factor(const RMatrix& R, int j, int k) {
  LogRational s = R(j, j) * k;
  for (int l = 1; l <= k - 1; ++l) s = s - R(j, l) * 2;
  return s.exp_half();
}

HirotaPoint to_vertex(HirotaPoint hp, GraphVertex v, const KappaConfig& kc) {
  hp.vertex_choice = v;
  if (v == GraphVertex::V1) return hp;
  // The v2 image has complementary labels, equal alphas and opposite periods.
  HirotaPoint out;
  out.class_k = hp.class_k;
  out.n = hp.n;
  out.vertex_choice = v;
  for (auto& [J, a] : hp.alphas) {
    IntVec Jb = complement(J, hp.n);
    out.alphas[Jb] = a;
    out.lattice[Jb] = hp.lattice.at(J);
  }
  out.uvw = uvw(kc, Component::XMinus);
  return out;
}

}  // namespace

std::map<IntVec, Rational> normalize_pluecker(const std::map<IntVec, Rational>& minors) {
  auto it = std::find_if(minors.begin(), minors.end(), [](const auto& kv) { return kv.second != 0; });
  if (it == minors.end()) throw DegenerateParameters("all Pluecker coordinates vanish");
  Rational pivot = it->second;
  std::map<IntVec, Rational> out;
  for (const auto& [J, v] : minors) out[J] = v / pivot;
  return out;
}

GrassmannPoint make_grassmann_point(RatMatrix m) {
  GrassmannPoint p;
  p.k = static_cast<int>(m.rows());
  p.n = static_cast<int>(m.cols());
  for (const auto& J : k_subsets(p.n, p.k)) {
    auto cols = zero_based(J);
    p.minors[J] = determinant(m.columns(cols));
  }
  p.matrix = std::move(m);
  p.pluecker = normalize_pluecker(p.minors);
  return p;
}

bool same_point(const GrassmannPoint& a, const GrassmannPoint& b) {
  return a.k == b.k && a.n == b.n && a.pluecker == b.pluecker;
}

Rational vandermonde_minor(const KappaConfig& kc, const IntVec& J) {
  Rational r = 1;
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = a + 1; b < J.size(); ++b) r *= kc[J[b]] - kc[J[a]];
  return r;
}

Rational kj_squared_from_R(const RMatrix& R, const IntVec& J) {
  const long k = static_cast<long>(J.size());
  // exp(-(k-1)/2 sum R_jj + sum_{l<m} R_jl jm), doubled then halved exactly.
  LogRational s;
  for (long j : J) s = s - R(j - 1, j - 1) * (k - 1);
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = a + 1; b < J.size(); ++b) s = s + R(J[a] - 1, J[b] - 1) * 2;
  return s.exp_half();
}

IntVec lattice_point(const IntVec& J, int k, int g) {
  if (static_cast<int>(J.size()) != k) throw InvalidArgument("label size differs from k");
  IntVec c(g, 0);
  IntVec ind = indicator(J, g + 1);
  for (int i = 1; i <= g + 1; ++i) {
    bool inI = i <= k, inJ = ind[i - 1] != 0;
    if (inI && !inJ && i > 1) c[i - 2] += 1;
    if (inJ && !inI) c[i - 2] -= 1;
  }
  return c;
}

Rational alpha_exp_form(const RMatrix& R, const RatVec& beta, const IntVec& J, int k) {
  const int g = R.genus();
  IntVec c = lattice_point(J, k, g);
  Rational a = quadratic_form(R, c).exp_half();
  for (int l = 0; l < g; ++l) a *= pow(beta[l], c[l]);
  return a;
}

Rational alpha_product_form(const KappaConfig& kc, const RatVec& beta, const IntVec& J, int k) {
  const int g = kc.genus();
  IntVec ind = indicator(J, kc.n()), I, Jn;
  for (int i = 1; i <= kc.n(); ++i) {
    if (i <= k && !ind[i - 1]) I.push_back(i);
    if (i > k && ind[i - 1]) Jn.push_back(i);
  }
  const std::size_t s = I.size();
  Rational num = 1, den = 1;
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t m = l + 1; m < s; ++m) {
      Rational a = kc[I[m]] - kc[I[l]], b = kc[Jn[m]] - kc[Jn[l]];
      num *= a * a * b * b;
    }
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t m = 0; m < s; ++m) {
      Rational d = kc[Jn[m]] - kc[I[l]];
      den *= d * d;
    }
  Rational a = num / den;
  IntVec c = lattice_point(J, k, g);
  for (int l = 0; l < g; ++l) a *= pow(beta[l], c[l]);
  return a;
}

HirotaPoint alpha_from_beta(const KappaConfig& kc, const RatVec& beta, int k, GraphVertex v) {
  const int n = kc.n(), g = kc.genus();
  require_k(k, n);
  require_nonzero(beta, g, "beta");
  RMatrix R = limit_R(kc);
  HirotaPoint hp;
  hp.class_k = k;
  hp.n = n;
  hp.uvw = uvw(kc, Component::XPlus);
  for (const auto& J : k_subsets(n, k)) {
    Rational e = alpha_exp_form(R, beta, J, k), p = alpha_product_form(kc, beta, J, k);
    if (e != p)
      throw InternalError("alpha forms disagree at J = " + to_string(std::span<const long>(J)) + ": " +
                          to_string(e) + " vs " + to_string(p));
    hp.alphas[J] = e;
    hp.lattice[J] = lattice_point(J, k, g);
  }
  return to_vertex(std::move(hp), v, kc);
}

GrassmannPoint matrix_A(const KappaConfig& kc, const RatVec& beta, int k) {
  const int n = kc.n();
  require_k(k, n);
  require_nonzero(beta, kc.genus(), "beta");
  RatMatrix A(k, n);
  for (int i = 1; i <= k; ++i) {
    A(i - 1, i - 1) = 1;
    for (int j = k + 1; j <= n; ++j) {
      Rational d = kc[j] - kc[i];
      Rational v = with_unit(beta, i - 1) / (with_unit(beta, j - 1) * d * d);
      for (int l = 1; l <= k; ++l)
        if (l != i) v *= (kc[i] - kc[l]) / (kc[j] - kc[l]);
      A(i - 1, j - 1) = v;
    }
  }
  return make_grassmann_point(std::move(A));
}

Rational pluecker_vandermonde_sum(const KappaConfig& kc, const IntVec& I, const IntVec& J) {
  if (I.size() != J.size() || I.empty()) throw InvalidArgument("exchange sets must have equal positive size");
  if (I.back() >= J.front()) throw InvalidArgument("exchange sets must satisfy max I < min J");
  const std::size_t s = I.size();
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int sign = 1;
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t b = a + 1; b < s; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    Rational prod = 1;
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t l = 0; l < s; ++l)
        if (l != r) prod *= kc[J[perm[r]]] - kc[I[l]];
    total += sign * prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool pluecker_vandermonde_identity(const KappaConfig& kc, const IntVec& I, const IntVec& J) {
  const std::size_t s = I.size();
  Rational lhs = pluecker_vandermonde_sum(kc, I, J);
  if ((s * (s - 1) / 2) % 2) lhs = -lhs;
  return lhs == vandermonde_minor(kc, I) * vandermonde_minor(kc, J);
}

MinorCheck verify_minor_identity(const KappaConfig& kc, const RatVec& beta, int k,
                                 const std::map<IntVec, Rational>& alphas) {
  GrassmannPoint A = matrix_A(kc, beta, k);
  const IntVec Ik = first_k(k);
  const Rational KI = vandermonde_minor(kc, Ik);
  MinorCheck res;
  for (const auto& [J, minor] : A.minors) {
    IntVec Iout, Jin;
    for (long i : Ik)
      if (!std::binary_search(J.begin(), J.end(), i)) Iout.push_back(i);
    for (long j : J)
      if (j > k) Jin.push_back(j);
    if (Iout.size() >= 2 && !pluecker_vandermonde_identity(kc, Iout, Jin))
      throw InternalError("Pluecker-Vandermonde identity failed at J = " + to_string(std::span<const long>(J)));
    auto it = alphas.find(J);
    if (it == alphas.end() || minor != it->second * KI / vandermonde_minor(kc, J)) {
      res.ok = false;
      res.failing = J;
      return res;
    }
  }
  return res;
}

MinorCheck verify_minor_identity(const KappaConfig& kc, const RatVec& beta, int k) {
  return verify_minor_identity(kc, beta, k, alpha_from_beta(kc, beta, k).alphas);
}

GrassmannPoint matrix_A_tilde(const KappaConfig& kc, const RatVec& lambda, int k) {
  const int n = kc.n();
  require_k(k, n);
  require_nonzero(lambda, kc.genus(), "lambda");
  RatMatrix A(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = pow(kc.kappas[j], i) * with_unit(lambda, j);
  return make_grassmann_point(std::move(A));
}

RatVec beta_from_lambda(const KappaConfig& kc, const RatVec& lambda, int k) {
  require_k(k, kc.n());
  require_nonzero(lambda, kc.genus(), "lambda");
  RMatrix R = limit_R(kc);
  RatVec beta;
  for (int j = 1; j <= kc.genus(); ++j) beta.push_back(beta_lambda_factor(R, j, k) / lambda[j - 1]);
  return beta;
}

RatVec lambda_from_beta(const KappaConfig& kc, const RatVec& beta, int k) {
  // The relation is an involution in the sense beta * lambda = factor.
  return beta_from_lambda(kc, beta, k);
}

HirotaPoint alpha_from_lambda(const KappaConfig& kc, const RatVec& lambda, int k, GraphVertex v) {
  const int n = kc.n(), g = kc.genus();
  require_k(k, n);
  require_nonzero(lambda, g, "lambda");
  const Rational KI2 = pow(vandermonde_minor(kc, first_k(k)), 2);
  HirotaPoint hp;
  hp.class_k = k;
  hp.n = n;
  hp.uvw = uvw(kc, Component::XPlus);
  for (const auto& J : k_subsets(n, k)) {
    IntVec c = lattice_point(J, k, g);
    Rational a = pow(vandermonde_minor(kc, J), 2) / KI2;
    for (int l = 0; l < g; ++l) a *= pow(lambda[l], -c[l]);
    hp.alphas[J] = a;
    hp.lattice[J] = c;
  }
  return to_vertex(std::move(hp), v, kc);
}

RatVec lambda_from_divisor(const KappaConfig& kc, const Divisor& d) {
  validate_divisor(kc, d);
  auto F = [&](int j) {
    Rational v = divisor_function(d, kc[j]) * K_prime(kc, j);
    if (v == 0) throw DomainError("divisor function vanishes at a branch point");
    return v;
  };
  RatVec lambda;
  Rational base = F(1);
  for (int j = 1; j <= kc.genus(); ++j) lambda.push_back(base / F(j + 1));
  return lambda;
}

HirotaPoint alpha_from_divisor(const KappaConfig& kc, const Divisor& d, int k, GraphVertex v) {
  const int n = kc.n(), g = kc.genus();
  require_k(k, n);
  validate_divisor(kc, d);
  if (v == GraphVertex::V1) {
    if (d.split_k != k)
      throw InvalidArgument("v1 divisor must have split_k = k = " + std::to_string(k));
    return alpha_from_lambda(kc, lambda_from_divisor(kc, d), k, v);
  }
  if (d.split_k != n - k)
    throw InvalidArgument("v2 divisor must have split_k = n - k = " + std::to_string(n - k));
  // Lambda_l = F(k_{l+1}) / F(k_1) from the barred polynomials; alpha of the
  // complementary label carries Lambda^{c_J}.
  RatVec inv = lambda_from_divisor(kc, d);
  IntVec Ibar = complement(first_k(k), n);
  const Rational KI2 = pow(vandermonde_minor(kc, Ibar), 2);
  HirotaPoint hp;
  hp.class_k = k;
  hp.n = n;
  hp.vertex_choice = v;
  hp.uvw = uvw(kc, Component::XMinus);
  for (const auto& J : k_subsets(n, k)) {
    IntVec Jb = complement(J, n), c = lattice_point(J, k, g);
    Rational a = pow(vandermonde_minor(kc, Jb), 2) / KI2;
    for (int l = 0; l < g; ++l) a *= pow(inv[l], -c[l]);
    hp.alphas[Jb] = a;
    hp.lattice[Jb] = c;
  }
  return hp;
}

GrassmannPoint matrix_A_dual(const KappaConfig& kc, const Divisor& d) {
  validate_divisor(kc, d);
  const int n = kc.n(), rows = n - d.split_k;
  Divisor plus_only = d;
  plus_only.points.resize(d.split_k);
  RatMatrix M(rows, n);
  for (int i = 1; i <= n; ++i) {
    Rational base = divisor_function(plus_only, kc[i]) / K_prime(kc, i);
    M(0, i - 1) = base;
    for (int l = 1; l < rows; ++l) {
      Rational q = kc[i] - d.points[d.split_k + l - 1];
      M(l, i - 1) = base / q;
    }
  }
  return make_grassmann_point(std::move(M));
}

bool check_dn_interlacing(const KappaConfig& kc, const Divisor& d) {
  if (!kc.sorted_flag) throw InvalidArgument("interlacing needs strictly increasing kappas");
  if (static_cast<int>(d.points.size()) != kc.genus()) return false;
  for (int i = 1; i <= kc.genus(); ++i) {
    long hits = std::count_if(d.points.begin(), d.points.end(),
                              [&](const Rational& p) { return kc[i] < p && p < kc[i + 1]; });
    if (hits != 1) return false;
  }
  return true;
}

RatVec beta_from_abel(const KappaConfig& kc, const Divisor& d) {
  const int k = d.split_k;
  require_k(k, kc.n());
  auto abel = abel_map(kc, d);
  RMatrix R = limit_R(kc);
  RatVec beta;
  for (int j = 1; j <= kc.genus(); ++j)
    beta.push_back(abel[j - 1].exp() * K_prime(kc, j + 1) / K_prime(kc, 1) * beta_lambda_factor(R, j, k));
  return beta;
}

PsiPreimage invert_psi(const HirotaPoint& hp) {
  const int n = hp.n, g = n - 1, k = hp.class_k;
  const int sign = hp.uvw.component == Component::XPlus ? 1 : -1;
  RatVec kap(n);
  std::optional<Rational> k1;
  for (int j = 1; j <= g; ++j) {
    Rational U = sign * hp.uvw.U[j - 1], V = sign * hp.uvw.V[j - 1];
    if (U == 0) throw DegenerateParameters("U_" + std::to_string(j) + " = 0: point lies on the degenerate locus");
    Rational first = (V + U * U) / (2 * U);
    if (k1 && *k1 != first) throw InvalidArgument("period data is not in the image: kappa_1 is inconsistent");
    k1 = first;
    kap[j] = (V - U * U) / (2 * U);
  }
  kap[0] = *k1;
  KappaConfig kc = make_kappas(kap);

  // Work with v1 labels; the v2 image stores complements.
  auto alpha = [&](const IntVec& J) {
    IntVec key = hp.vertex_choice == GraphVertex::V1 ? J : complement(J, n);
    auto it = hp.alphas.find(key);
    if (it == hp.alphas.end() || it->second == 0)
      throw DegenerateParameters("alpha for label " + to_string(std::span<const long>(key)) + " is missing or zero");
    return it->second;
  };
  const IntVec Ik = first_k(k);
  RatVec beta(g);
  for (int j = k; j <= g; ++j) {
    IntVec J(Ik.begin() + 1, Ik.end());
    J.push_back(j + 1);
    Rational d = kc[j + 1] - kc[1];
    beta[j - 1] = 1 / (d * d * alpha(J));
  }
  for (int i = 1; i <= k - 1; ++i) {
    IntVec J;
    for (long x : Ik)
      if (x != i + 1) J.push_back(x);
    J.push_back(n);
    Rational d = kc[n] - kc[i + 1];
    beta[i - 1] = d * d * beta[g - 1] * alpha(J);
  }
  return {kc, beta};
}

}  // namespace tropkp
