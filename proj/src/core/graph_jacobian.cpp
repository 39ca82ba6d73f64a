#include "tropkp/graph_jacobian.hpp"

#include <algorithm>
#include <cmath>

namespace tropkp {

bool BananaData::unit_lengths() const {
  return std::all_of(edge_lengths.begin(), edge_lengths.end(), [](const Rational& l) { return l == 1; });
}

RatMatrix BananaData::combinatorial_Q() const {
  RatMatrix q(genus, genus);
  for (int i = 0; i < genus; ++i)
    for (int j = 0; j < genus; ++j) q(i, j) = i == j ? 2 : 1;
  return q;
}

BananaData build_banana(int g, const std::optional<RatVec>& lengths) {
  if (g < 1) throw InvalidArgument("genus must be positive, got " + std::to_string(g));
  BananaData d;
  d.genus = g;
  d.n = g + 1;
  if (lengths) {
    if (static_cast<int>(lengths->size()) != d.n)
      throw InvalidArgument("expected " + std::to_string(d.n) + " edge lengths, got " +
                            std::to_string(lengths->size()));
    for (const auto& l : *lengths)
      if (l <= 0) throw InvalidArgument("edge lengths must be positive, got " + to_string(l));
    d.edge_lengths = *lengths;
  } else {
    d.edge_lengths.assign(d.n, Rational(1));
  }
  d.B.assign(g, IntVec(d.n, 0));
  for (int i = 0; i < g; ++i) {
    d.B[i][0] = 1;
    d.B[i][i + 1] = -1;
  }
  RatMatrix b(g, d.n), delta(d.n, d.n);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < d.n; ++j) b(i, j) = d.B[i][j];
  for (int j = 0; j < d.n; ++j) delta(j, j) = d.edge_lengths[j];
  d.Q = b * delta * b.transpose();
  return d;
}

RatMatrix riemann_rank_one_sum(const BananaData& data) {
  RatMatrix q(data.genus, data.genus);
  for (int e = 0; e < data.n; ++e)
    for (int i = 0; i < data.genus; ++i)
      for (int j = 0; j < data.genus; ++j)
        q(i, j) += data.edge_lengths[e] * data.B[i][e] * data.B[j][e];
  return q;
}

namespace {

// Scaled integer form of a rational vector: p = P / den.
struct Scaled {
  std::vector<mpz_class> P;
  mpz_class den;
};

Scaled scale(const RatVec& p) {
  Scaled s;
  s.den = 1;
  for (const auto& x : p) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : p) s.P.push_back(mpz_class(x.get_num() * (s.den / x.get_den())));
  return s;
}

// Calls f(c) for every c in {-r..r}^g.
template <class F>
bool for_each_box_point(int g, long r, F&& f) {
  IntVec c(g, -r);
  while (true) {
    if (!f(c)) return false;
    int i = 0;
    while (i < g && c[i] == r) c[i++] = -r;
    if (i == g) return true;
    ++c[i];
  }
}

// For unit-length banana Q: c^T Q x = sum_i c_i x_i + (sum c)(sum x).
mpz_class cQx(const IntVec& c, const std::vector<mpz_class>& x) {
  mpz_class a = 0, sc = 0, sx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    a += c[i] * x[i];
    sc += c[i];
    sx += x[i];
  }
  return a + sc * sx;
}

long cQc(const IntVec& c) {
  long a = 0, s = 0;
  for (long v : c) {
    a += v * v;
    s += v;
  }
  return a + s * s;
}

}  // namespace

bool voronoi_contains(const BananaData& data, const RatVec& p) {
  if (static_cast<int>(p.size()) != data.genus)
    throw InvalidArgument("point has " + std::to_string(p.size()) + " coordinates, expected " +
                          std::to_string(data.genus));
  // A violating c needs c^T Q c < 2 c^T Q p <= 2 |c|_Q |p|_Q, and |c|_inf^2 <= c^T Q c,
  // so |c|_inf < 2 |p|_Q. The coordinate bound ceil(2 max|p_i|) + 2 is also valid;
  // the smaller of the two is searched.
  RatMatrix q = data.combinatorial_Q();
  double pqp = bilinear(p, q, p).get_d();
  long r_norm = static_cast<long>(std::floor(2.0 * std::sqrt(pqp))) + 1;
  Rational mx = 0;
  for (const auto& x : p) mx = std::max(mx, Rational(abs(x)));
  mpz_class ceil2;
  mpz_cdiv_q(ceil2.get_mpz_t(), Rational(2 * mx).get_num_mpz_t(), Rational(2 * mx).get_den_mpz_t());
  long r = std::min(r_norm, ceil2.get_si() + 2);
  Scaled s = scale(p);
  // p^T Q p <= (p - c)^T Q (p - c)  <=>  2 den c^T Q P <= den^2 c^T Q c, divided by den > 0.
  return for_each_box_point(data.genus, r, [&](const IntVec& c) {
    return 2 * cQx(c, s.P) <= s.den * cQc(c);
  });
}

void require_vertex(const BananaData& data, const VoronoiVertex& a) {
  const int g = data.genus, n = data.n, k = a.class_k;
  if (static_cast<int>(a.coords.size()) != g)
    throw InvalidArgument("vertex has " + std::to_string(a.coords.size()) + " coordinates, expected " +
                          std::to_string(g));
  if (k < 1 || k > g) throw InvalidArgument("class_k " + std::to_string(k) + " out of range");
  Rational hi = frac(n - k, n), lo = frac(-k, n);
  int n_hi = 0;
  for (const auto& x : a.coords) {
    if (x == hi)
      ++n_hi;
    else if (x != lo)
      throw InvalidArgument("not a Voronoi vertex: " + to_string(a.coords));
  }
  if (n_hi != k && n_hi != k - 1)
    throw InvalidArgument("not a Voronoi vertex of class " + std::to_string(k) + ": " + to_string(a.coords));
  // The class is the number of negative lift coordinates (sum a, -a_1, ..., -a_g).
  Rational total = 0;
  for (const auto& x : a.coords) total += x;
  int negatives = n_hi + (total < 0 ? 1 : 0);
  if (negatives != k)
    throw InvalidArgument("vertex " + to_string(a.coords) + " has class " + std::to_string(negatives) +
                          ", not " + std::to_string(k));
}

DelaunaySet delaunay_set(const BananaData& data, const VoronoiVertex& a) {
  require_vertex(data, a);
  Scaled s = scale(a.coords);
  DelaunaySet d;
  d.anchor = a;
  // Equality a^T Q a = (a - c)^T Q (a - c)  <=>  2 c^T Q P = den c^T Q c.
  for_each_box_point(data.genus, 1, [&](const IntVec& c) {
    mpz_class lhs = 2 * cQx(c, s.P), rhs = s.den * cQc(c);
    if (lhs > rhs) throw InvalidArgument("point " + to_string(a.coords) + " is outside the Voronoi cell");
    if (lhs == rhs) d.points.push_back(c);
    return true;
  });
  // Delaunay points of banana vertices are 0/+-1 vectors; a hit on the
  // |c|_inf = 2 shell would mean that assumption failed.
  for_each_box_point(data.genus, 2, [&](const IntVec& c) {
    bool shell = std::any_of(c.begin(), c.end(), [](long v) { return v == 2 || v == -2; });
    if (shell && 2 * cQx(c, s.P) >= s.den * cQc(c))
      throw InternalError("Delaunay point outside {-1,0,1}^g at " + to_string(std::span<const long>(c)));
    return true;
  });
  std::sort(d.points.begin(), d.points.end());
  return d;
}

std::optional<IntVec> vertices_equivalent(const BananaData& data, const VoronoiVertex& a,
                                          const VoronoiVertex& a2) {
  require_vertex(data, a2);
  DelaunaySet d = delaunay_set(data, a);
  for (const auto& c : d.points) {
    bool match = true;
    for (int i = 0; i < data.genus && match; ++i) match = a.coords[i] - c[i] == a2.coords[i];
    if (match) return c;
  }
  return std::nullopt;
}

}  // namespace tropkp
