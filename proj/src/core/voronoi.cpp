#include "tropkp/voronoi.hpp"

#include <algorithm>
#include <set>

#include "tropkp/subsets.hpp"

namespace tropkp {

std::map<int, std::vector<VoronoiVertex>> voronoi_vertices(int g) {
  if (g < 1) throw InvalidArgument("genus must be positive");
  const int n = g + 1;
  std::map<int, std::vector<VoronoiVertex>> out;
  for (int k = 1; k <= g; ++k) {
    auto& cls = out[k];
    // The lift has k entries -(n-k)/n (edges leaving v1) and n-k entries k/n;
    // a_i is minus the (i+1)-th lift coordinate.
    for (const auto& neg : k_subsets(n, k)) {
      IntVec ind = indicator(neg, n);
      VoronoiVertex v;
      v.class_k = k;
      for (int i = 1; i < n; ++i) v.coords.push_back(ind[i] ? frac(n - k, n) : frac(-k, n));
      cls.push_back(std::move(v));
    }
    std::sort(cls.begin(), cls.end(), [](const auto& x, const auto& y) { return x.coords < y.coords; });
  }
  return out;
}

std::vector<long> f_vector(int g) {
  if (g < 1) throw InvalidArgument("genus must be positive");
  std::vector<long> f;
  for (int l = 0; l < g; ++l) f.push_back(binomial(g + 1, l) * ((1L << (g + 1 - l)) - 2));
  return f;
}

std::vector<long> f_vector_exhaustive(int g) {
  if (g < 1 || g > 4) throw InvalidArgument("exhaustive face count supports 1 <= g <= 4");
  BananaData data = build_banana(g);
  std::vector<VoronoiVertex> verts;
  for (auto& [k, cls] : voronoi_vertices(g))
    for (auto& v : cls) verts.push_back(v);
  std::vector<std::set<IntVec>> dsets;
  for (const auto& v : verts) {
    auto d = delaunay_set(data, v);
    dsets.emplace_back(d.points.begin(), d.points.end());
  }
  // A proper face is cut out by a set T of bisector hyperplanes; its vertices
  // are those whose Delaunay set contains T. Every face arises from some T
  // inside the Delaunay set of one of its vertices.
  std::set<std::vector<std::size_t>> faces;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    std::vector<IntVec> nz;
    for (const auto& c : dsets[a])
      if (std::any_of(c.begin(), c.end(), [](long x) { return x != 0; })) nz.push_back(c);
    for (unsigned long mask = 1; mask < (1UL << nz.size()); ++mask) {
      std::vector<std::size_t> face;
      for (std::size_t b = 0; b < verts.size(); ++b) {
        bool all = true;
        for (std::size_t i = 0; i < nz.size() && all; ++i)
          if (mask >> i & 1) all = dsets[b].count(nz[i]) > 0;
        if (all) face.push_back(b);
      }
      faces.insert(face);
    }
  }
  std::vector<long> f(g, 0);
  for (const auto& face : faces) {
    RatMatrix m(face.size() > 1 ? face.size() - 1 : 1, g);
    for (std::size_t i = 1; i < face.size(); ++i)
      for (int j = 0; j < g; ++j) m(i - 1, j) = verts[face[i]].coords[j] - verts[face[0]].coords[j];
    std::size_t dim = face.size() > 1 ? rank(m) : 0;
    if (static_cast<int>(dim) < g) ++f[dim];
  }
  return f;
}

VoronoiVertex canonical_vertex(int g, int k) {
  if (g < 1) throw InvalidArgument("genus must be positive");
  if (k < 1 || k > g) throw InvalidArgument("class k must lie in [1, " + std::to_string(g) + "]");
  VoronoiVertex v;
  v.class_k = k;
  for (int i = 0; i < k - 1; ++i) v.coords.emplace_back(g + 1 - k, g + 1);
  for (int i = k - 1; i < g; ++i) v.coords.emplace_back(-k, g + 1);
  for (auto& x : v.coords) x.canonicalize();
  return v;
}

LiftedVertex lift(const BananaData& data, const VoronoiVertex& a) {
  if (static_cast<int>(a.coords.size()) != data.genus) throw InvalidArgument("lift: dimension mismatch");
  LiftedVertex l;
  l.coords.assign(data.n, Rational(0));
  for (int i = 0; i < data.genus; ++i)
    for (int j = 0; j < data.n; ++j)
      if (data.B[i][j]) l.coords[j] += data.B[i][j] * a.coords[i];
  for (const auto& x : l.coords) {
    if (x == 0) throw InvalidArgument("zero lift coordinate: " + to_string(a.coords) + " is not a vertex");
    l.signs.push_back(x > 0 ? 1 : -1);
  }
  return l;
}

RatMatrix projection_matrix(int g) {
  const int n = g + 1;
  RatMatrix p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = i == j ? Rational(g, n) : Rational(-1, n);
  return p;
}

ShiftVector shift_vector(const BananaData& data, const VoronoiVertex& a) {
  LiftedVertex l = lift(data, a);
  ShiftVector s;
  for (int v : l.signs) s.s.push_back(v < 0 ? 1 : 0);
  return s;
}

IntVec lift_lattice(const IntVec& c) {
  IntVec out(c.size() + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[0] += c[i];
    out[i + 1] = -c[i];
  }
  return out;
}

std::map<IntVec, IntVec> normalize_delaunay(const BananaData& data, const VoronoiVertex& a) {
  ShiftVector s = shift_vector(data, a);
  std::map<IntVec, IntVec> out;
  for (const auto& c : delaunay_set(data, a).points) {
    IntVec v = lift_lattice(c);
    for (int j = 0; j < data.n; ++j) v[j] += s.s[j];
    out[c] = support(v);
  }
  return out;
}

}  // namespace tropkp
