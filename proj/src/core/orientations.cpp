#include "tropkp/orientations.hpp"

#include <algorithm>
#include <set>

#include "tropkp/subsets.hpp"
#include "tropkp/voronoi.hpp"

namespace tropkp {

Orientation make_orientation(std::vector<int> signs) {
  Orientation o;
  for (int s : signs) {
    if (s != 1 && s != -1) throw InvalidArgument("orientation signs must be +1 or -1");
    if (s < 0) ++o.out_degree_v1;
  }
  o.signs = std::move(signs);
  return o;
}

bool is_strongly_connected(const Orientation& o) {
  // adjacency over vertices {0 = v1, 1 = v2}
  bool adj[2][2] = {{false, false}, {false, false}};
  for (int s : o.signs) {
    if (s > 0)
      adj[1][0] = true;
    else
      adj[0][1] = true;
  }
  for (int src = 0; src < 2; ++src) {
    bool seen[2] = {false, false};
    std::vector<int> stack{src};
    seen[src] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < 2; ++w)
        if (adj[u][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (!seen[0] || !seen[1]) return false;
  }
  return true;
}

std::vector<Orientation> strongly_connected_orientations(int g) {
  if (g < 1) throw InvalidArgument("genus must be positive");
  const int n = g + 1;
  std::vector<Orientation> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i) & 1) ? 1 : -1;
    Orientation o = make_orientation(std::move(s));
    if (is_strongly_connected(o)) out.push_back(std::move(o));
  }
  return out;
}

Orientation vertex_to_orientation(const BananaData& data, const VoronoiVertex& a) {
  require_vertex(data, a);
  Orientation o = make_orientation(lift(data, a).signs);
  if (!is_strongly_connected(o) || o.out_degree_v1 != a.class_k)
    throw InternalError("orientation of " + to_string(a.coords) + " breaks the vertex/orientation bijection");
  return o;
}

VoronoiVertex orientation_to_vertex(const BananaData& data, const Orientation& o) {
  if (static_cast<int>(o.signs.size()) != data.n)
    throw InvalidArgument("orientation has " + std::to_string(o.signs.size()) + " edges, expected " +
                          std::to_string(data.n));
  if (!is_strongly_connected(o)) throw InvalidArgument("orientation is not strongly connected");
  const int n = data.n, k = o.out_degree_v1;
  VoronoiVertex v;
  v.class_k = k;
  // Lift coordinate j is k/n on kept edges and -(n-k)/n on reversed ones.
  for (int i = 1; i < n; ++i) v.coords.push_back(o.signs[i] < 0 ? frac(n - k, n) : frac(-k, n));
  return v;
}

std::optional<IntVec> circuit_difference(const Orientation& o, const Orientation& o2) {
  if (o.signs.size() != o2.signs.size()) throw InvalidArgument("orientations of different graphs");
  if (o.out_degree_v1 != o2.out_degree_v1) return std::nullopt;
  IntVec edges;
  int up = 0, down = 0;
  for (std::size_t i = 0; i < o.signs.size(); ++i) {
    if (o.signs[i] == o2.signs[i]) continue;
    edges.push_back(static_cast<long>(i) + 1);
    (o.signs[i] > 0 ? up : down)++;
  }
  if (up != down) throw InternalError("flipped edges do not form a circuit");
  return edges;
}

MatroidBases matroid_bases(const BananaData& data, const VoronoiVertex& a, GraphVertex v) {
  MatroidBases m;
  m.n = data.n;
  std::set<IntVec> bases;
  for (auto& [c, label] : normalize_delaunay(data, a))
    bases.insert(v == GraphVertex::V1 ? label : complement(label, data.n));
  m.k = v == GraphVertex::V1 ? a.class_k : data.n - a.class_k;
  m.bases.assign(bases.begin(), bases.end());
  return m;
}

MatroidBases delaunaytroid(const BananaData& data, const VoronoiVertex& a, GraphVertex v) {
  Orientation ref = vertex_to_orientation(data, a);
  MatroidBases m;
  m.n = data.n;
  m.k = v == GraphVertex::V1 ? ref.out_degree_v1 : data.n - ref.out_degree_v1;
  std::set<IntVec> bases;
  for (const auto& o : strongly_connected_orientations(data.genus)) {
    if (o.out_degree_v1 != ref.out_degree_v1) continue;
    IntVec out_edges;
    for (int i = 0; i < data.n; ++i) {
      bool leaves_v1 = o.signs[i] < 0;
      if (leaves_v1 == (v == GraphVertex::V1)) out_edges.push_back(i + 1);
    }
    bases.insert(out_edges);
  }
  m.bases.assign(bases.begin(), bases.end());
  if (m != matroid_bases(data, a, v)) throw InternalError("Delaunaytroid differs from the Delaunay matroid");
  return m;
}

bool satisfies_basis_exchange(const MatroidBases& m) {
  if (m.bases.empty()) return false;
  std::set<IntVec> all(m.bases.begin(), m.bases.end());
  for (const auto& b1 : m.bases)
    for (const auto& b2 : m.bases)
      for (long x : b1) {
        if (std::binary_search(b2.begin(), b2.end(), x)) continue;
        bool found = false;
        for (long y : b2) {
          if (std::binary_search(b1.begin(), b1.end(), y)) continue;
          IntVec b = b1;
          b.erase(std::find(b.begin(), b.end(), x));
          b.insert(std::upper_bound(b.begin(), b.end(), y), y);
          if (all.count(b)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

}  // namespace tropkp
