#pragma once

// Strongly connected orientations of the banana graph and the matroids of
// Voronoi vertices.

#include <optional>
#include <vector>

#include "tropkp/graph_jacobian.hpp"

namespace tropkp {

// signs[i] = +1 keeps the reference direction v2 -> v1 on edge i+1,
// -1 reverses it. Thus out_degree_v1 counts the -1 entries.
struct Orientation {
  std::vector<int> signs;
  int out_degree_v1 = 0;

  bool operator==(const Orientation&) const = default;
};

enum class GraphVertex { V1, V2 };

struct MatroidBases {
  int k = 0;
  int n = 0;
  std::vector<IntVec> bases;  // sorted 1-based subsets, lexicographic

  bool operator==(const MatroidBases&) const = default;
};

Orientation make_orientation(std::vector<int> signs);

/// Directed reachability between the two vertices in both directions.
bool is_strongly_connected(const Orientation& o);

/// All strongly connected orientations, in lexicographic sign order.
std::vector<Orientation> strongly_connected_orientations(int g);

Orientation vertex_to_orientation(const BananaData& data, const VoronoiVertex& a);
VoronoiVertex orientation_to_vertex(const BananaData& data, const Orientation& o);

/// 1-based edges whose signs differ; nullopt when out-degrees differ.
std::optional<IntVec> circuit_difference(const Orientation& o, const Orientation& o2);

MatroidBases matroid_bases(const BananaData& data, const VoronoiVertex& a, GraphVertex v);

/// Same matroid computed from orientations with the degrees of a at v.
MatroidBases delaunaytroid(const BananaData& data, const VoronoiVertex& a, GraphVertex v);

bool satisfies_basis_exchange(const MatroidBases& m);

}  // namespace tropkp
