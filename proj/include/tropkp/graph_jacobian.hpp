#pragma once

// Banana graph data and the definitional Voronoi/Delaunay primitives.

#include <optional>
#include <vector>

#include "tropkp/matrix.hpp"
#include "tropkp/rational.hpp"

namespace tropkp {

struct BananaData {
  int genus = 0;
  int n = 0;
  RatVec edge_lengths;
  std::vector<IntVec> B;  // genus x n, rows e_1 - e_{i+1}
  RatMatrix Q;            // B diag(lengths) B^T

  bool unit_lengths() const;
  /// Q of the same graph with all lengths 1; combinatorial routines use this.
  RatMatrix combinatorial_Q() const;
};

BananaData build_banana(int g, const std::optional<RatVec>& lengths = std::nullopt);

/// Sum over edges of l(e_j) b_j b_j^T, with b_j the j-th column of B.
RatMatrix riemann_rank_one_sum(const BananaData& data);

struct VoronoiVertex {
  RatVec coords;
  int class_k = 0;

  bool operator==(const VoronoiVertex&) const = default;
};

struct DelaunaySet {
  std::vector<IntVec> points;  // sorted lexicographically
  VoronoiVertex anchor;
};

/// Whether p lies in the closed Voronoi cell of the origin (unit-length Q).
bool voronoi_contains(const BananaData& data, const RatVec& p);

/// Throws InvalidArgument unless a is one of the closed-form Voronoi vertices
/// with the stated class.
void require_vertex(const BananaData& data, const VoronoiVertex& a);

DelaunaySet delaunay_set(const BananaData& data, const VoronoiVertex& a);

/// c0 in D(a) with a2 = a - c0, if any.
std::optional<IntVec> vertices_equivalent(const BananaData& data, const VoronoiVertex& a,
                                          const VoronoiVertex& a2);

}  // namespace tropkp
