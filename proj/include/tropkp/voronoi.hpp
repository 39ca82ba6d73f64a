#pragma once

// Closed-form Voronoi vertex enumeration, the cube lift, shift vectors and
// hypersimplex labels of Delaunay sets.

#include <map>
#include <vector>

#include "tropkp/graph_jacobian.hpp"

namespace tropkp {

/// Vertices grouped by class, each class sorted lexicographically.
std::map<int, std::vector<VoronoiVertex>> voronoi_vertices(int g);

/// f_0, ..., f_{g-1} from the closed formula.
std::vector<long> f_vector(int g);

/// Face counts by brute force over the vertex/Delaunay incidence; g <= 4.
std::vector<long> f_vector_exhaustive(int g);

VoronoiVertex canonical_vertex(int g, int k);

struct LiftedVertex {
  RatVec coords;           // B^T a
  std::vector<int> signs;  // +1 / -1
};

LiftedVertex lift(const BananaData& data, const VoronoiVertex& a);

/// n x n orthogonal projection onto the sum-zero hyperplane.
RatMatrix projection_matrix(int g);

struct ShiftVector {
  IntVec s;
};

ShiftVector shift_vector(const BananaData& data, const VoronoiVertex& a);

/// B^T c for an integer g-vector c.
IntVec lift_lattice(const IntVec& c);

/// Lattice point -> 1-based k-subset label supp(B^T c + s).
std::map<IntVec, IntVec> normalize_delaunay(const BananaData& data, const VoronoiVertex& a);

}  // namespace tropkp
