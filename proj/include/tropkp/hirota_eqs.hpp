#pragma once

// Quartic generators of the Hirota variety of the hypersimplex Delaunay
// polytope: squared-set enumeration and face-direction classes.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropkp/hirota_param.hpp"

namespace tropkp {

using LabelPair = std::pair<IntVec, IntVec>;  // 1-based k-subsets, first < second

struct SquaredPoint {
  IntVec d;                    // n-vector with entries in {0, 1, 2}
  std::vector<LabelPair> pairs;
  int two_count = 0;
};

/// All d = 1_I1 + 1_I2 with I1 != I2 in C([n], k), sorted by d.
std::vector<SquaredPoint> squared_set(int k, int n);

struct QuarticTerm {
  IntVec first, second;  // labels; first contains min(direction)
  IntVec delta;          // 1_first - 1_second, an n-vector
};

struct QuarticRelation {
  IntVec direction;        // moving coordinates, size 2l
  IntVec representative;   // lex-first squared point with this direction
  std::vector<QuarticTerm> terms;

  int dimension() const { return static_cast<int>(direction.size()) - 1; }
};

/// One relation per squared point, without deduplication.
std::vector<QuarticRelation> point_relations(int k, int n);
/// One representative relation per face direction, sorted by (dimension, direction).
std::vector<QuarticRelation> face_direction_classes(int k, int n);

/// Value of a relation at a Hirota point: sum alpha_I1 alpha_I2 P(wave_I1 - wave_I2).
Rational evaluate_relation(const QuarticRelation& rel, const HirotaPoint& hp);
/// Evaluates every relation; throws InvalidArgument on label mismatch.
std::vector<Rational> instantiate_and_check(const std::vector<QuarticRelation>& rels, const HirotaPoint& hp);

/// Per squared point d in label space, translated to the lattice sum
/// c1 + c2 with B^T(c1 + c2) = d - 2 s. Comparable with hirota_residual.
std::map<IntVec, Rational> relation_values_by_lattice(const HirotaPoint& hp);

/// Lattice sum of two labels of the canonical vertex: inverse of B^T on d - 2s.
IntVec label_sum_to_lattice(const IntVec& d, const IntVec& s);

/// "a1100*a0011*((U1+U2-U3-U4)^4-4*(U1+U2-U3-U4)*(W1+W2-W3-W4)+3*(V1+V2-V3-V4)^2)+..."
std::string polynomial_string(const QuarticRelation& rel, int n);
nlohmann::json to_json(const QuarticRelation& rel, int n);

}  // namespace tropkp
