#pragma once

#include <vector>

#include "tropkp/rational.hpp"

namespace tropkp {

/// All k-subsets of {1..n}, each sorted, in lexicographic order.
std::vector<IntVec> k_subsets(int n, int k);

/// 0/1 indicator vector of length n for a 1-based subset.
IntVec indicator(const IntVec& subset, int n);
/// 1-based support of a 0/1 vector; throws InternalError on other entries.
IntVec support(const IntVec& zero_one);
/// {1..n} minus `subset`.
IntVec complement(const IntVec& subset, int n);

/// "1100" style bit string of a 1-based subset of [n].
std::string bit_string(const IntVec& subset, int n);

}  // namespace tropkp
