#include "tropkp/subsets.hpp"

#include <algorithm>

namespace tropkp {

std::vector<IntVec> k_subsets(int n, int k) {
  std::vector<IntVec> out;
  if (k < 0 || k > n) return out;
  IntVec cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

IntVec indicator(const IntVec& subset, int n) {
  IntVec v(n, 0);
  for (long i : subset) {
    if (i < 1 || i > n) throw InvalidArgument("subset element out of range");
    v[i - 1] = 1;
  }
  return v;
}

IntVec support(const IntVec& zero_one) {
  IntVec s;
  for (std::size_t i = 0; i < zero_one.size(); ++i) {
    if (zero_one[i] == 1)
      s.push_back(static_cast<long>(i) + 1);
    else if (zero_one[i] != 0)
      throw InternalError("expected a 0/1 vector, got " + to_string(std::span<const long>(zero_one)));
  }
  return s;
}

IntVec complement(const IntVec& subset, int n) {
  IntVec ind = indicator(subset, n), out;
  for (int i = 0; i < n; ++i)
    if (!ind[i]) out.push_back(i + 1);
  return out;
}

std::string bit_string(const IntVec& subset, int n) {
  std::string s(n, '0');
  for (long i : subset) s[i - 1] = '1';
  return s;
}

}  // namespace tropkp
