#pragma once

#include <stdexcept>
#include <vector>

#include "dzeta/types.hpp"

namespace dzeta {

// totally odd index pair: both components odd and >= 3
struct IndexPair {
  long m1 = 0;
  long m2 = 0;
  bool operator==(const IndexPair&) const = default;
};

// ordered list ((k-3,3),(k-5,5),...,(3,k-3)); empty for k < 6.
// The reverse of this list is the column ordering oo'(k).
inline std::vector<IndexPair> totally_odd_index(long k) {
  if (k < 0 || k % 2 != 0) throw std::invalid_argument("totally_odd_index: k must be even and >= 0");
  std::vector<IndexPair> out;
  for (long m2 = 3; k - m2 >= 3; m2 += 2) out.push_back({k - m2, m2});
  return out;
}

inline long totally_odd_size(long k) { return k >= 6 ? (k - 6) / 2 + 1 : 0; }

}  // namespace dzeta
