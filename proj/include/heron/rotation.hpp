#pragma once

#include <algorithm>
#include <vector>

namespace heron {

/// Lexicographically least rotation of a sequence.
template <typename T>
std::vector<T> least_rotation(const std::vector<T>& seq) {
  std::vector<T> best = seq;
  std::vector<T> cur = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace heron
