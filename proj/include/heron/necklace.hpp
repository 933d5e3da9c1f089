// Symbolic sociable cycles: rotation classes of words over {U, V, W} with
//   U = (9,12,15), V = (3,25,26), W = (9,10,17)
// in which every U is immediately followed by a V (cyclically).

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "heron/core.hpp"
#include "heron/cycles.hpp"

namespace heron {

// Underlying values give the canonical ordering U < V < W.
enum class Symbol : char { U = 'U', V = 'V', W = 'W' };

Triangle triangle_for(Symbol s);

class CycleWord {
 public:
  /// Validates the U->V pairing and stores the least rotation.
  /// Throws std::invalid_argument.
  explicit CycleWord(std::vector<Symbol> symbols);

  /// Parses letters such as "WUV"; case-sensitive.
  static CycleWord parse(std::string_view letters);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::string str() const;

  auto operator<=>(const CycleWord&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// All valid words of length n up to rotation, sorted. Generated as binary
/// necklaces over the tokens P = UV (length 2) and W (length 1).
std::vector<CycleWord> enumerate_words(int n);

std::size_t count_words(int n);

/// (UV)^k W^(n-2k) for k = 1 .. floor(n/2), in that order. Requires n >= 2.
std::vector<CycleWord> replacement_family(int n);

ConcreteCycle expand(const CycleWord& word);

}  // namespace heron
