#include "heron/necklace.hpp"

#include <algorithm>
#include <stdexcept>

#include "heron/rotation.hpp"

namespace heron {

Triangle triangle_for(Symbol s) {
  switch (s) {
    case Symbol::U: return Triangle(9, 12, 15);
    case Symbol::V: return Triangle(3, 25, 26);
    case Symbol::W: return Triangle(9, 10, 17);
  }
  throw std::invalid_argument("unknown symbol");
}

CycleWord::CycleWord(std::vector<Symbol> symbols) {
  const std::size_t n = symbols.size();
  bool has_pair = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol next = symbols[(i + 1) % n];
    const Symbol prev = symbols[(i + n - 1) % n];
    if (symbols[i] == Symbol::U) {
      if (n < 2 || next != Symbol::V) throw std::invalid_argument("U must be followed by V");
      has_pair = true;
    }
    if (symbols[i] == Symbol::V && (n < 2 || prev != Symbol::U)) {
      throw std::invalid_argument("V must be preceded by U");
    }
  }
  if (!has_pair) throw std::invalid_argument("word must contain at least one UV pair");
  symbols_ = least_rotation(symbols);
}

CycleWord CycleWord::parse(std::string_view letters) {
  std::vector<Symbol> symbols;
  for (char ch : letters) {
    switch (ch) {
      case 'U': symbols.push_back(Symbol::U); break;
      case 'V': symbols.push_back(Symbol::V); break;
      case 'W': symbols.push_back(Symbol::W); break;
      default: throw std::invalid_argument(std::string("unknown symbol '") + ch + "'");
    }
  }
  return CycleWord(std::move(symbols));
}

std::string CycleWord::str() const {
  std::string out;
  for (auto s : symbols_) out.push_back(static_cast<char>(s));
  return out;
}

namespace {

// Fixed-content necklace generation (FKM recursion with pruning) over the
// token alphabet P < W. Token order agrees with word order after expansion,
// so each least token rotation expands to the least word rotation.
struct TokenNecklaces {
  enum Token { P = 0, W = 1 };

  int length;  // number of tokens
  int pairs;   // number of P tokens
  std::vector<int> a;
  std::vector<CycleWord>& out;

  void emit() {
    std::vector<Symbol> word;
    for (int t = 1; t <= length; ++t) {
      if (a[t] == P) {
        word.push_back(Symbol::U);
        word.push_back(Symbol::V);
      } else {
        word.push_back(Symbol::W);
      }
    }
    out.emplace_back(std::move(word));
  }

  void gen(int t, int p, int used) {
    if (used > pairs || used + (length - t + 1) < pairs) return;
    if (t > length) {
      if (length % p == 0) emit();
      return;
    }
    a[t] = a[t - p];
    gen(t + 1, p, used + (a[t] == P));
    for (int j = a[t - p] + 1; j <= W; ++j) {
      a[t] = j;
      gen(t + 1, t, used + (j == P));
    }
  }
};

}  // namespace

std::vector<CycleWord> enumerate_words(int n) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  std::vector<CycleWord> out;
  for (int k = 1; 2 * k <= n; ++k) {
    const int length = n - k;
    TokenNecklaces gen{length, k, std::vector<int>(length + 1, 0), out};
    gen.gen(1, 1, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_words(int n) { return enumerate_words(n).size(); }

std::vector<CycleWord> replacement_family(int n) {
  if (n < 2) throw std::invalid_argument("replacement family needs n >= 2");
  std::vector<CycleWord> family;
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<Symbol> word;
    for (int i = 0; i < k; ++i) {
      word.push_back(Symbol::U);
      word.push_back(Symbol::V);
    }
    word.resize(n, Symbol::W);
    family.emplace_back(std::move(word));
  }
  return family;
}

ConcreteCycle expand(const CycleWord& word) {
  std::vector<Triangle> members;
  members.reserve(word.size());
  for (auto s : word.symbols()) members.push_back(triangle_for(s));
  return ConcreteCycle(std::move(members));
}

}  // namespace heron
