#include "heron/core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace heron {

namespace {

int bit_width(u128 n) {
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(n));
}

// Newton's iteration decreases monotonically from any start >= floor(sqrt(n))
// and stops at the first non-decreasing step, which is the floor root.
template <typename U>
U newton_sqrt(U n, int bits) {
  if (n < 2) return n;
  U x = U{1} << ((bits + 1) / 2);
  for (;;) {
    const U next = (x + n / x) / 2;
    if (next >= x) return x;
    x = next;
  }
}

template <std::size_t M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (std::size_t i = 0; i < M; ++i) table[(i * i) % M] = true;
  return table;
}

constexpr auto kSquares64 = square_residues<64>();
constexpr auto kSquares63 = square_residues<63>();
constexpr auto kSquares65 = square_residues<65>();
constexpr auto kSquares11 = square_residues<11>();

bool may_be_square(std::uint64_t n) {
  if (!kSquares64[n & 63]) return false;
  const std::uint64_t r = n % (63ULL * 65ULL * 11ULL);
  return kSquares63[r % 63] && kSquares65[r % 65] && kSquares11[r % 11];
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  return newton_sqrt<std::uint64_t>(n, std::bit_width(n));
}

u128 isqrt(u128 n) {
  if ((n >> 64) == 0) return isqrt(static_cast<std::uint64_t>(n));
  return newton_sqrt<u128>(n, bit_width(n));
}

std::optional<u128> exact_sqrt(u128 n) {
  if ((n >> 64) == 0) {
    const auto small = static_cast<std::uint64_t>(n);
    if (!may_be_square(small)) return std::nullopt;
    const std::uint64_t r = isqrt(small);
    if (r * r != small) return std::nullopt;
    return u128(r);
  }
  if (!may_be_square(static_cast<std::uint64_t>(n % (u128(64) * 63 * 65 * 11)))) {
    return std::nullopt;
  }
  const u128 r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Triangle::Triangle(Int a, Int b, Int c) {
  std::array<Int, 3> sides{a, b, c};
  std::sort(sides.begin(), sides.end());
  if (sides[0] < 1) throw std::invalid_argument("triangle sides must be positive");
  if (sides[2] >= kMaxPerimeter) throw std::invalid_argument("triangle side too large");
  if (sides[0] + sides[1] <= sides[2]) {
    throw std::invalid_argument("sides violate the strict triangle inequality");
  }
  if (sides[0] + sides[1] + sides[2] > kMaxPerimeter) {
    throw std::invalid_argument("triangle perimeter too large");
  }
  a_ = sides[0];
  b_ = sides[1];
  c_ = sides[2];
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) {
  return os << '(' << t.a() << ',' << t.b() << ',' << t.c() << ')';
}

std::string to_string(const Triangle& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

SxyzDecomposition decompose(const Triangle& t) {
  if (t.perimeter() % 2 != 0) {
    throw NonHeronianError("odd perimeter " + std::to_string(t.perimeter()) + " for " +
                           to_string(t));
  }
  const Int s = t.perimeter() / 2;
  return {s, s - t.c(), s - t.b(), s - t.a()};
}

std::optional<Int> ravi_area(Int x, Int y, Int z) {
  const Int s = x + y + z;
  const auto root = exact_sqrt(u128(s) * u128(x) * u128(y) * u128(z));
  if (!root) return std::nullopt;
  return static_cast<Int>(*root);
}

std::optional<Int> heron_area(const Triangle& t) {
  if (t.perimeter() % 2 != 0) return std::nullopt;
  const auto d = decompose(t);
  return ravi_area(d.x, d.y, d.z);
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Equable: return "equable";
    case Classification::Deficient: return "deficient";
    case Classification::Abundant: return "abundant";
  }
  return "?";
}

Classification classify(const Triangle& t) {
  const auto area = heron_area(t);
  if (!area) throw NonHeronianError(to_string(t) + " is not Heronian");
  if (*area == t.perimeter()) return Classification::Equable;
  return t.perimeter() > *area ? Classification::Deficient : Classification::Abundant;
}

}  // namespace heron
