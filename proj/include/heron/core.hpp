// Exact integer arithmetic on triangles with integer sides.
//
// Everything here works in Ravi coordinates: for sides a <= b <= c with
// semiperimeter s, x = s - c, y = s - b, z = s - a, so x <= y <= z,
// s = x + y + z and Heron's formula reads A^2 = s * x * y * z.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace heron {

using Int = std::int64_t;
using u128 = unsigned __int128;

/// Largest perimeter accepted anywhere in the library. Keeps s*x*y*z < 2^128.
inline constexpr Int kMaxPerimeter = Int{1} << 32;

class NonHeronianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// floor(sqrt(n)) by Newton iteration from an upper estimate.
std::uint64_t isqrt(std::uint64_t n);
u128 isqrt(u128 n);

/// Returns the root if n is a perfect square.
std::optional<u128> exact_sqrt(u128 n);

/// Non-degenerate triangle with sides kept in sorted order a <= b <= c.
class Triangle {
 public:
  /// Throws std::invalid_argument on non-positive sides, a degenerate or
  /// impossible triple, or a perimeter above kMaxPerimeter.
  Triangle(Int a, Int b, Int c);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int perimeter() const { return a_ + b_ + c_; }

  auto operator<=>(const Triangle&) const = default;

 private:
  Int a_, b_, c_;
};

std::ostream& operator<<(std::ostream& os, const Triangle& t);
std::string to_string(const Triangle& t);

struct SxyzDecomposition {
  Int s, x, y, z;

  /// s * x * y * z, which is the squared area.
  u128 heron_product() const { return u128(s) * u128(x) * u128(y) * u128(z); }
  Triangle recompose() const { return Triangle(y + z, x + z, x + y); }

  bool operator==(const SxyzDecomposition&) const = default;
};

/// Throws NonHeronianError when the perimeter is odd.
SxyzDecomposition decompose(const Triangle& t);

/// Exact area, or nullopt when the triangle is not Heronian.
std::optional<Int> heron_area(const Triangle& t);

/// Area of the triangle with Ravi coordinates (x, y, z), if integral.
std::optional<Int> ravi_area(Int x, Int y, Int z);

enum class Classification { Equable, Deficient, Abundant };

std::string_view to_string(Classification c);

/// Throws NonHeronianError for non-Heronian input.
Classification classify(const Triangle& t);

}  // namespace heron
