// Brute-force reference implementations used only by the tests. None of them
// call into the library's enumeration or square-root code.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Side = std::int64_t;
using Sides = std::tuple<Side, Side, Side>;
using u128 = unsigned __int128;

/// Square root by bisection; returns true and the root for perfect squares.
inline bool is_square(u128 n, u128* root = nullptr) {
  u128 lo = 0, hi = u128(1) << 64;  // hi^2 > any u128
  while (hi - lo > 1) {
    const u128 mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (root) *root = lo;
  return lo * lo == n;
}

/// Heron via 16 A^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c), no semiperimeter.
inline bool integer_area(Side a, Side b, Side c, Side* area = nullptr) {
  const u128 prod = u128(a + b + c) * u128(b + c - a) * u128(a + c - b) * u128(a + b - c);
  u128 root = 0;
  if (!is_square(prod, &root) || root % 4 != 0) return false;
  if (area) *area = static_cast<Side>(root / 4);
  return true;
}

/// Every Heronian (a <= b <= c) with a + b + c <= p_max, sorted.
inline std::vector<Sides> heronian_up_to(Side p_max) {
  std::vector<Sides> out;
  for (Side a = 1; 3 * a <= p_max; ++a) {
    for (Side b = a; a + 2 * b <= p_max; ++b) {
      for (Side c = b; c < a + b && a + b + c <= p_max; ++c) {
        if (integer_area(a, b, c)) out.emplace_back(a, b, c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string least_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
  return best;
}

/// All words over {U,V,W} of length n where U is always followed by V and V
/// always preceded by U (cyclically), with at least one U, up to rotation.
inline std::set<std::string> brute_force_words(int n) {
  std::set<std::string> out;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::string w;
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) w.push_back("UVW"[c % 3]);
    bool ok = w.find('U') != std::string::npos;
    for (int i = 0; i < n && ok; ++i) {
      if (w[i] == 'U' && w[(i + 1) % n] != 'V') ok = false;
      if (w[i] == 'V' && w[(i + n - 1) % n] != 'U') ok = false;
    }
    if (ok) out.insert(least_rotation(w));
  }
  return out;
}

/// z | 2^(2^n) (x+y)^(2^n - 1) with the full power materialized.
inline bool theorem1_bigint(std::int64_t x, std::int64_t y, std::int64_t z, int n) {
  using boost::multiprecision::cpp_int;
  const unsigned e = 1u << n;
  const cpp_int value = boost::multiprecision::pow(cpp_int(2), e) *
                        boost::multiprecision::pow(cpp_int(x + y), e - 1);
  return value % z == 0;
}

}  // namespace oracle
