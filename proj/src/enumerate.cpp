#include "heron/enumerate.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace heron {

namespace {

void check_perimeter_range(Int p) {
  if (p > kMaxPerimeter) {
    throw std::invalid_argument("perimeter " + std::to_string(p) + " exceeds supported range");
  }
}

void sort_unique(std::vector<Triangle>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

void collect_semiperimeter(Int s, std::vector<Triangle>& out) {
  for (Int x = 1; 3 * x <= s; ++x) {
    for (Int y = x; x + 2 * y <= s; ++y) {
      const Int z = s - x - y;
      if (ravi_area(x, y, z)) out.emplace_back(y + z, x + z, x + y);
    }
  }
}

}  // namespace

AreaQueryBound area_query_bound(Int area) {
  if (area < 1) throw std::invalid_argument("area must be positive");
  // Largest s with (s-1)^2 <= A^2 + 1.
  const Int s = 1 + static_cast<Int>(isqrt(u128(area) * u128(area) + 1));
  return {area, 2 * s};
}

std::vector<Triangle> triangles_with_perimeter(Int p) {
  check_perimeter_range(p);
  std::vector<Triangle> out;
  if (p < 3 || p % 2 != 0) return out;
  collect_semiperimeter(p / 2, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> triangles_with_area(Int area) {
  if (area < 1) throw std::invalid_argument("area must be positive");
  if (area >= kMaxPerimeter) throw std::invalid_argument("area exceeds supported range");
  const u128 sq = u128(area) * u128(area);
  std::vector<Triangle> out;
  // s >= 3x and xyz >= x^3 give 3x^4 <= A^2; s >= x + 2y and z >= y give
  // x y^2 (x + 2y) <= A^2.
  for (Int x = 1; 3 * u128(x) * x * x * x <= sq; ++x) {
    for (Int y = x; u128(x) * y * y * (x + 2 * y) <= sq; ++y) {
      const u128 xy = u128(x) * u128(y);
      if (sq % xy != 0) continue;
      // z^2 + (x+y) z = A^2 / (xy)
      const u128 q = sq / xy;
      const u128 b = u128(x + y);
      const auto root = exact_sqrt(b * b + 4 * q);
      if (!root || *root <= b || (*root - b) % 2 != 0) continue;
      const auto z = static_cast<Int>((*root - b) / 2);
      if (z < y) continue;
      out.emplace_back(y + z, x + z, x + y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> equable_triangles() {
  // A = p means s*x*y*z = 4 s^2, i.e. xyz = 4(x+y+z) <= 12z, so xy <= 12.
  // For each admissible (x, y) the equation fixes z = 4(x+y)/(xy-4).
  constexpr Int kProductBound = 12;
  std::vector<Triangle> out;
  Int x = 1;
  for (; x * x <= kProductBound; ++x) {
    for (Int y = x; x * y <= kProductBound; ++y) {
      const Int denom = x * y - 4;
      if (denom <= 0) continue;
      if ((4 * (x + y)) % denom != 0) continue;
      const Int z = 4 * (x + y) / denom;
      if (z < y) continue;
      const Triangle t(y + z, x + z, x + y);
      const auto area = heron_area(t);
      if (area && *area == t.perimeter()) out.push_back(t);
    }
  }
  // Region exhausted: every x from here on has xy >= x^2 > 12.
  if (x * x <= kProductBound) throw std::logic_error("equable search stopped inside its region");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> deficient_triangles(Int p_max) {
  check_perimeter_range(p_max);
  std::vector<Triangle> out;
  const Int s_max = p_max / 2;
  // p > A  <=>  4(x+y+z) > xyz, and 4(x+y+z) <= 12z forces xy < 12.
  for (Int x = 1; x * x < 12; ++x) {
    for (Int y = x; x * y < 12; ++y) {
      for (Int z = y; x + y + z <= s_max; ++z) {
        if (x * y * z >= 4 * (x + y + z)) break;  // monotone in z once xy > 4
        if (const auto area = ravi_area(x, y, z)) {
          if (2 * (x + y + z) > *area) out.emplace_back(y + z, x + z, x + y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> triangles_up_to_perimeter(Int p_max, unsigned workers) {
  check_perimeter_range(p_max);
  const Int s_max = p_max / 2;
  if (s_max < 3) return {};
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  // Cost grows like s^2, so deal semiperimeters round-robin.
  std::vector<std::future<std::vector<Triangle>>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [=] {
      std::vector<Triangle> local;
      for (Int s = 3 + w; s <= s_max; s += workers) collect_semiperimeter(s, local);
      return local;
    }));
  }
  std::vector<Triangle> out;
  for (auto& part : parts) {
    auto local = part.get();
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_unique(out);
  return out;
}

std::vector<Triangle> triangles_within(Int p_max, Int area_max) {
  check_perimeter_range(p_max);
  if (area_max < 1) return {};
  const Int s_max = p_max / 2;
  const u128 bound = u128(area_max) * u128(area_max);
  std::vector<Triangle> out;
  for (Int x = 1; 3 * x <= s_max && 3 * u128(x) * x * x * x <= bound; ++x) {
    for (Int y = x; x + 2 * y <= s_max && u128(x) * y * y * (x + 2 * y) <= bound; ++y) {
      for (Int z = y; x + y + z <= s_max; ++z) {
        const Int s = x + y + z;
        if (u128(s) * x * y * z > bound) break;
        if (ravi_area(x, y, z)) out.emplace_back(y + z, x + z, x + y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heron
