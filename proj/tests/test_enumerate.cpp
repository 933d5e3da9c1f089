#include <doctest.h>

#include <map>

#include "heron/enumerate.hpp"
#include "oracles.hpp"

using namespace heron;

namespace {

std::vector<Triangle> from_oracle(const std::vector<oracle::Sides>& v) {
  std::vector<Triangle> out;
  for (const auto& [a, b, c] : v) out.emplace_back(a, b, c);
  return out;
}

bool contains(const std::vector<Triangle>& v, const Triangle& t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

}  // namespace

TEST_CASE("triangles_with_perimeter examples") {
  CHECK(triangles_with_perimeter(6).empty());
  CHECK(triangles_with_perimeter(12) == std::vector<Triangle>{Triangle(3, 4, 5)});
  CHECK(contains(triangles_with_perimeter(54), Triangle(3, 25, 26)));
  CHECK(triangles_with_perimeter(3).empty());
  for (Int p = 3; p < 400; p += 2) REQUIRE(triangles_with_perimeter(p).empty());
}

TEST_CASE("triangles_with_perimeter matches the naive triple scan") {
  std::map<Int, std::vector<Triangle>> by_perimeter;
  for (const auto& t : from_oracle(oracle::heronian_up_to(240))) by_perimeter[t.perimeter()].push_back(t);
  for (Int p = 1; p <= 240; ++p) {
    const auto got = triangles_with_perimeter(p);
    REQUIRE(std::is_sorted(got.begin(), got.end()));
    REQUIRE(got == by_perimeter[p]);
  }
}

TEST_CASE("triangles_with_area examples") {
  CHECK(triangles_with_area(36) == std::vector<Triangle>{Triangle(3, 25, 26), Triangle(9, 10, 17)});
  CHECK(triangles_with_area(54) == std::vector<Triangle>{Triangle(9, 12, 15)});
  CHECK(triangles_with_area(68).empty());
  CHECK(triangles_with_area(1734) == std::vector<Triangle>{Triangle(51, 68, 85)});
  CHECK(triangles_with_area(204) == std::vector<Triangle>{Triangle(17, 25, 26)});
  CHECK_THROWS_AS(triangles_with_area(0), std::invalid_argument);
}

TEST_CASE("area query bound") {
  for (Int area = 1; area <= 2000; ++area) {
    const auto bound = area_query_bound(area);
    const Int s = bound.perimeter_bound / 2;
    REQUIRE(bound.perimeter_bound <= 2 * area + 2);
    REQUIRE(bound.perimeter_bound <= 2 * area * area + 2);
    REQUIRE(s * (s - 2) <= area * area);
    REQUIRE((s + 1) * (s - 1) > area * area);
  }
}

TEST_CASE("area search agrees with filtering perimeter search for A <= 200") {
  constexpr Int kMaxArea = 200;
  const Int p_max = area_query_bound(kMaxArea).perimeter_bound;
  std::map<Int, std::vector<Triangle>> by_area;
  for (Int p = 4; p <= p_max; p += 2) {
    for (const auto& t : triangles_with_perimeter(p)) {
      const Int area = *heron_area(t);
      if (area <= kMaxArea) by_area[area].push_back(t);
    }
  }
  for (Int area = 1; area <= kMaxArea; ++area) {
    auto expected = by_area[area];
    std::sort(expected.begin(), expected.end());
    for (const auto& t : expected) REQUIRE(t.perimeter() <= area_query_bound(area).perimeter_bound);
    REQUIRE(triangles_with_area(area) == expected);
  }
}

TEST_CASE("area search completeness: every skipped (x, y) is provably empty") {
  for (Int area = 1; area <= 200; ++area) {
    const auto found = triangles_with_area(area);
    const u128 sq = u128(area) * u128(area);
    std::size_t accepted = 0;
    for (Int x = 1; 3 * x * x * x * x <= area * area; ++x) {
      for (Int y = x; x * y * y * (x + 2 * y) <= area * area; ++y) {
        const u128 xy = u128(x) * u128(y);
        if (sq % xy != 0) continue;
        const u128 disc = u128(x + y) * u128(x + y) + 4 * (sq / xy);
        u128 root = 0;
        if (!oracle::is_square(disc, &root)) continue;
        if ((root - u128(x + y)) % 2 != 0) continue;
        const auto z = static_cast<Int>((root - u128(x + y)) / 2);
        if (z < y) continue;
        // Everything left must be among the results, with s*x*y*z = A^2.
        const Triangle t(y + z, x + z, x + y);
        REQUIRE(contains(found, t));
        REQUIRE(u128(x) * y * z * (x + y + z) == sq);
        ++accepted;
      }
    }
    REQUIRE(accepted == found.size());
  }
}

TEST_CASE("equable triangles") {
  const std::vector<Triangle> expected{Triangle(5, 12, 13), Triangle(6, 8, 10), Triangle(6, 25, 29),
                                       Triangle(7, 15, 20), Triangle(9, 10, 17)};
  const auto got = equable_triangles();
  CHECK(got == expected);
  CHECK(got.size() == 5);
  for (const auto& t : got) CHECK(heron_area(t) == t.perimeter());
  // No other equable triangle in a brute-force range.
  std::size_t equable = 0;
  for (const auto& [a, b, c] : oracle::heronian_up_to(300)) {
    oracle::Side area = 0;
    oracle::integer_area(a, b, c, &area);
    if (area == a + b + c) ++equable;
  }
  CHECK(equable == 5);
}

TEST_CASE("deficient triangles") {
  const auto got = deficient_triangles(2000);
  for (const auto& t : {Triangle(3, 4, 5), Triangle(5, 5, 8), Triangle(3, 25, 26), Triangle(3, 865, 866)}) {
    CHECK(contains(got, t));
  }
  for (const auto& t : got) {
    const auto d = decompose(t);
    CHECK(d.x <= 3);
    CHECK(d.y <= 9);
    CHECK(4 * d.s > d.x * d.y * d.z);
    CHECK(classify(t) == Classification::Deficient);
  }
  CHECK(deficient_triangles(11).empty());

  std::vector<Triangle> brute;
  for (const auto& t : from_oracle(oracle::heronian_up_to(300))) {
    if (t.perimeter() > *heron_area(t)) brute.push_back(t);
  }
  CHECK(deficient_triangles(300) == brute);
}

TEST_CASE("bulk enumerators agree with the naive scan") {
  const auto naive = from_oracle(oracle::heronian_up_to(300));
  CHECK(triangles_up_to_perimeter(300, 1) == naive);
  CHECK(triangles_up_to_perimeter(300, 3) == naive);
  CHECK(triangles_up_to_perimeter(300, 8) == naive);
  CHECK(triangles_up_to_perimeter(2).empty());

  for (Int area_max : {1, 36, 60, 150, 1000}) {
    std::vector<Triangle> expected;
    for (const auto& t : naive) {
      if (*heron_area(t) <= area_max) expected.push_back(t);
    }
    CHECK(triangles_within(300, area_max) == expected);
  }
}

TEST_CASE("every enumerated triangle is Heronian and consistently classified") {
  for (const auto& t : triangles_up_to_perimeter(400)) {
    REQUIRE(heron_area(t).has_value());
    REQUIRE(t.perimeter() % 2 == 0);
  }
  for (const auto& t : equable_triangles()) REQUIRE(classify(t) == Classification::Equable);
  for (Int area = 1; area <= 300; ++area) {
    for (const auto& t : triangles_with_area(area)) REQUIRE(heron_area(t) == area);
  }
}
