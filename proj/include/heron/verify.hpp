// Bounded, exhaustive checks of the structural claims about sociable
// Heronian cycles. Every check echoes its bounds into the report and is
// deterministic: same bounds, same serialized report.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "heron/core.hpp"

namespace heron {

enum class Verdict { VerifiedWithinBounds, Counterexample };

std::string_view to_string(Verdict v);

struct TheoremReport {
  std::string claim;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::VerifiedWithinBounds;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();

  bool verified() const { return verdict == Verdict::VerifiedWithinBounds; }

  /// {"claim", "bounds", "verdict", "witnesses"} in that order.
  nlohmann::ordered_json to_json() const;
};

/// The four triangles a deficient cycle member can be.
std::vector<Triangle> theorem2_candidates();

/// The triangles that sociable cycles are built from: (9,12,15), (3,25,26), (9,10,17).
std::vector<Triangle> cycle_building_blocks();

/// The five equable triangles as listed in the literature.
std::vector<Triangle> known_equable_triangles();

/// For Heronian triangles with perimeter <= p_max and even area:
/// p | A^2 and A^2 / p == xyz / 2.
TheoremReport check_lemma2(Int p_max);

/// z | 2^(2^n) (x+y)^(2^n - 1), evaluated modulo z.
bool check_theorem1_divisibility(Int x, Int y, Int z, int n);

/// Every member of every n-cycle (n <= n_max, perimeters <= p_max) passes the
/// divisibility test for its n.
TheoremReport check_theorem1(Int p_max, int n_max);

/// Explicit single evaluation of the divisibility test.
TheoremReport check_theorem1_triple(Int x, Int y, Int z, int n);

/// Deficient triangles with even area, x <= 3, y <= 9 and the n-divisibility
/// condition, up to perimeter p_max, are among theorem2_candidates().
/// Witnesses list the survivors.
TheoremReport check_theorem2(int n, Int p_max);

/// Every deficient Heronian triangle with perimeter <= p_max has x <= 3, y <= 9.
TheoremReport check_lemma3(Int p_max);

struct PowerDifferenceSolutions {
  // Pairs are (exponent of the minuend, exponent of the subtrahend).
  std::vector<std::pair<int, int>> two_minus_three;  // 2^p - 3^q = 1 as (p, q)
  std::vector<std::pair<int, int>> three_minus_two;  // 3^q - 2^p = 1 as (q, p)
};

PowerDifferenceSolutions solve_power_difference(int exp_max);

/// Wraps solve_power_difference and compares against 2-1, 4-3, 3-2, 9-8.
TheoremReport check_power_difference(int exp_max);

/// Positive (z, A) with (scale*z + offset)^2 - A^2 == constant, from the
/// factor pairs of constant.
std::vector<std::pair<Int, Int>> solve_square_difference(Int constant, Int scale, Int offset);

/// The three square-difference eliminations for (x, y) = (2,2), (1,4), (1,1).
TheoremReport check_factorization_cases();

/// Cycles of length <= n_max with perimeters <= p_max use only the three
/// building blocks and each contains (3,25,26).
TheoremReport check_theorem3(Int p_max, int n_max);

/// equable_triangles() reproduces the known five and the complete catalog up
/// to p_max holds no other equable triangle.
TheoremReport check_equable_five(Int p_max);

}  // namespace heron
