// Sociable cycles of Heronian triangles.
//
// Triangle t links to u when area(t) == perimeter(u). A cycle is a closed walk
// of such links, taken up to rotation, that is not made only of equable
// triangles.

#pragma once

#include <compare>
#include <vector>

#include "heron/core.hpp"

namespace heron {

class ConcreteCycle {
 public:
  /// Validates the linking equation cyclically and that some member is not
  /// equable, then stores the least rotation. Throws std::invalid_argument.
  explicit ConcreteCycle(std::vector<Triangle> members);

  const std::vector<Triangle>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Triangle& t) const;

  auto operator<=>(const ConcreteCycle&) const = default;

 private:
  std::vector<Triangle> members_;
};

/// Heronian triangles whose perimeter equals area(t).
std::vector<Triangle> successors(const Triangle& t);

/// Heronian triangles whose area equals perimeter(t).
std::vector<Triangle> predecessors(const Triangle& t);

enum class Direction { Predecessor, Successor };
enum class TraceEnd { DeadEnd, CycleClosed, BoundHit };

struct TraceStep {
  Triangle triangle;
  Int link;  // the area/perimeter value shared with the previous member
  bool operator==(const TraceStep&) const = default;
};

struct ChainTrace {
  Triangle start;
  Direction direction;
  std::vector<TraceStep> steps;
  TraceEnd end;
};

/// Follows links from `start` for at most max_steps, branching when a step has
/// several candidates. Returns one trace per root-to-leaf branch.
std::vector<ChainTrace> trace_chain(const Triangle& start, Direction direction, int max_steps);

struct ClosedWalkSearch {
  std::vector<ConcreteCycle> cycles;                 // sorted, canonical rotations
  std::vector<std::vector<Triangle>> all_equable;    // closed walks dropped by the filter
};

/// Every closed walk of length n among triangles with perimeter and area at
/// most p_max, split into sociable cycles and the all-equable remainder.
ClosedWalkSearch search_closed_walks(int n, Int p_max);

std::vector<ConcreteCycle> find_cycles(int n, Int p_max);
std::vector<ConcreteCycle> amicable_pairs(Int p_max);

}  // namespace heron
