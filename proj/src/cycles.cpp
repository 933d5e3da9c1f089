#include "heron/cycles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "heron/enumerate.hpp"
#include "heron/rotation.hpp"

namespace heron {

namespace {

Int area_or_throw(const Triangle& t) {
  const auto area = heron_area(t);
  if (!area) throw NonHeronianError(to_string(t) + " is not Heronian");
  return *area;
}

}  // namespace

ConcreteCycle::ConcreteCycle(std::vector<Triangle> members) {
  if (members.empty()) throw std::invalid_argument("cycle must have at least one member");
  bool any_non_equable = false;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto area = heron_area(members[i]);
    if (!area) throw std::invalid_argument(to_string(members[i]) + " is not Heronian");
    const Triangle& next = members[(i + 1) % members.size()];
    if (*area != next.perimeter()) {
      throw std::invalid_argument("area of " + to_string(members[i]) +
                                  " does not equal perimeter of " + to_string(next));
    }
    if (*area != members[i].perimeter()) any_non_equable = true;
  }
  if (!any_non_equable) throw std::invalid_argument("cycle consists only of equable triangles");
  members_ = least_rotation(members);
}

bool ConcreteCycle::contains(const Triangle& t) const {
  return std::find(members_.begin(), members_.end(), t) != members_.end();
}

std::vector<Triangle> successors(const Triangle& t) {
  return triangles_with_perimeter(area_or_throw(t));
}

std::vector<Triangle> predecessors(const Triangle& t) {
  area_or_throw(t);
  return triangles_with_area(t.perimeter());
}

namespace {

struct TraceWalker {
  Direction direction;
  int max_steps;
  Triangle start;
  std::vector<TraceStep> steps;
  std::vector<ChainTrace> out;

  void finish(TraceEnd end) { out.push_back({start, direction, steps, end}); }

  bool on_path(const Triangle& t) const {
    if (t == start) return true;
    // The newest step is the one being tested.
    return std::any_of(steps.begin(), steps.end() - 1,
                       [&](const TraceStep& s) { return s.triangle == t; });
  }

  void extend(const Triangle& current) {
    if (static_cast<int>(steps.size()) >= max_steps) {
      finish(TraceEnd::BoundHit);
      return;
    }
    const bool forward = direction == Direction::Successor;
    const auto next = forward ? successors(current) : predecessors(current);
    if (next.empty()) {
      finish(TraceEnd::DeadEnd);
      return;
    }
    const Int link = forward ? area_or_throw(current) : current.perimeter();
    for (const auto& t : next) {
      steps.push_back({t, link});
      if (on_path(t)) {
        finish(TraceEnd::CycleClosed);
      } else {
        extend(t);
      }
      steps.pop_back();
    }
  }
};

}  // namespace

std::vector<ChainTrace> trace_chain(const Triangle& start, Direction direction, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
  area_or_throw(start);
  TraceWalker walker{direction, max_steps, start, {}, {}};
  walker.extend(start);
  return walker.out;
}

namespace {

// Link graph on a finite vertex set: edge u -> v iff area(u) == perimeter(v).
struct LinkGraph {
  std::vector<Triangle> vertices;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> in;
  std::vector<bool> alive;

  explicit LinkGraph(std::vector<Triangle> vs) : vertices(std::move(vs)) {
    const std::size_t n = vertices.size();
    out.resize(n);
    in.resize(n);
    alive.assign(n, true);
    std::multimap<Int, std::size_t> by_perimeter;
    for (std::size_t i = 0; i < n; ++i) by_perimeter.emplace(vertices[i].perimeter(), i);
    for (std::size_t i = 0; i < n; ++i) {
      const Int area = *heron_area(vertices[i]);
      auto [lo, hi] = by_perimeter.equal_range(area);
      for (auto it = lo; it != hi; ++it) {
        out[i].push_back(it->second);
        in[it->second].push_back(i);
      }
    }
    trim();
  }

  // Drop vertices that cannot lie on a closed walk: no live in- or out-edge.
  void trim() {
    std::vector<std::size_t> in_deg(vertices.size()), out_deg(vertices.size());
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      in_deg[i] = in[i].size();
      out_deg[i] = out[i].size();
      if (in_deg[i] == 0 || out_deg[i] == 0) queue.push_back(i);
    }
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      if (!alive[v]) continue;
      alive[v] = false;
      for (auto u : out[v]) {
        if (alive[u] && --in_deg[u] == 0) queue.push_back(u);
      }
      for (auto u : in[v]) {
        if (alive[u] && --out_deg[u] == 0) queue.push_back(u);
      }
    }
  }

  // Shortest number of links from each vertex to target.
  std::vector<int> distances_to(std::size_t target) const {
    std::vector<int> dist(vertices.size(), -1);
    std::deque<std::size_t> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto u : in[v]) {
        if (alive[u] && dist[u] < 0) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    return dist;
  }
};

struct WalkCollector {
  const LinkGraph& graph;
  int length;
  std::size_t start;
  std::vector<int> dist;
  std::vector<std::size_t> path;
  std::set<std::vector<Triangle>>& found;

  void walk(std::size_t v) {
    const int remaining = length - static_cast<int>(path.size());
    if (remaining == 0) {
      if (v != start) return;
      std::vector<Triangle> members;
      members.reserve(path.size());
      for (auto i : path) members.push_back(graph.vertices[i]);
      found.insert(least_rotation(members));
      return;
    }
    path.push_back(v);
    for (auto u : graph.out[v]) {
      if (graph.alive[u] && dist[u] >= 0 && dist[u] <= remaining - 1) walk(u);
    }
    path.pop_back();
  }
};

}  // namespace

ClosedWalkSearch search_closed_walks(int n, Int p_max) {
  if (n < 1) throw std::invalid_argument("cycle length must be positive");
  if (p_max > kMaxPerimeter) throw std::invalid_argument("p_max exceeds supported range");
  const LinkGraph graph(triangles_within(p_max, p_max));
  std::set<std::vector<Triangle>> walks;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (!graph.alive[v]) continue;
    WalkCollector collector{graph, n, v, graph.distances_to(v), {}, walks};
    collector.walk(v);
  }
  ClosedWalkSearch result;
  for (const auto& w : walks) {
    const bool all_equable = std::all_of(w.begin(), w.end(), [](const Triangle& t) {
      return *heron_area(t) == t.perimeter();
    });
    if (all_equable) {
      result.all_equable.push_back(w);
    } else {
      result.cycles.emplace_back(w);
    }
  }
  return result;
}

std::vector<ConcreteCycle> find_cycles(int n, Int p_max) {
  return search_closed_walks(n, p_max).cycles;
}

std::vector<ConcreteCycle> amicable_pairs(Int p_max) { return find_cycles(2, p_max); }

}  // namespace heron
