#include "dagconvex/convexity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "dagconvex/error.hpp"

namespace dagconvex {

namespace {

void require_nonempty(const VertexSet& x) {
  if (x.empty()) throw Error(ErrorCode::EmptySet, "convexity of an empty set");
}

VertexSet violators(const Digraph& d, const VertexSet& x) {
  return (reachable_from(d, x) & reaching_to(d, x)) - x;
}

// Shortest directed path from `start` to the first vertex of `goal` reached,
// following out-arcs (forward) or in-arcs (backward). Returned in traversal
// order, starting with `start`.
template <bool Forward>
std::vector<Vertex> shortest_path_to_set(const Digraph& d, const std::vector<Vertex>& starts,
                                         const VertexSet& goal) {
  std::vector<Vertex> parent(static_cast<std::size_t>(d.order()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(d.order()), false);
  std::queue<Vertex> frontier;
  for (Vertex s : starts) {
    seen[s] = true;
    frontier.push(s);
  }
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : Forward ? d.out(v) : d.in(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      if (goal.contains(w)) {
        std::vector<Vertex> path{w};
        for (Vertex p = v; p >= 0; p = parent[p]) path.push_back(p);
        std::reverse(path.begin(), path.end());
        return path;
      }
      frontier.push(w);
    }
  }
  return {};
}

}  // namespace

bool is_valid_witness(const Digraph& d, const VertexSet& x, const ConvexityWitness& w) {
  const auto& p = w.path;
  if (p.size() < 3 || p.front() != w.from || p.back() != w.to) return false;
  if (!x.contains(w.from) || !x.contains(w.to)) return false;
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : p) {
    if (v < 0 || v >= d.order()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!d.has_arc(p[i], p[i + 1])) return false;
  }
  return std::any_of(p.begin() + 1, p.end() - 1, [&](Vertex v) { return !x.contains(v); });
}

bool is_convex(const Digraph& d, const VertexSet& x) {
  require_nonempty(x);
  return violators(d, x).empty();
}

std::optional<ConvexityWitness> find_convexity_violation(const Digraph& d, const VertexSet& x) {
  require_nonempty(x);
  VertexSet bad = violators(d, x);
  if (bad.empty()) return std::nullopt;
  const Vertex w = bad.first();

  // Backward search from w towards X yields the X ⤳ w half reversed; its
  // interior avoids X because the search stops at the first X vertex.
  std::vector<Vertex> head = shortest_path_to_set<false>(d, {w}, x);
  std::vector<Vertex> tail = shortest_path_to_set<true>(d, {w}, x);
  if (head.empty() || tail.empty()) throw std::logic_error("violator without X-to-X path");
  std::reverse(head.begin(), head.end());

  ConvexityWitness out;
  out.path = std::move(head);
  out.path.insert(out.path.end(), tail.begin() + 1, tail.end());
  out.from = out.path.front();
  out.to = out.path.back();
  return out;
}

VertexSet convex_hull(const Digraph& d, const VertexSet& x) {
  require_nonempty(x);
  VertexSet hull = x;
  while (true) {
    VertexSet grown = hull | (reachable_from(d, hull) & reaching_to(d, hull));
    if (grown == hull) return hull;
    hull = std::move(grown);
  }
}

Vertex find_extension_vertex(const Digraph& d, const VertexSet& h) {
  if (!is_connected(d)) throw Error(ErrorCode::DisconnectedInput, "digraph is not connected");
  if (h.empty()) throw Error(ErrorCode::EmptySet, "extension of an empty set");
  if (h.size() == d.order()) throw Error(ErrorCode::FullSet, "H already contains every vertex");
  if (!is_underlying_connected(d, h) || !is_convex(d, h)) {
    throw Error(ErrorCode::NotConnectedConvex, "H = {" + h.to_string() + "} is not connected and convex");
  }

  VertexSet boundary = d.empty_set();
  for (Vertex v = h.first(); v >= 0; v = h.next(v)) {
    for (Vertex w : d.out(v)) boundary.insert(w);
    for (Vertex w : d.in(v)) boundary.insert(w);
  }
  boundary -= h;
  for (Vertex w = boundary.first(); w >= 0; w = boundary.next(w)) {
    VertexSet candidate = h;
    candidate.insert(w);
    if (is_convex(d, candidate)) return w;
  }
  throw std::logic_error("no extension vertex for connected convex H = {" + h.to_string() + "}");
}

std::vector<Vertex> find_non_cut_endpoints(const Digraph& d) {
  VertexSet cuts = cut_vertices(d);
  auto [sources, sinks] = sources_and_sinks(d);
  return ((sources | sinks) - cuts).members();
}

}  // namespace dagconvex
