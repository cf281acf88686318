#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dagconvex/vertex_set.hpp"

namespace dagconvex {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Per-vertex reachability rows for digraphs of order <= 64. All relations
/// are reflexive: bit v is set in descendants[v] and ancestors[v].
struct ReachabilityMasks {
  std::vector<std::uint64_t> descendants;
  std::vector<std::uint64_t> ancestors;
  /// Underlying undirected neighbourhood (not reflexive).
  std::vector<std::uint64_t> neighbours;
};

/// Immutable simple acyclic digraph on vertices 0..n-1.
///
/// Construction validates the arc list and computes a topological order;
/// the transitive closure is materialized on first use and shared between
/// copies. All const member functions are safe to call concurrently.
class Digraph {
 public:
  static constexpr int kMaskOrder = 64;

  /// Throws Error{InvalidArc} for out-of-range endpoints, self-loops and
  /// duplicate arcs, Error{CycleDetected} if the arcs contain a directed cycle.
  Digraph(int order, std::vector<Arc> arcs);

  int order() const noexcept { return order_; }
  /// Arcs in lexicographic (from, to) order.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::span<const Vertex> out(Vertex v) const;
  std::span<const Vertex> in(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }
  bool has_arc(Vertex from, Vertex to) const;

  /// Kahn order with lowest-label tie breaking.
  const std::vector<Vertex>& topological_order() const noexcept { return topo_; }

  /// Throws Error{OrderTooLarge} when order() > 64.
  const ReachabilityMasks& masks() const;

  VertexSet empty_set() const { return VertexSet(order_); }
  VertexSet all_vertices() const { return VertexSet::full(order_); }

 private:
  struct Cache;

  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::vector<Vertex> topo_;
  std::shared_ptr<Cache> cache_;
};

Digraph build_digraph(int order, std::vector<Arc> arcs);

/// Every vertex reachable by a directed path from some member of `from`,
/// including the members themselves.
VertexSet reachable_from(const Digraph& d, const VertexSet& from);
/// Every vertex with a directed path to some member of `to`, including them.
VertexSet reaching_to(const Digraph& d, const VertexSet& to);

/// Whether D[s] is connected once arc directions are ignored. Throws
/// Error{EmptySet} for an empty set.
bool is_underlying_connected(const Digraph& d, const VertexSet& s);
/// Whole-graph connectivity; false for the empty digraph.
bool is_connected(const Digraph& d);

struct SourcesAndSinks {
  VertexSet sources;
  VertexSet sinks;
};

SourcesAndSinks sources_and_sinks(const Digraph& d);

/// Requires a connected digraph of order >= 2 (Error{DisconnectedInput},
/// Error{OrderTooSmall}). Answers by a traversal of D - v.
bool is_cut_vertex(const Digraph& d, Vertex v);

/// All cut-vertices of a connected digraph in one depth-first pass
/// (articulation points of the underlying graph). Same preconditions as
/// is_cut_vertex.
VertexSet cut_vertices(const Digraph& d);

}  // namespace dagconvex
