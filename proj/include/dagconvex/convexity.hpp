#pragma once

#include <optional>
#include <vector>

#include "dagconvex/digraph.hpp"

namespace dagconvex {

/// Evidence that a set X is not convex: a directed path whose two ends lie
/// in X and which passes through at least one vertex outside X.
struct ConvexityWitness {
  Vertex from = -1;
  Vertex to = -1;
  /// from, ..., to; consecutive vertices are joined by arcs.
  std::vector<Vertex> path;
};

/// Checks the structural invariants of a witness against D and X.
bool is_valid_witness(const Digraph& d, const VertexSet& x, const ConvexityWitness& w);

/// X is convex iff reachable_from(X) ∩ reaching_to(X) ⊆ X.
///
/// This is the path-wise definition restated: any vertex w that is both
/// reachable from some u ∈ X and reaches some v ∈ X lies on the walk
/// u ⤳ w ⤳ v, and in an acyclic digraph every walk is a path (a repeated
/// vertex would close a directed cycle). Conversely, every interior vertex
/// of an X-to-X path is reachable from X and reaches X.
///
/// Throws Error{EmptySet} for an empty X.
bool is_convex(const Digraph& d, const VertexSet& x);

/// std::nullopt when X is convex, otherwise a witness through the lowest-label
/// offending vertex w, spliced from a shortest X ⤳ w and a shortest w ⤳ X path.
std::optional<ConvexityWitness> find_convexity_violation(const Digraph& d, const VertexSet& x);

/// Smallest convex superset of X.
VertexSet convex_hull(const Digraph& d, const VertexSet& x);

/// Lowest-label w ∉ H, adjacent to H, with H ∪ {w} connected and convex.
///
/// Preconditions are checked: D connected (DisconnectedInput), H non-empty
/// (EmptySet), H ≠ V (FullSet), H connected and convex (NotConnectedConvex).
/// For a valid H such a w always exists, so running out of candidates is a
/// logic error.
Vertex find_extension_vertex(const Digraph& d, const VertexSet& h);

/// Every vertex that is a source or a sink and not a cut-vertex, ascending.
/// Requires D connected with order >= 2; the result then has length >= 2.
std::vector<Vertex> find_non_cut_endpoints(const Digraph& d);

}  // namespace dagconvex
