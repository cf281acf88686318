#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dagconvex/digraph.hpp"

namespace dagconvex {

enum class Family { Dt, Gi, Path, Random };

/// Parameters selecting one generated digraph.
struct FamilySpec {
  Family family = Family::Path;
  /// t for Dt, i for Gi, n for Path and Random.
  int param = 1;
  /// Arc probability, Random only.
  double p = 0.5;
  /// PRNG seed, Random only.
  std::uint64_t seed = 0;

  /// "dt:4", "gi:2", "path:3", "random:8:0.3:42".
  std::string to_string() const;
};

/// Parses the to_string() form. A Random spec may omit the seed, in which
/// case `default_seed` is used.
FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed = 0);

/// Symbolic vertex names, e.g. "x3", "y'1", "z", "s", "a2".
class LabelMap {
 public:
  LabelMap() = default;
  explicit LabelMap(std::vector<std::string> names);

  const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
  /// Throws Error{InvalidParameter} for an unknown name.
  Vertex at(std::string_view name) const;
  std::size_t size() const noexcept { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
};

/// Smallest r with r*r >= t.
int ceil_sqrt(int t);

/// Label layout of D_t: x_1..x_t, y_1..y_r, z, y'_1..y'_r, x'_1..x'_t with
/// consecutive labels in that order (indices are 1-based as in the names).
struct DtLayout {
  int t = 1;
  int r = 1;

  int order() const { return 2 * t + 2 * r + 1; }
  Vertex x(int i) const { return i - 1; }
  Vertex y(int j) const { return t + j - 1; }
  Vertex z() const { return t + r; }
  Vertex y_prime(int j) const { return t + r + j; }
  Vertex x_prime(int i) const { return t + 2 * r + i; }

  VertexSet x_set() const;
  VertexSet x_prime_set() const;
  VertexSet y_set() const;
  VertexSet y_prime_set() const;
  /// Y ∪ {z} ∪ Y'.
  VertexSet inner_set() const;
};

/// Layout of G_i: s = 0, a_j = 2j - 1, b_j = 2j, t = 2i + 1.
struct GiLayout {
  int i = 1;

  int order() const { return 2 * i + 2; }
  Vertex s() const { return 0; }
  Vertex a(int j) const { return 2 * j - 1; }
  Vertex b(int j) const { return 2 * j; }
  Vertex t() const { return 2 * i + 1; }
};

struct DtInstance {
  Digraph graph;
  DtLayout layout;
  LabelMap labels;
};

struct GiInstance {
  Digraph graph;
  GiLayout layout;
  LabelMap labels;
};

/// Arcs x_i→x_{i+1}, x'_i→x'_{i+1} (i < t) and x_t→y_j, y_j→z, z→y'_j,
/// y'_j→x'_1 (j ≤ r), r = ⌈√t⌉. Requires t >= 1.
DtInstance gen_dt(int t);

/// Source s, sink t and i internally disjoint paths s→a_j→b_j→t. Requires i >= 1.
GiInstance gen_gi(int i);

/// Directed path 0→1→…→n-1. Requires n >= 1.
Digraph gen_path(int n);

/// Seeded random connected DAG.
///
/// The stream comes from std::mt19937_64 seeded with `seed`; only raw engine
/// outputs are used so the result is identical on every platform:
///   1. Fisher–Yates shuffle of 0..n-1 (for k = n-1 down to 1, swap position k
///      with position uniform(0..k), where uniform draws by rejection) gives
///      the topological order.
///   2. For every position pair a < b in row-major order, the arc
///      order[a]→order[b] is kept when (draw >> 11) * 2^-53 < p.
///   3. Components of the underlying graph, ordered by their earliest
///      position, are chained: for consecutive components c, c+1 the arc
///      goes from the last vertex of c placed before the first vertex of c+1
///      to that first vertex. The arc runs forward, so acyclicity holds.
///
/// Requires n >= 1 and 0 < p <= 1.
Digraph gen_random_connected_dag(int n, double p, std::uint64_t seed);

struct FamilyInstance {
  FamilySpec spec;
  Digraph graph;
  LabelMap labels;
};

/// Dispatches on spec.family. Path and Random vertices are named by label.
FamilyInstance generate(const FamilySpec& spec);

struct GiCounts {
  /// 4^i - 1: the non-empty subsets of the internal vertices, all convex.
  std::uint64_t convex_lower = 0;
  /// 2·3^i + 3i + 1.
  std::uint64_t connected_convex = 0;
};

/// Throws Error{Overflow} once 4^i no longer fits in 64 bits (i > 31).
GiCounts closed_form_gi_counts(int i);

struct PathCounts {
  std::uint64_t connected_convex = 0;  ///< n(n+1)/2
  std::vector<std::uint64_t> histogram;  ///< histogram[k-1] = n - k + 1
};

PathCounts closed_form_path_counts(int n);

/// Brute-force classification of the convex sets of D_t with at least 2r+2
/// vertices, split by which of X and X' they meet. The X-only family is
/// further split into sets inside X, sets inside X ∪ Y meeting Y, and sets
/// containing z.
struct DtCategoryCounts {
  std::uint64_t large_total = 0;
  std::uint64_t missing_x_and_x_prime = 0;
  std::uint64_t x_only = 0;
  std::uint64_t x_only_within_x = 0;
  std::uint64_t x_only_within_x_y = 0;
  std::uint64_t x_only_with_z = 0;
  std::uint64_t x_only_other = 0;
  std::uint64_t x_prime_only = 0;
  std::uint64_t both = 0;
};

DtCategoryCounts classify_dt_large_convex_sets(const DtInstance& dt, int max_order = 25);

}  // namespace dagconvex
