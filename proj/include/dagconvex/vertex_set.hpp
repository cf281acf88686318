#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dagconvex {

using Vertex = int;

/// Subset of the vertex range 0..n-1 of a host digraph, stored as a
/// fixed-width bit vector. Two sets only compare equal when their universes
/// agree; ordering is by numeric value of the bit vector (bit v has weight 2^v).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, const std::vector<Vertex>& members);

  static VertexSet full(int universe);
  /// Requires universe <= 64.
  static VertexSet from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const;

  /// Lowest member, or -1 when empty.
  Vertex first() const noexcept;
  /// Lowest member greater than v, or -1.
  Vertex next(Vertex v) const noexcept;
  std::vector<Vertex> members() const;

  /// Requires universe <= 64.
  std::uint64_t to_mask() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  /// Comma-separated member list, e.g. "0,2,5".
  std::string to_string() const;

 private:
  void check_same_universe(const VertexSet& other) const;
  void check_vertex(Vertex v) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Parses "0,2,5" (whitespace tolerated) into a set over `universe`.
VertexSet parse_vertex_list(int universe, const std::string& text);

}  // namespace dagconvex
