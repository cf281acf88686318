#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dagconvex/digraph.hpp"
#include "dagconvex/fraction.hpp"

namespace dagconvex {

enum class SetClass { Convex, ConnectedConvex };

/// "convex" / "connected-convex".
std::string_view to_string(SetClass c) noexcept;
/// Accepts "co", "convex", "cc", "connected-convex".
SetClass parse_set_class(std::string_view text);

/// Default order caps; callers may pass a higher cap explicitly.
inline constexpr int kBruteForceMaxOrder = 25;
inline constexpr int kExtensionMaxOrder = 40;

/// Tallies for one set class over one digraph.
struct EnumerationReport {
  SetClass set_class = SetClass::Convex;
  int order = 0;
  std::uint64_t count = 0;
  /// histogram[k - 1] = number of sets of size k, for k = 1..order.
  std::vector<std::uint64_t> histogram;
  std::uint64_t size_sum = 0;

  /// Throws Error{EmptyReport} when count == 0.
  Fraction average() const;

  friend bool operator==(const EnumerationReport&, const EnumerationReport&) = default;
};

using SetVisitor = std::function<void(const VertexSet&)>;

/// Scans all 2^n - 1 non-empty subsets in ascending bit-vector order and
/// reports (and visits) those in the requested class. Throws
/// Error{OrderTooLarge} when order > max_order or order > 63.
EnumerationReport enumerate_brute(const Digraph& d, SetClass set_class, const SetVisitor& visit = {},
                                  int max_order = kBruteForceMaxOrder);

/// Level-by-level enumeration of connected convex sets: level 1 holds the
/// singletons and level k+1 every H ∪ {w} with H in level k, w adjacent to H,
/// and H ∪ {w} convex. Sets are visited by increasing size, ascending
/// bit-vector value within a size. `max_size` stops after that level.
///
/// Requires a connected digraph (Error{DisconnectedInput}); throws
/// Error{OrderTooLarge} when order > max_order or order > 64.
EnumerationReport enumerate_cc_extension(const Digraph& d, std::optional<int> max_size = std::nullopt,
                                         const SetVisitor& visit = {},
                                         int max_order = kExtensionMaxOrder);

/// Number of connected convex sets of D (convex in D, not just in D[U]) that
/// are subsets of U. Throws Error{EmptySet} for an empty U.
std::uint64_t count_cc_within(const Digraph& d, const VertexSet& u);

struct Statistics {
  std::uint64_t count = 0;
  std::uint64_t size_sum = 0;
  Fraction average;
  /// Six fractional digits, round-half-even.
  std::string average_decimal;
};

/// Throws Error{EmptyReport} for a report with no sets.
Statistics statistics(const EnumerationReport& report);

struct SizeBoundRow {
  int size = 0;
  std::uint64_t count = 0;
  std::uint64_t bound = 0;
  bool pass = false;
};

struct SizeBoundTable {
  int order = 0;
  std::vector<SizeBoundRow> rows;
  bool pass = false;
};

/// Compares histogram[k] against n - k + 1 for every k in 1..n.
SizeBoundTable size_bound_table(const EnumerationReport& connected_convex);

/// Enumerates the connected convex sets of D and checks that every size k
/// occurs at least n - k + 1 times. Requires a connected digraph.
SizeBoundTable verify_size_lower_bound(const Digraph& d, int max_order = kExtensionMaxOrder);

}  // namespace dagconvex
