#include "dagconvex/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "dagconvex/error.hpp"

namespace dagconvex {

std::string_view to_string(SetClass c) noexcept {
  return c == SetClass::Convex ? "convex" : "connected-convex";
}

SetClass parse_set_class(std::string_view text) {
  if (text == "co" || text == "convex") return SetClass::Convex;
  if (text == "cc" || text == "connected-convex") return SetClass::ConnectedConvex;
  throw Error(ErrorCode::InvalidParameter, "unknown set class '" + std::string(text) + "'");
}

Fraction EnumerationReport::average() const {
  if (count == 0) throw Error(ErrorCode::EmptyReport, "average of an empty report");
  return Fraction(size_sum, count);
}

namespace {

void require_order_within(const Digraph& d, int cap, int hard_cap, std::string_view what) {
  int limit = std::min(cap, hard_cap);
  if (d.order() > limit) {
    throw Error(ErrorCode::OrderTooLarge, std::string(what) + " supports order <= " +
                                              std::to_string(limit) + ", got " +
                                              std::to_string(d.order()));
  }
}

EnumerationReport empty_report(SetClass c, int order) {
  EnumerationReport r;
  r.set_class = c;
  r.order = order;
  r.histogram.assign(static_cast<std::size_t>(order), 0);
  return r;
}

void tally(EnumerationReport& r, int size) {
  ++r.count;
  ++r.histogram[static_cast<std::size_t>(size - 1)];
  r.size_sum += static_cast<std::uint64_t>(size);
}

// Union of the reachability rows of every member, tabulated per chunk of at
// most 16 bits so the brute-force scan pays one lookup per chunk.
class ChunkedClosure {
 public:
  ChunkedClosure(const std::vector<std::uint64_t>& rows, int order) {
    int chunks = std::max(1, (order + 15) / 16);
    chunk_bits_ = (order + chunks - 1) / chunks;
    for (int offset = 0; offset < order; offset += chunk_bits_) {
      tables_.push_back(table(rows, offset, std::min(chunk_bits_, order - offset)));
    }
  }

  std::uint64_t operator()(std::uint64_t mask) const {
    const std::uint64_t chunk_mask = (std::uint64_t{1} << chunk_bits_) - 1;
    std::uint64_t acc = 0;
    for (const auto& t : tables_) {
      acc |= t[mask & chunk_mask];
      mask >>= chunk_bits_;
    }
    return acc;
  }

 private:
  static std::vector<std::uint64_t> table(const std::vector<std::uint64_t>& rows, int offset, int bits) {
    std::vector<std::uint64_t> t(std::size_t{1} << bits, 0);
    for (std::size_t m = 1; m < t.size(); ++m) {
      t[m] = t[m & (m - 1)] | rows[static_cast<std::size_t>(offset + std::countr_zero(m))];
    }
    return t;
  }

  int chunk_bits_ = 1;
  std::vector<std::vector<std::uint64_t>> tables_;
};

bool mask_connected(std::uint64_t mask, const std::vector<std::uint64_t>& neighbours) {
  std::uint64_t comp = mask & (~mask + 1);
  std::uint64_t frontier = comp;
  while (frontier != 0) {
    std::uint64_t grown = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) grown |= neighbours[std::countr_zero(f)];
    frontier = grown & mask & ~comp;
    comp |= frontier;
  }
  return comp == mask;
}

struct LevelEntry {
  std::uint64_t set;
  std::uint64_t descendants;
  std::uint64_t ancestors;
};

// Breadth-first growth of connected convex sets inside `allowed`.
//
// Completeness: let S ⊆ allowed be connected and convex with |S| = k+1 ≥ 2.
// D[S] is a connected acyclic digraph of order >= 2, so it has a source or
// sink v of D[S] that is not a cut-vertex of D[S] (at least two exist). Then
// S - v is connected, and it is convex in D: a directed path between two
// vertices of S - v through v would enter and leave v inside S (S is convex),
// contradicting that v is a source or sink of D[S]; any other outside vertex
// on such a path would already violate the convexity of S. So S - v lies in
// level k and S is produced from it by adding the neighbour v. Induction on
// k from the singletons gives every connected convex subset of `allowed`.
template <typename Emit>
void grow_levels(const Digraph& d, std::uint64_t allowed, int max_size, Emit&& emit) {
  const ReachabilityMasks& m = d.masks();
  std::vector<LevelEntry> level;
  for (std::uint64_t a = allowed; a != 0; a &= a - 1) {
    int v = std::countr_zero(a);
    level.push_back({std::uint64_t{1} << v, m.descendants[v], m.ancestors[v]});
  }
  for (int size = 1; !level.empty(); ++size) {
    for (const LevelEntry& e : level) emit(e.set, size);
    if (size == max_size) break;

    std::vector<LevelEntry> next;
    std::unordered_set<std::uint64_t> tried;
    for (const LevelEntry& e : level) {
      std::uint64_t boundary = 0;
      for (std::uint64_t h = e.set; h != 0; h &= h - 1) boundary |= m.neighbours[std::countr_zero(h)];
      boundary &= allowed & ~e.set;
      for (; boundary != 0; boundary &= boundary - 1) {
        int w = std::countr_zero(boundary);
        std::uint64_t candidate = e.set | (std::uint64_t{1} << w);
        if (!tried.insert(candidate).second) continue;
        std::uint64_t down = e.descendants | m.descendants[w];
        std::uint64_t up = e.ancestors | m.ancestors[w];
        if ((down & up & ~candidate) == 0) next.push_back({candidate, down, up});
      }
    }
    std::sort(next.begin(), next.end(), [](const LevelEntry& a, const LevelEntry& b) { return a.set < b.set; });
    level = std::move(next);
  }
}

}  // namespace

EnumerationReport enumerate_brute(const Digraph& d, SetClass set_class, const SetVisitor& visit,
                                  int max_order) {
  require_order_within(d, max_order, 63, "brute-force enumeration");
  const int n = d.order();
  EnumerationReport report = empty_report(set_class, n);
  if (n == 0) return report;

  const ReachabilityMasks& m = d.masks();
  const ChunkedClosure down(m.descendants, n);
  const ChunkedClosure up(m.ancestors, n);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t set = 1; set < end; ++set) {
    if ((down(set) & up(set) & ~set) != 0) continue;
    if (set_class == SetClass::ConnectedConvex && !mask_connected(set, m.neighbours)) continue;
    tally(report, std::popcount(set));
    if (visit) visit(VertexSet::from_mask(n, set));
  }
  return report;
}

EnumerationReport enumerate_cc_extension(const Digraph& d, std::optional<int> max_size,
                                         const SetVisitor& visit, int max_order) {
  require_order_within(d, max_order, Digraph::kMaskOrder, "extension enumeration");
  if (!is_connected(d)) throw Error(ErrorCode::DisconnectedInput, "digraph is not connected");
  if (max_size && *max_size < 1) throw Error(ErrorCode::InvalidParameter, "max_size must be >= 1");

  const int n = d.order();
  EnumerationReport report = empty_report(SetClass::ConnectedConvex, n);
  grow_levels(d, d.all_vertices().to_mask(), max_size.value_or(n), [&](std::uint64_t set, int size) {
    tally(report, size);
    if (visit) visit(VertexSet::from_mask(n, set));
  });
  return report;
}

std::uint64_t count_cc_within(const Digraph& d, const VertexSet& u) {
  if (u.universe() != d.order()) throw Error(ErrorCode::InvalidParameter, "set universe mismatch");
  if (u.empty()) throw Error(ErrorCode::EmptySet, "counting inside an empty set");
  require_order_within(d, Digraph::kMaskOrder, Digraph::kMaskOrder, "count_cc_within");
  std::uint64_t count = 0;
  grow_levels(d, u.to_mask(), d.order(), [&](std::uint64_t, int) { ++count; });
  return count;
}

Statistics statistics(const EnumerationReport& report) {
  Statistics s;
  s.count = report.count;
  s.size_sum = report.size_sum;
  s.average = report.average();
  s.average_decimal = s.average.to_decimal(6);
  return s;
}

SizeBoundTable size_bound_table(const EnumerationReport& connected_convex) {
  SizeBoundTable table;
  table.order = connected_convex.order;
  table.pass = true;
  const int n = connected_convex.order;
  for (int k = 1; k <= n; ++k) {
    SizeBoundRow row;
    row.size = k;
    row.count = connected_convex.histogram[static_cast<std::size_t>(k - 1)];
    row.bound = static_cast<std::uint64_t>(n - k + 1);
    row.pass = row.count >= row.bound;
    table.pass = table.pass && row.pass;
    table.rows.push_back(row);
  }
  return table;
}

SizeBoundTable verify_size_lower_bound(const Digraph& d, int max_order) {
  return size_bound_table(enumerate_cc_extension(d, std::nullopt, {}, max_order));
}

}  // namespace dagconvex
