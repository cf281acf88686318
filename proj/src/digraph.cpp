#include "dagconvex/digraph.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <queue>
#include <string>

#include "dagconvex/error.hpp"

namespace dagconvex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::InvalidArc: return "InvalidArc";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::FullSet: return "FullSet";
    case ErrorCode::NotConnectedConvex: return "NotConnectedConvex";
    case ErrorCode::EmptyReport: return "EmptyReport";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

struct Digraph::Cache {
  std::once_flag once;
  ReachabilityMasks masks;
};

namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

// CSR layout: offsets has order+1 entries, targets sorted per row.
void build_csr(int order, const std::vector<Arc>& arcs, bool forward,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(static_cast<std::size_t>(order) + 1, 0);
  for (const Arc& a : arcs) ++offsets[static_cast<std::size_t>(forward ? a.from : a.to) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  targets.assign(arcs.size(), 0);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Arc& a : arcs) {
    auto key = static_cast<std::size_t>(forward ? a.from : a.to);
    targets[fill[key]++] = forward ? a.to : a.from;
  }
  for (int v = 0; v < order; ++v) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

}  // namespace

Digraph::Digraph(int order, std::vector<Arc> arcs)
    : order_(order), arcs_(std::move(arcs)), cache_(std::make_shared<Cache>()) {
  if (order < 0) throw Error(ErrorCode::InvalidParameter, "negative vertex count");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= order || a.to < 0 || a.to >= order) {
      throw Error(ErrorCode::InvalidArc, "arc " + arc_text(a) + " has an endpoint outside 0.." +
                                             std::to_string(order - 1));
    }
    if (a.from == a.to) throw Error(ErrorCode::InvalidArc, "self-loop " + arc_text(a));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
    throw Error(ErrorCode::InvalidArc, "duplicate arc " + arc_text(*dup));
  }

  build_csr(order, arcs_, true, out_offsets_, out_targets_);
  build_csr(order, arcs_, false, in_offsets_, in_sources_);

  std::vector<int> indegree(static_cast<std::size_t>(order));
  for (Vertex v = 0; v < order; ++v) indegree[v] = in_degree(v);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < order; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  topo_.reserve(static_cast<std::size_t>(order));
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (Vertex w : out(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(topo_.size()) != order) {
    throw Error(ErrorCode::CycleDetected, "arcs contain a directed cycle");
  }
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw Error(ErrorCode::InvalidParameter, "vertex " + std::to_string(v) + " not in digraph");
  }
}

std::span<const Vertex> Digraph::out(Vertex v) const {
  check_vertex(v);
  return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in(Vertex v) const {
  check_vertex(v);
  return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  auto row = out(from);
  return std::binary_search(row.begin(), row.end(), to);
}

const ReachabilityMasks& Digraph::masks() const {
  if (order_ > kMaskOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "bit-row reachability needs order <= 64, got " + std::to_string(order_));
  }
  std::call_once(cache_->once, [this] {
    auto n = static_cast<std::size_t>(order_);
    ReachabilityMasks& m = cache_->masks;
    m.descendants.assign(n, 0);
    m.ancestors.assign(n, 0);
    m.neighbours.assign(n, 0);
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
      Vertex v = *it;
      std::uint64_t row = std::uint64_t{1} << v;
      for (Vertex w : out(v)) row |= m.descendants[w];
      m.descendants[v] = row;
    }
    for (Vertex v : topo_) {
      std::uint64_t row = std::uint64_t{1} << v;
      for (Vertex u : in(v)) row |= m.ancestors[u];
      m.ancestors[v] = row;
    }
    for (const Arc& a : arcs_) {
      m.neighbours[a.from] |= std::uint64_t{1} << a.to;
      m.neighbours[a.to] |= std::uint64_t{1} << a.from;
    }
  });
  return cache_->masks;
}

Digraph build_digraph(int order, std::vector<Arc> arcs) { return Digraph(order, std::move(arcs)); }

namespace {

void require_universe(const Digraph& d, const VertexSet& s) {
  if (s.universe() != d.order()) {
    throw Error(ErrorCode::InvalidParameter, "vertex set universe " + std::to_string(s.universe()) +
                                                 " does not match digraph order " +
                                                 std::to_string(d.order()));
  }
}

template <bool Forward>
VertexSet closure_of(const Digraph& d, const VertexSet& seeds) {
  require_universe(d, seeds);
  if (d.order() <= Digraph::kMaskOrder) {
    const auto& rows = Forward ? d.masks().descendants : d.masks().ancestors;
    std::uint64_t acc = 0;
    for (std::uint64_t m = seeds.to_mask(); m != 0; m &= m - 1) acc |= rows[std::countr_zero(m)];
    return VertexSet::from_mask(d.order(), acc);
  }
  VertexSet seen = seeds;
  std::vector<Vertex> stack = seeds.members();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : Forward ? d.out(v) : d.in(v)) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

VertexSet reachable_from(const Digraph& d, const VertexSet& from) { return closure_of<true>(d, from); }

VertexSet reaching_to(const Digraph& d, const VertexSet& to) { return closure_of<false>(d, to); }

bool is_underlying_connected(const Digraph& d, const VertexSet& s) {
  require_universe(d, s);
  if (s.empty()) throw Error(ErrorCode::EmptySet, "connectivity of an empty set");
  VertexSet seen(d.order());
  std::queue<Vertex> frontier;
  seen.insert(s.first());
  frontier.push(s.first());
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    auto visit = [&](Vertex w) {
      if (s.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        frontier.push(w);
        ++reached;
      }
    };
    for (Vertex w : d.out(v)) visit(w);
    for (Vertex w : d.in(v)) visit(w);
  }
  return reached == s.size();
}

bool is_connected(const Digraph& d) {
  return d.order() > 0 && is_underlying_connected(d, d.all_vertices());
}

SourcesAndSinks sources_and_sinks(const Digraph& d) {
  SourcesAndSinks out{d.empty_set(), d.empty_set()};
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.in_degree(v) == 0) out.sources.insert(v);
    if (d.out_degree(v) == 0) out.sinks.insert(v);
  }
  return out;
}

namespace {

void require_connected_order2(const Digraph& d) {
  if (d.order() < 2) throw Error(ErrorCode::OrderTooSmall, "cut-vertices need order >= 2");
  if (!is_connected(d)) throw Error(ErrorCode::DisconnectedInput, "digraph is not connected");
}

}  // namespace

bool is_cut_vertex(const Digraph& d, Vertex v) {
  require_connected_order2(d);
  VertexSet rest = d.all_vertices();
  rest.erase(v);
  return !is_underlying_connected(d, rest);
}

VertexSet cut_vertices(const Digraph& d) {
  require_connected_order2(d);
  const int n = d.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  VertexSet cuts(n);

  // Iterative DFS over the symmetrized adjacency; `cursor` walks out-arcs
  // first and then in-arcs of each vertex.
  struct Frame {
    Vertex v;
    std::size_t cursor;
  };
  std::vector<Frame> stack;
  int clock = 0;
  int root_children = 0;
  const Vertex root = 0;
  disc[root] = low[root] = clock++;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto outs = d.out(f.v);
    auto ins = d.in(f.v);
    if (f.cursor < outs.size() + ins.size()) {
      Vertex w = f.cursor < outs.size() ? outs[f.cursor] : ins[f.cursor - outs.size()];
      ++f.cursor;
      if (disc[w] < 0) {
        parent[w] = f.v;
        disc[w] = low[w] = clock++;
        if (f.v == root) ++root_children;
        stack.push_back({w, 0});
      } else if (w != parent[f.v]) {
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Vertex v = f.v;
    stack.pop_back();
    if (Vertex p = parent[v]; p >= 0) {
      low[p] = std::min(low[p], low[v]);
      if (p != root && low[v] >= disc[p]) cuts.insert(p);
    }
  }
  if (root_children > 1) cuts.insert(root);
  return cuts;
}

}  // namespace dagconvex
