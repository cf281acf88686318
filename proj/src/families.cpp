#include "dagconvex/families.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>

#include "dagconvex/enumeration.hpp"
#include "dagconvex/error.hpp"

namespace dagconvex {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(':', start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view token, std::string_view spec) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::Parse, "bad number '" + std::string(token) + "' in family spec '" +
                                      std::string(spec) + "'");
  }
  return value;
}

void require_positive(int value, std::string_view what) {
  if (value < 1) {
    throw Error(ErrorCode::InvalidParameter, std::string(what) + " must be >= 1, got " + std::to_string(value));
  }
}

}  // namespace

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::Dt: return "dt:" + std::to_string(param);
    case Family::Gi: return "gi:" + std::to_string(param);
    case Family::Path: return "path:" + std::to_string(param);
    case Family::Random:
      return "random:" + std::to_string(param) + ":" + format_double(p) + ":" + std::to_string(seed);
  }
  return {};
}

FamilySpec parse_family_spec(std::string_view text, std::uint64_t default_seed) {
  auto parts = split_colon(text);
  FamilySpec spec;
  const std::string_view name = parts[0];
  if (name == "dt") {
    spec.family = Family::Dt;
  } else if (name == "gi") {
    spec.family = Family::Gi;
  } else if (name == "path") {
    spec.family = Family::Path;
  } else if (name == "random") {
    spec.family = Family::Random;
  } else {
    throw Error(ErrorCode::Parse, "unknown family '" + std::string(name) + "' (expected dt, gi, path, random)");
  }

  const std::size_t expected = spec.family == Family::Random ? 3 : 2;
  if (parts.size() != expected && !(spec.family == Family::Random && parts.size() == 4)) {
    throw Error(ErrorCode::Parse, "malformed family spec '" + std::string(text) + "'");
  }
  spec.param = parse_number<int>(parts[1], text);
  if (spec.family == Family::Random) {
    spec.p = parse_number<double>(parts[2], text);
    spec.seed = parts.size() == 4 ? parse_number<std::uint64_t>(parts[3], text) : default_seed;
  }
  return spec;
}

LabelMap::LabelMap(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t v = 0; v < names_.size(); ++v) index_.emplace(names_[v], static_cast<Vertex>(v));
}

Vertex LabelMap::at(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw Error(ErrorCode::InvalidParameter, "unknown vertex name '" + std::string(name) + "'");
  return it->second;
}

int ceil_sqrt(int t) {
  if (t < 0) throw Error(ErrorCode::InvalidParameter, "ceil_sqrt of a negative number");
  int r = 0;
  while (static_cast<long long>(r) * r < t) ++r;
  return r;
}

namespace {

VertexSet range_set(int universe, Vertex first, int count) {
  VertexSet s(universe);
  for (int k = 0; k < count; ++k) s.insert(first + k);
  return s;
}

}  // namespace

VertexSet DtLayout::x_set() const { return range_set(order(), x(1), t); }
VertexSet DtLayout::x_prime_set() const { return range_set(order(), x_prime(1), t); }
VertexSet DtLayout::y_set() const { return range_set(order(), y(1), r); }
VertexSet DtLayout::y_prime_set() const { return range_set(order(), y_prime(1), r); }

VertexSet DtLayout::inner_set() const {
  VertexSet s = y_set() | y_prime_set();
  s.insert(z());
  return s;
}

DtInstance gen_dt(int t) {
  require_positive(t, "t");
  if (t > 250'000) throw Error(ErrorCode::InvalidParameter, "t too large");
  DtLayout l{t, ceil_sqrt(t)};
  std::vector<Arc> arcs;
  for (int i = 1; i < t; ++i) {
    arcs.push_back({l.x(i), l.x(i + 1)});
    arcs.push_back({l.x_prime(i), l.x_prime(i + 1)});
  }
  for (int j = 1; j <= l.r; ++j) {
    arcs.push_back({l.x(t), l.y(j)});
    arcs.push_back({l.y(j), l.z()});
    arcs.push_back({l.z(), l.y_prime(j)});
    arcs.push_back({l.y_prime(j), l.x_prime(1)});
  }

  std::vector<std::string> names(static_cast<std::size_t>(l.order()));
  for (int i = 1; i <= t; ++i) {
    names[l.x(i)] = "x" + std::to_string(i);
    names[l.x_prime(i)] = "x'" + std::to_string(i);
  }
  for (int j = 1; j <= l.r; ++j) {
    names[l.y(j)] = "y" + std::to_string(j);
    names[l.y_prime(j)] = "y'" + std::to_string(j);
  }
  names[l.z()] = "z";
  return {Digraph(l.order(), std::move(arcs)), l, LabelMap(std::move(names))};
}

GiInstance gen_gi(int i) {
  require_positive(i, "i");
  if (i > 500'000) throw Error(ErrorCode::InvalidParameter, "i too large");
  GiLayout l{i};
  std::vector<Arc> arcs;
  std::vector<std::string> names(static_cast<std::size_t>(l.order()));
  names[l.s()] = "s";
  names[l.t()] = "t";
  for (int j = 1; j <= i; ++j) {
    arcs.push_back({l.s(), l.a(j)});
    arcs.push_back({l.a(j), l.b(j)});
    arcs.push_back({l.b(j), l.t()});
    names[l.a(j)] = "a" + std::to_string(j);
    names[l.b(j)] = "b" + std::to_string(j);
  }
  return {Digraph(l.order(), std::move(arcs)), l, LabelMap(std::move(names))};
}

Digraph gen_path(int n) {
  require_positive(n, "n");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, std::move(arcs));
}

namespace {

// Uniform integer in [0, bound) from raw 64-bit draws, by rejection.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

Digraph gen_random_connected_dag(int n, double p, std::uint64_t seed) {
  require_positive(n, "n");
  if (n > 1'000'000) throw Error(ErrorCode::InvalidParameter, "n too large");
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidParameter, "p must lie in (0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    auto j = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(k) + 1));
    std::swap(order[k], order[j]);
  }

  std::vector<Arc> arcs;
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (draw_unit(rng) < p) {
        arcs.push_back({order[a], order[b]});
        parent[find_root(parent, order[a])] = find_root(parent, order[b]);
      }
    }
  }

  // Positions (in topological order) of each component's members, with
  // components ranked by their earliest position.
  std::vector<int> comp_of_root(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> positions;
  for (int pos = 0; pos < n; ++pos) {
    Vertex root = find_root(parent, order[pos]);
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(positions.size());
      positions.emplace_back();
    }
    positions[comp_of_root[root]].push_back(pos);
  }
  for (std::size_t c = 0; c + 1 < positions.size(); ++c) {
    const int head = positions[c + 1].front();
    auto it = std::lower_bound(positions[c].begin(), positions[c].end(), head);
    arcs.push_back({order[*std::prev(it)], order[head]});
  }
  return Digraph(n, std::move(arcs));
}

namespace {

LabelMap numeric_labels(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
  return LabelMap(std::move(names));
}

}  // namespace

FamilyInstance generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Dt: {
      auto dt = gen_dt(spec.param);
      return {spec, std::move(dt.graph), std::move(dt.labels)};
    }
    case Family::Gi: {
      auto gi = gen_gi(spec.param);
      return {spec, std::move(gi.graph), std::move(gi.labels)};
    }
    case Family::Path: return {spec, gen_path(spec.param), numeric_labels(spec.param)};
    case Family::Random:
      return {spec, gen_random_connected_dag(spec.param, spec.p, spec.seed), numeric_labels(spec.param)};
  }
  throw Error(ErrorCode::InvalidParameter, "unknown family");
}

GiCounts closed_form_gi_counts(int i) {
  require_positive(i, "i");
  if (i > 31) throw Error(ErrorCode::Overflow, "4^" + std::to_string(i) + " exceeds 64 bits");
  std::uint64_t four = 1;
  std::uint64_t three = 1;
  for (int k = 0; k < i; ++k) {
    four *= 4;
    three *= 3;
  }
  return {four - 1, 2 * three + 3 * static_cast<std::uint64_t>(i) + 1};
}

PathCounts closed_form_path_counts(int n) {
  require_positive(n, "n");
  PathCounts out;
  auto un = static_cast<std::uint64_t>(n);
  out.connected_convex = un * (un + 1) / 2;
  for (int k = 1; k <= n; ++k) out.histogram.push_back(un - static_cast<std::uint64_t>(k) + 1);
  return out;
}

DtCategoryCounts classify_dt_large_convex_sets(const DtInstance& dt, int max_order) {
  const DtLayout& l = dt.layout;
  const VertexSet xs = l.x_set();
  const VertexSet xps = l.x_prime_set();
  const VertexSet x_and_y = xs | l.y_set();
  const int threshold = 2 * l.r + 2;
  const VertexSet none = dt.graph.empty_set();

  DtCategoryCounts c;
  enumerate_brute(
      dt.graph, SetClass::Convex,
      [&](const VertexSet& s) {
        if (s.size() < threshold) return;
        ++c.large_total;
        const bool has_x = (s & xs) != none;
        const bool has_xp = (s & xps) != none;
        if (has_x && has_xp) {
          ++c.both;
        } else if (has_xp) {
          ++c.x_prime_only;
        } else if (has_x) {
          ++c.x_only;
          if (s.is_subset_of(xs)) {
            ++c.x_only_within_x;
          } else if (s.is_subset_of(x_and_y)) {
            ++c.x_only_within_x_y;
          } else if (s.contains(l.z())) {
            ++c.x_only_with_z;
          } else {
            ++c.x_only_other;
          }
        } else {
          ++c.missing_x_and_x_prime;
        }
      },
      max_order);
  return c;
}

}  // namespace dagconvex
