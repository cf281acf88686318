#include "dagconvex/vertex_set.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "dagconvex/error.hpp"

namespace dagconvex {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int universe) {
  return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw Error(ErrorCode::InvalidParameter, "negative universe size");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<Vertex>& members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
  if (universe > kWordBits) throw Error(ErrorCode::OrderTooLarge, "mask form needs universe <= 64");
  VertexSet s(universe);
  if (universe < kWordBits && (mask >> universe) != 0) {
    throw Error(ErrorCode::InvalidParameter, "mask has bits outside the universe");
  }
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void VertexSet::check_vertex(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::InvalidParameter,
                "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorCode::InvalidParameter, "vertex sets over different universes");
  }
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  }
  return -1;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  Vertex start = v + 1;
  if (start < 0) start = 0;
  if (start >= universe_) return -1;
  std::size_t i = static_cast<std::size_t>(start / kWordBits);
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > kWordBits) throw Error(ErrorCode::OrderTooLarge, "mask form needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string VertexSet::to_string() const {
  std::string out;
  for (Vertex v = first(); v >= 0; v = next(v)) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

VertexSet parse_vertex_list(int universe, const std::string& text) {
  VertexSet s(universe);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::Parse, "empty entry in vertex list '" + text + "'");
    std::string_view token(item.data() + b, e - b + 1);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "bad vertex '" + std::string(token) + "'");
    }
    if (v < 0 || v >= universe) {
      throw Error(ErrorCode::InvalidParameter,
                  "vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe - 1));
    }
    s.insert(v);
  }
  return s;
}

}  // namespace dagconvex
