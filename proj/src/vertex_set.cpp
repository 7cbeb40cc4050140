#include "cosec/vertex_set.hpp"

#include <bit>
#include <ostream>
#include <sstream>

#include "cosec/errors.hpp"

namespace cosec {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_)
    throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(universe_) + ")");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw InputError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_) + ")");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  check_universe(other);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return static_cast<Vertex>(universe_);
  std::size_t i = pos >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (pos & 63));
  while (true) {
    if (w) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    if (++i >= words_.size()) return static_cast<Vertex>(universe_);
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace cosec
