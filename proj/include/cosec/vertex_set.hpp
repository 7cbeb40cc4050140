#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace cosec {

using Vertex = std::uint32_t;

/// Subset of {0, ..., universe-1} stored as a packed bitset.
/// Iteration is always in ascending vertex order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet from_vector(std::size_t universe, const std::vector<Vertex>& members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  /// |*this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const;

  /// Lowest member, or universe() when empty.
  Vertex first() const;
  /// Lowest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;  // "{0,2,3}"

  bool operator==(const VertexSet& other) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const VertexSet* set, Vertex pos) : set_(set), pos_(pos) {}
    Vertex operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex pos_ = 0;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, static_cast<Vertex>(universe_)}; }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace cosec
