#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zb {

using VertexId = std::uint32_t;

/// Fixed-universe bitset over vertex ids [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  // Requires universe <= 64; bits at or above universe are ignored.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet from_members(std::size_t universe, const std::vector<VertexId>& members);

  std::size_t universe() const { return universe_; }
  bool contains(VertexId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }
  bool is_subset_of(const VertexSet& other) const;

  VertexSet complement() const;
  std::vector<VertexId> members() const;
  std::uint64_t to_mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by the ascending member list, which is the search order used by the solver.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zb
