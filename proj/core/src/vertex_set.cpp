#include "zb/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "zb/error.hpp"

namespace zb {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw LimitError("VertexSet::from_mask needs a universe of at most 64");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe, const std::vector<VertexId>& members) {
  VertexSet s(universe);
  for (VertexId v : members) {
    if (v >= universe) throw InputError("vertex id out of range");
    s.insert(v);
  }
  return s;
}

void VertexSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (universe_ > 64) throw LimitError("VertexSet::to_mask needs a universe of at most 64");
  return words_.empty() ? 0 : words_[0];
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace zb
