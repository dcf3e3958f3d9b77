#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace braceforge {

// Elements of a finite structure are dense indices 0..order-1.
using Elem = std::int32_t;

// Subset of the carrier {0, ..., universe-1}, stored as a bitmap.
class ElemSet {
 public:
  ElemSet() = default;

  explicit ElemSet(int universe)
      : n_(universe), bits_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (Elem e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  static ElemSet of(int universe, std::initializer_list<Elem> elems) {
    ElemSet s(universe);
    for (Elem e : elems) s.insert(e);
    return s;
  }

  static ElemSet from_elems(int universe, const std::vector<Elem>& elems) {
    ElemSet s(universe);
    for (Elem e : elems) s.insert(e);
    return s;
  }

  int universe() const { return n_; }

  bool contains(Elem e) const {
    return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  // Returns true when e was not yet present.
  bool insert(Elem e) {
    std::uint64_t& word = bits_[static_cast<std::size_t>(e) >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (e & 63);
    const bool fresh = (word & mask) == 0;
    word |= mask;
    return fresh;
  }

  int size() const {
    int count = 0;
    for (std::uint64_t word : bits_) count += std::popcount(word);
    return count;
  }

  bool empty() const {
    for (std::uint64_t word : bits_)
      if (word != 0) return false;
    return true;
  }

  std::vector<Elem> elems() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Elem e = 0; e < n_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  bool is_subset_of(const ElemSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  ElemSet intersect(const ElemSet& other) const {
    ElemSet out(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      out.bits_[i] = bits_[i] & other.bits_[i];
    return out;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace braceforge
