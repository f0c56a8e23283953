#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace oddsum {

using Vertex = std::uint32_t;

/// Dense bit-vector over the vertex range 0..size()-1.
///
/// Used both for vertex subsets of a graph and for the rows of the
/// closed-neighborhood matrix over GF(2), where XOR is row addition.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}
  VertexSet(std::size_t size, std::initializer_list<Vertex> members) : VertexSet(size) {
    for (auto v : members)
      set(v);
  }

  static auto full(std::size_t size) -> VertexSet {
    VertexSet s(size);
    for (auto & w : s.words_)
      w = ~Word{0};
    s.trim();
    return s;
  }

  static auto from_vector(std::size_t size, const std::vector<Vertex> & members) -> VertexSet;

  auto size() const -> std::size_t { return size_; }
  auto word_count() const -> std::size_t { return words_.size(); }
  auto words() const -> const std::vector<Word> & { return words_; }

  auto test(Vertex v) const -> bool { return (words_[v / word_bits] >> (v % word_bits)) & 1U; }
  auto set(Vertex v) -> void { words_[v / word_bits] |= Word{1} << (v % word_bits); }
  auto reset(Vertex v) -> void { words_[v / word_bits] &= ~(Word{1} << (v % word_bits)); }
  auto flip(Vertex v) -> void { words_[v / word_bits] ^= Word{1} << (v % word_bits); }
  auto assign(Vertex v, bool value) -> void { value ? set(v) : reset(v); }

  auto count() const -> std::size_t {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  auto empty() const -> bool {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  /// Parity of |*this ∩ other|.
  auto intersection_parity(const VertexSet & other) const -> bool {
    Word acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  auto intersection_count(const VertexSet & other) const -> std::size_t {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  auto is_subset_of(const VertexSet & other) const -> bool {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  /// XOR from word `first_word` onwards; elimination only needs the tail.
  auto xor_tail(const VertexSet & other, std::size_t first_word) -> void {
    for (std::size_t i = first_word; i < words_.size(); ++i)
      words_[i] ^= other.words_[i];
  }

  auto operator^=(const VertexSet & other) -> VertexSet & {
    xor_tail(other, 0);
    return *this;
  }
  auto operator&=(const VertexSet & other) -> VertexSet & {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }
  auto operator|=(const VertexSet & other) -> VertexSet & {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  auto complement() const -> VertexSet {
    VertexSet s = *this;
    for (auto & w : s.words_)
      w = ~w;
    s.trim();
    return s;
  }

  /// Lowest member at or after `from`, or size() if none.
  auto next(Vertex from) const -> Vertex {
    if (from >= size_)
      return static_cast<Vertex>(size_);
    std::size_t wi = from / word_bits;
    Word w = words_[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w)
        return static_cast<Vertex>(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size())
        return static_cast<Vertex>(size_);
      w = words_[wi];
    }
  }
  auto first() const -> Vertex { return next(0); }

  template <typename F>
  auto for_each(F && f) const -> void {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      for (Word w = words_[wi]; w; w &= w - 1)
        f(static_cast<Vertex>(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
  }

  auto to_vector() const -> std::vector<Vertex> {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// "{0,2,5}"
  auto to_string() const -> std::string;

  friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

  /// Numeric order of the bit pattern, vertex 0 least significant.
  friend auto operator<(const VertexSet & a, const VertexSet & b) -> bool {
    if (a.size_ != b.size_)
      return a.size_ < b.size_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i])
        return a.words_[i] < b.words_[i];
    return false;
  }

  friend auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }
  friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
  friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }

private:
  auto trim() -> void {
    if (auto r = size_ % word_bits; r && !words_.empty())
      words_.back() &= (Word{1} << r) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

} // namespace oddsum
