#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hg {

/// Index of an element of a finite carrier. The identity is always 0.
using Element = std::size_t;

inline constexpr Element identity_element = 0;

/// Subset of a carrier of at most 64 elements, one bit per element.
class ElementSet {
 public:
  static constexpr std::size_t max_order = 64;

  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elems) noexcept {
    for (Element e : elems) insert(e);
  }

  static constexpr ElementSet singleton(Element e) noexcept {
    return ElementSet(std::uint64_t{1} << e);
  }
  // {0, 1, ..., n-1}
  static constexpr ElementSet prefix(std::size_t n) noexcept {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Element e) const noexcept {
    return e < 64 && ((bits_ >> e) & 1U) != 0;
  }
  constexpr void insert(Element e) noexcept { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr Element min() const noexcept {
    return static_cast<Element>(std::countr_zero(bits_));
  }
  constexpr bool is_singleton() const noexcept { return std::has_single_bit(bits_); }

  constexpr bool subset_of(ElementSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet& operator|=(ElementSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) noexcept { bits_ &= ~o.bits_; return *this; }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) noexcept { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) noexcept { return a &= b; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) noexcept { return a -= b; }

  friend constexpr bool operator==(ElementSet, ElementSet) noexcept = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) noexcept = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr Element operator*() const noexcept {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator{bits_}; }
  constexpr iterator end() const noexcept { return iterator{}; }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace hg
