#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace localelab {

/// Index of an element of a finite carrier, 0..n-1.
using Elem = int;

/// Maximum carrier size representable by an ElemSet.
inline constexpr int kMaxCarrier = 64;

/// Fixed-width subset of a carrier of at most 64 elements.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet single(Elem e) { return ElemSet{std::uint64_t{1} << e}; }
  static constexpr ElemSet full(int n) {
    return ElemSet{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
  }

  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Elem e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool subset_of(ElemSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet{bits_ | o.bits_}; }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet{bits_ & o.bits_}; }
  constexpr ElemSet minus(ElemSet o) const { return ElemSet{bits_ & ~o.bits_}; }
  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElemSet&) const = default;

  /// Lowest member, or -1 when empty.
  constexpr Elem first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Elem>(std::countr_zero(b)));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical subset order: cardinality first, then bit pattern.
struct CanonicalLess {
  constexpr bool operator()(ElemSet a, ElemSet b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  }
};

}  // namespace localelab
