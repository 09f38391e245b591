#ifndef MTSPACE_CARD_HPP
#define MTSPACE_CARD_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace mts {

/// A cell cardinality: a natural number or infinity.
/// Infinity is absorbing under addition and larger than every natural.
class Card {
public:
  constexpr Card() : value_(0) {}

  static constexpr Card fin(std::uint64_t n) { return Card(static_cast<std::int64_t>(n)); }
  static constexpr Card inf() { return Card(kInf); }

  constexpr bool is_inf() const { return value_ == kInf; }
  constexpr bool is_fin() const { return value_ != kInf; }

  /// Finite value; only meaningful when is_fin().
  constexpr std::uint64_t value() const { return static_cast<std::uint64_t>(value_); }

  friend constexpr Card operator+(Card a, Card b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return fin(a.value() + b.value());
  }
  Card& operator+=(Card other) { return *this = *this + other; }

  friend constexpr bool operator==(Card a, Card b) = default;

  /// Finite values by magnitude, infinity above all of them.
  friend constexpr bool operator<(Card a, Card b) {
    if (a.is_inf()) return false;
    if (b.is_inf()) return true;
    return a.value() < b.value();
  }
  friend constexpr bool operator<=(Card a, Card b) { return a == b || a < b; }
  friend constexpr bool operator>(Card a, Card b) { return b < a; }
  friend constexpr bool operator>=(Card a, Card b) { return b <= a; }

  std::string to_string() const { return is_inf() ? "inf" : std::to_string(value()); }

private:
  static constexpr std::int64_t kInf = -1;
  explicit constexpr Card(std::int64_t raw) : value_(raw) {}
  std::int64_t value_;
};

/// An exact count of theories: a natural number or countably infinite.
class CardCount {
public:
  constexpr CardCount() : count_(0) {}

  static constexpr CardCount fin(std::uint64_t n) { return CardCount(static_cast<std::int64_t>(n)); }
  static constexpr CardCount aleph0() { return CardCount(kInf); }

  constexpr bool is_infinite() const { return count_ == kInf; }
  constexpr bool is_finite() const { return count_ != kInf; }
  constexpr std::uint64_t value() const { return static_cast<std::uint64_t>(count_); }

  friend constexpr CardCount operator+(CardCount a, CardCount b) {
    if (a.is_infinite() || b.is_infinite()) return aleph0();
    return fin(a.value() + b.value());
  }
  CardCount& operator+=(CardCount other) { return *this = *this + other; }

  friend constexpr CardCount operator*(CardCount a, CardCount b) {
    // 0 * aleph0 = 0: an empty coordinate kills the product.
    if (a.is_finite() && a.value() == 0) return fin(0);
    if (b.is_finite() && b.value() == 0) return fin(0);
    if (a.is_infinite() || b.is_infinite()) return aleph0();
    return fin(a.value() * b.value());
  }

  friend constexpr bool operator==(CardCount a, CardCount b) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value()); }

private:
  static constexpr std::int64_t kInf = -1;
  explicit constexpr CardCount(std::int64_t raw) : count_(raw) {}
  std::int64_t count_;
};

} // namespace mts

#endif
