#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcr {

// Cost extended with +inf (no target visited) and -inf (arbitrarily low
// cost enforceable). Total order -inf < finite < +inf; addition is total
// except (+inf) + (-inf), which is a logic error.
class ExtCost {
public:
  constexpr ExtCost() = default;
  constexpr ExtCost(std::int64_t v) : kind_(Kind::finite), value_(v) {}

  static constexpr ExtCost infinity() { return ExtCost(Kind::pos_inf); }
  static constexpr ExtCost minus_infinity() { return ExtCost(Kind::neg_inf); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  std::int64_t finite() const {
    if (!is_finite()) throw std::logic_error("ExtCost: not finite: " + str());
    return value_;
  }

  ExtCost operator+(ExtCost o) const {
    if (is_finite() && o.is_finite()) return ExtCost(value_ + o.value_);
    if (is_pos_inf() && o.is_neg_inf())
      throw std::logic_error("ExtCost: (+inf) + (-inf) is undefined");
    if (is_neg_inf() && o.is_pos_inf())
      throw std::logic_error("ExtCost: (-inf) + (+inf) is undefined");
    if (is_pos_inf() || o.is_pos_inf()) return infinity();
    return minus_infinity();
  }
  ExtCost& operator+=(ExtCost o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtCost a, ExtCost b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtCost a, ExtCost b) { return !(a == b); }
  friend constexpr bool operator<(ExtCost a, ExtCost b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
    return a.kind_ == Kind::finite && a.value_ < b.value_;
  }
  friend constexpr bool operator>(ExtCost a, ExtCost b) { return b < a; }
  friend constexpr bool operator<=(ExtCost a, ExtCost b) { return !(b < a); }
  friend constexpr bool operator>=(ExtCost a, ExtCost b) { return !(a < b); }

  std::string str() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value_);
  }

private:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };
  constexpr explicit ExtCost(Kind k) : kind_(k) {}
  static constexpr int rank(Kind k) { return static_cast<int>(k); }

  Kind kind_ = Kind::finite;
  std::int64_t value_ = 0;
};

}  // namespace mcr
