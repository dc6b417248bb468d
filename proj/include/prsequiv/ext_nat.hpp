#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace prsequiv {

// Natural number extended with omega (infinity). Omega is absorbing for +.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v), omega_(false) {}  // NOLINT(implicit)

  static constexpr ExtNat omega() {
    ExtNat n;
    n.omega_ = true;
    return n;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.omega_ || b.omega_) return omega();
    return ExtNat(a.value_ + b.value_);
  }
  ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return omega_ ? "w" : std::to_string(value_); }

 private:
  std::uint64_t value_ = 0;
  bool omega_ = false;
};

// Integer extended with omega; used for distance changes, which lie in {-1} + N + {omega}.
class ExtInt {
 public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : value_(v), omega_(false) {}  // NOLINT(implicit)

  static constexpr ExtInt omega() {
    ExtInt n;
    n.omega_ = true;
    return n;
  }

  constexpr bool is_omega() const { return omega_; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.omega_ || b.omega_) return a.omega_ <=> b.omega_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return omega_ ? "w" : std::to_string(value_); }

 private:
  std::int64_t value_ = 0;
  bool omega_ = false;
};

}  // namespace prsequiv
