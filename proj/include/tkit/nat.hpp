#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tkit {

// Arbitrary-precision non-negative integer.  Little-endian 64-bit limbs,
// normalized so the most significant limb is nonzero; an empty limb vector
// encodes zero.  Subtraction is truncated (monus), matching the object theory.
class Nat {
 public:
  Nat() = default;
  Nat(uint64_t value);  // implicit conversion from machine integers

  static Nat from_string(const std::string& decimal);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 1; }
  uint64_t to_u64() const;  // throws GuardError if the value does not fit
  std::string to_string() const;
  size_t bit_length() const;

  Nat& operator+=(const Nat& rhs);
  Nat& operator*=(const Nat& rhs);
  Nat& operator++();
  Nat& operator--();  // undefined on zero (asserted)

  friend Nat operator+(Nat lhs, const Nat& rhs) { return lhs += rhs; }
  friend Nat operator*(Nat lhs, const Nat& rhs) { return lhs *= rhs; }

  // max(this - rhs, 0)
  Nat monus(const Nat& rhs) const;

  // (quotient, remainder); throws on zero divisor
  static std::pair<Nat, Nat> divmod(const Nat& numerator, const Nat& divisor);

  Nat isqrt() const;  // floor square root

  friend bool operator==(const Nat& a, const Nat& b) {
    return a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);

  size_t hash() const;

 private:
  void normalize();
  std::vector<uint64_t> limbs_;
};

}  // namespace tkit
