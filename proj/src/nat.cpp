#include "tkit/nat.hpp"

#include <cassert>
#include <cctype>

#include "tkit/error.hpp"

namespace tkit {

using u128 = unsigned __int128;

Nat::Nat(uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void Nat::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat Nat::from_string(const std::string& decimal) {
  if (decimal.empty()) throw InputError("empty numeral literal");
  Nat out;
  for (char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("bad digit in numeral literal: " + decimal);
    out *= Nat(10);
    out += Nat(static_cast<uint64_t>(c - '0'));
  }
  return out;
}

uint64_t Nat::to_u64() const {
  if (limbs_.size() > 1)
    throw GuardError("value exceeds 64 bits: " + to_string());
  return limbs_.empty() ? 0 : limbs_[0];
}

size_t Nat::bit_length() const {
  if (limbs_.empty()) return 0;
  uint64_t top = limbs_.back();
  size_t bits = (limbs_.size() - 1) * 64;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

Nat& Nat::operator+=(const Nat& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  u128 carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<uint64_t>(sum);
    carry = sum >> 64;
  }
  if (carry != 0) limbs_.push_back(static_cast<uint64_t>(carry));
  return *this;
}

Nat& Nat::operator*=(const Nat& rhs) {
  if (is_zero() || rhs.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<uint64_t> out(limbs_.size() + rhs.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    u128 carry = 0;
    for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 cur = static_cast<u128>(limbs_[i]) * rhs.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    size_t k = i + rhs.limbs_.size();
    while (carry != 0) {
      u128 cur = carry + out[k];
      out[k] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
      ++k;
    }
  }
  limbs_ = std::move(out);
  normalize();
  return *this;
}

Nat& Nat::operator++() {
  for (auto& limb : limbs_) {
    if (++limb != 0) return *this;
  }
  limbs_.push_back(1);
  return *this;
}

Nat& Nat::operator--() {
  assert(!is_zero());
  for (auto& limb : limbs_) {
    if (limb-- != 0) break;
  }
  normalize();
  return *this;
}

Nat Nat::monus(const Nat& rhs) const {
  if (*this <= rhs) return Nat();
  Nat out = *this;
  uint64_t borrow = 0;
  for (size_t i = 0; i < out.limbs_.size(); ++i) {
    u128 sub = static_cast<u128>(borrow);
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    if (static_cast<u128>(out.limbs_[i]) >= sub) {
      out.limbs_[i] -= static_cast<uint64_t>(sub);
      borrow = 0;
    } else {
      out.limbs_[i] = static_cast<uint64_t>((static_cast<u128>(1) << 64) +
                                            out.limbs_[i] - sub);
      borrow = 1;
    }
  }
  assert(borrow == 0);
  out.normalize();
  return out;
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (size_t i = a.limbs_.size(); i > 0; --i) {
    if (a.limbs_[i - 1] != b.limbs_[i - 1])
      return a.limbs_[i - 1] <=> b.limbs_[i - 1];
  }
  return std::strong_ordering::equal;
}

std::pair<Nat, Nat> Nat::divmod(const Nat& numerator, const Nat& divisor) {
  if (divisor.is_zero()) throw InputError("division by zero");
  if (numerator < divisor) return {Nat(), numerator};
  // Shift-subtract long division over bits; operands here stay small.
  Nat quotient, remainder;
  size_t bits = numerator.bit_length();
  quotient.limbs_.assign((bits + 63) / 64, 0);
  for (size_t i = bits; i > 0; --i) {
    size_t bit = i - 1;
    // remainder = remainder * 2 + bit_of(numerator, bit)
    uint64_t carry = 0;
    for (auto& limb : remainder.limbs_) {
      uint64_t next = limb >> 63;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry != 0) remainder.limbs_.push_back(carry);
    if ((numerator.limbs_[bit / 64] >> (bit % 64)) & 1) {
      if (remainder.limbs_.empty())
        remainder.limbs_.push_back(1);
      else
        remainder.limbs_[0] |= 1;
    }
    if (remainder >= divisor) {
      remainder = remainder.monus(divisor);
      quotient.limbs_[bit / 64] |= (uint64_t{1} << (bit % 64));
    }
  }
  quotient.normalize();
  remainder.normalize();
  return {std::move(quotient), std::move(remainder)};
}

Nat Nat::isqrt() const {
  if (is_zero()) return Nat();
  // Initial overestimate from the bit length, then Newton iteration.
  size_t bits = bit_length();
  Nat x;
  x.limbs_.assign((bits / 2) / 64 + 1, 0);
  x.limbs_[(bits / 2) / 64] = uint64_t{1} << ((bits / 2) % 64);
  if (x * x < *this) {
    x.limbs_.clear();
    x.limbs_.assign(bits / 64 + 1, 0);
    x.limbs_[bits / 64] = uint64_t{1} << (bits % 64);
  }
  while (true) {
    Nat next = Nat::divmod(Nat::divmod(*this, x).first + x, Nat(2)).first;
    if (next >= x) break;
    x = next;
  }
  return x;
}

std::string Nat::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  Nat cur = *this;
  const Nat chunk(10'000'000'000'000'000'000ULL);  // 10^19
  while (!cur.is_zero()) {
    auto [q, r] = divmod(cur, chunk);
    std::string part = std::to_string(r.is_zero() ? 0 : r.limbs_[0]);
    if (!q.is_zero()) part = std::string(19 - part.size(), '0') + part;
    out = part + out;
    cur = std::move(q);
  }
  return out;
}

size_t Nat::hash() const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (uint64_t limb : limbs_) {
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace tkit
