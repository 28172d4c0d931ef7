// Copyright 2026 The edpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "edpm/contracts.hpp"

namespace edpm {

/// Fixed-width unsigned integer, the word type of every datapath register.
///
/// Values are stored as little-endian 64-bit limbs; 64 is the one limb width
/// used throughout the library. The representation is not observable through
/// the API: arithmetic is defined purely on the Bits-wide integer value, and
/// the canonical text form is Bits/4 lowercase hex digits, big-endian.
///
/// Instantiated as Wide<256> / Wide<512> for the full-size datapath and at
/// reduced widths (8, 16, 32) for the scaled-down cycle-model fields.
template <unsigned Bits>
struct Wide {
  static_assert(Bits >= 8 && Bits % 8 == 0, "width must be a whole number of bytes");

  static constexpr unsigned kBits = Bits;
  static constexpr unsigned kLimbs = (Bits + 63) / 64;
  static constexpr unsigned kHexDigits = Bits / 4;

  std::array<uint64_t, kLimbs> limb{};  // limb[0] is least significant

  constexpr Wide() = default;

  static constexpr Wide zero() { return Wide{}; }

  static constexpr Wide from_u64(uint64_t v) {
    Wide r;
    r.limb[0] = v;
    r.mask_top();
    return r;
  }

  static constexpr uint64_t top_mask() {
    if constexpr (Bits % 64 == 0) {
      return ~uint64_t{0};
    } else {
      return (uint64_t{1} << (Bits % 64)) - 1;
    }
  }

  constexpr void mask_top() { limb[kLimbs - 1] &= top_mask(); }

  constexpr bool is_zero() const {
    for (uint64_t l : limb) {
      if (l != 0) return false;
    }
    return true;
  }

  constexpr bool bit(unsigned i) const {
    EDPM_CONTRACT(i < Bits, "Wide::bit index out of range");
    return (limb[i / 64] >> (i % 64)) & 1;
  }

  constexpr void set_bit(unsigned i) {
    EDPM_CONTRACT(i < Bits, "Wide::set_bit index out of range");
    limb[i / 64] |= uint64_t{1} << (i % 64);
  }

  /// Index of the most significant set bit, or -1 for zero.
  constexpr int top_bit() const {
    for (int l = int(kLimbs) - 1; l >= 0; --l) {
      if (limb[l] != 0) {
        return l * 64 + 63 - std::countl_zero(limb[l]);
      }
    }
    return -1;
  }

  /// 32-bit word i of the value (word 0 least significant).
  constexpr uint32_t word32(unsigned i) const {
    EDPM_CONTRACT(i < Bits / 32, "Wide::word32 index out of range");
    return uint32_t(limb[i / 2] >> (32 * (i % 2)));
  }

  constexpr void set_word32(unsigned i, uint32_t w) {
    EDPM_CONTRACT(i < Bits / 32, "Wide::set_word32 index out of range");
    const unsigned shift = 32 * (i % 2);
    limb[i / 2] = (limb[i / 2] & ~(uint64_t{0xffffffff} << shift)) | (uint64_t{w} << shift);
  }

  /// Keeps the low n bits, clearing everything above.
  constexpr Wide keep_low(unsigned n) const {
    EDPM_CONTRACT(n <= Bits, "Wide::keep_low width out of range");
    Wide r = *this;
    for (unsigned l = 0; l < kLimbs; ++l) {
      const unsigned lo = l * 64;
      if (n <= lo) {
        r.limb[l] = 0;
      } else if (n < lo + 64) {
        r.limb[l] &= (uint64_t{1} << (n - lo)) - 1;
      }
    }
    return r;
  }

  /// Zero-extension to a wider word.
  template <unsigned To>
  constexpr Wide<To> zext() const {
    static_assert(To >= Bits, "zext cannot narrow");
    Wide<To> r;
    for (unsigned l = 0; l < kLimbs; ++l) r.limb[l] = limb[l];
    return r;
  }

  /// Truncation to the low To bits.
  template <unsigned To>
  constexpr Wide<To> trunc() const {
    static_assert(To <= Bits, "trunc cannot widen");
    Wide<To> r;
    for (unsigned l = 0; l < Wide<To>::kLimbs; ++l) r.limb[l] = limb[l];
    r.mask_top();
    return r;
  }

  friend constexpr bool operator==(const Wide&, const Wide&) = default;

  friend constexpr std::strong_ordering operator<=>(const Wide& a, const Wide& b) {
    for (int l = int(kLimbs) - 1; l >= 0; --l) {
      if (a.limb[l] != b.limb[l]) {
        return a.limb[l] < b.limb[l] ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  constexpr Wide& operator+=(const Wide& o) {
    uint64_t carry = 0;
    for (unsigned l = 0; l < kLimbs; ++l) {
      const uint64_t s = limb[l] + o.limb[l];
      const uint64_t c1 = s < limb[l];
      limb[l] = s + carry;
      carry = c1 | (limb[l] < s);
    }
    mask_top();
    return *this;
  }

  constexpr Wide& operator-=(const Wide& o) {
    uint64_t borrow = 0;
    for (unsigned l = 0; l < kLimbs; ++l) {
      const uint64_t d = limb[l] - o.limb[l];
      const uint64_t b1 = d > limb[l];
      const uint64_t r = d - borrow;
      borrow = b1 | (r > d);
      limb[l] = r;
    }
    mask_top();
    return *this;
  }

  friend constexpr Wide operator+(Wide a, const Wide& b) { return a += b; }
  friend constexpr Wide operator-(Wide a, const Wide& b) { return a -= b; }

  constexpr Wide& operator<<=(unsigned k) {
    if (k >= Bits) {
      *this = zero();
      return *this;
    }
    const unsigned limb_shift = k / 64;
    const unsigned bit_shift = k % 64;
    for (int l = int(kLimbs) - 1; l >= 0; --l) {
      uint64_t v = 0;
      const int src = l - int(limb_shift);
      if (src >= 0) {
        v = limb[src] << bit_shift;
        if (bit_shift != 0 && src > 0) v |= limb[src - 1] >> (64 - bit_shift);
      }
      limb[l] = v;
    }
    mask_top();
    return *this;
  }

  constexpr Wide& operator>>=(unsigned k) {
    if (k >= Bits) {
      *this = zero();
      return *this;
    }
    const unsigned limb_shift = k / 64;
    const unsigned bit_shift = k % 64;
    for (unsigned l = 0; l < kLimbs; ++l) {
      uint64_t v = 0;
      const unsigned src = l + limb_shift;
      if (src < kLimbs) {
        v = limb[src] >> bit_shift;
        if (bit_shift != 0 && src + 1 < kLimbs) v |= limb[src + 1] << (64 - bit_shift);
      }
      limb[l] = v;
    }
    return *this;
  }

  friend constexpr Wide operator<<(Wide a, unsigned k) { return a <<= k; }
  friend constexpr Wide operator>>(Wide a, unsigned k) { return a >>= k; }

  /// Canonical text form: kHexDigits lowercase hex digits, big-endian.
  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(kHexDigits, '0');
    for (unsigned i = 0; i < kHexDigits; ++i) {
      const unsigned nibble = unsigned(limb[i / 16] >> (4 * (i % 16))) & 0xf;
      s[kHexDigits - 1 - i] = digits[nibble];
    }
    return s;
  }

  /// Parses big-endian hex, case-insensitive, optional 0x prefix; up to
  /// kHexDigits digits (shorter input is zero-padded on the left).
  static Wide from_hex(std::string_view s) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.empty()) throw std::invalid_argument("empty hex string");
    if (s.size() > kHexDigits) {
      throw std::invalid_argument("hex string longer than " + std::to_string(kHexDigits) + " digits");
    }
    Wide r;
    for (unsigned i = 0; i < s.size(); ++i) {
      const char c = s[s.size() - 1 - i];
      unsigned v;
      if (c >= '0' && c <= '9') {
        v = unsigned(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v = unsigned(c - 'a') + 10;
      } else if (c >= 'A' && c <= 'F') {
        v = unsigned(c - 'A') + 10;
      } else {
        throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
      }
      r.limb[i / 16] |= uint64_t(v) << (4 * (i % 16));
    }
    return r;
  }
};

/// Sum modulo 2^Bits plus the carry-out bit; the exact integer sum equals
/// carry * 2^Bits + result.
template <unsigned Bits>
constexpr std::pair<Wide<Bits>, bool> add_carry(const Wide<Bits>& a, const Wide<Bits>& b) {
  Wide<Bits> r;
  uint64_t carry = 0;
  for (unsigned l = 0; l < Wide<Bits>::kLimbs; ++l) {
    const uint64_t s = a.limb[l] + b.limb[l];
    const uint64_t c1 = s < a.limb[l];
    r.limb[l] = s + carry;
    carry = c1 | (r.limb[l] < s);
  }
  if constexpr (Bits % 64 != 0) {
    // masked operands cannot carry out of the top limb itself
    carry = (r.limb[Wide<Bits>::kLimbs - 1] >> (Bits % 64)) & 1;
    r.mask_top();
  }
  return {r, carry != 0};
}

/// Difference modulo 2^Bits plus the borrow-out bit; borrow is 1 iff a < b.
template <unsigned Bits>
constexpr std::pair<Wide<Bits>, bool> sub_borrow(const Wide<Bits>& a, const Wide<Bits>& b) {
  Wide<Bits> r;
  uint64_t borrow = 0;
  for (unsigned l = 0; l < Wide<Bits>::kLimbs; ++l) {
    const uint64_t d = a.limb[l] - b.limb[l];
    const uint64_t b1 = d > a.limb[l];
    r.limb[l] = d - borrow;
    borrow = b1 | (r.limb[l] > d);
  }
  r.mask_top();
  return {r, borrow != 0};
}

template <unsigned Bits>
constexpr Wide<Bits> shl1(const Wide<Bits>& a) {
  return a << 1;
}

template <unsigned Bits>
constexpr Wide<Bits> shr1(const Wide<Bits>& a) {
  return a >> 1;
}

/// Shift right by one radix-4 digit position.
template <unsigned Bits>
constexpr Wide<Bits> shr2(const Wide<Bits>& a) {
  return a >> 2;
}

using Word256 = Wide<256>;
using Word512 = Wide<512>;

}  // namespace edpm
