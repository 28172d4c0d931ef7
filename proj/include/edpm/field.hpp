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

#include <memory>
#include <string>
#include <utility>

#include "edpm/booth.hpp"
#include "edpm/contracts.hpp"
#include "edpm/ledger.hpp"
#include "edpm/wide.hpp"

namespace edpm {

/// Which modular-reduction datapath backs a field.
///
/// FastP256 is the one-cycle word-shuffle reduction for the NIST P-256
/// prime; Pseudo25519 is the pseudo-Mersenne fold for 2^255 - 19, charged
/// one cycle to match the FastP256 cost model; GenericOracle is a plain
/// division-based reduction for arbitrary odd primes (the route a reference
/// implementation would take) and is meant for tests and scaled-down field
/// widths, again with the same one-cycle charge.
enum class ReduceBackend : uint8_t { FastP256, Pseudo25519, GenericOracle };

inline const char* backend_name(ReduceBackend b) {
  switch (b) {
    case ReduceBackend::FastP256:
      return "fastp256";
    case ReduceBackend::Pseudo25519:
      return "pseudo25519";
    case ReduceBackend::GenericOracle:
      return "generic";
  }
  return "?";
}

inline Word256 p256_prime() {
  return Word256::from_hex("ffffffff00000001000000000000000000000000ffffffffffffffffffffffff");
}

inline Word256 p25519_prime() {
  return Word256::from_hex("7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffed");
}

template <unsigned Bits>
struct FieldParams {
  Wide<Bits> p;
  ReduceBackend backend;
  std::string name;
};

template <unsigned Bits>
using FieldRef = std::shared_ptr<const FieldParams<Bits>>;

/// Validates and freezes a field description. The prime must be odd and at
/// least 3; the special-form backends additionally require their exact
/// prime (and therefore a 256-bit width).
template <unsigned Bits>
FieldRef<Bits> make_field(const Wide<Bits>& p, ReduceBackend backend, std::string name) {
  if (p < Wide<Bits>::from_u64(3) || !p.bit(0)) {
    throw std::invalid_argument("field prime must be odd and >= 3");
  }
  if (backend != ReduceBackend::GenericOracle) {
    if constexpr (Bits != 256) {
      throw std::invalid_argument("special-form reduction backends are 256-bit only");
    } else {
      if (backend == ReduceBackend::FastP256 && p != p256_prime()) {
        throw std::invalid_argument("FastP256 backend requires the NIST P-256 prime");
      }
      if (backend == ReduceBackend::Pseudo25519 && p != p25519_prime()) {
        throw std::invalid_argument("Pseudo25519 backend requires 2^255 - 19");
      }
    }
  }
  return std::make_shared<const FieldParams<Bits>>(FieldParams<Bits>{p, backend, std::move(name)});
}

/// A field element: a word kept reduced below the prime at all times
/// outside an operation's internal steps.
template <unsigned Bits>
struct FieldElement {
  Wide<Bits> w;
  FieldRef<Bits> field;

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.w == b.w; }
};

template <unsigned Bits>
bool same_field(const FieldElement<Bits>& a, const FieldElement<Bits>& b) {
  return a.field == b.field ||
         (a.field && b.field && a.field->backend == b.field->backend && a.field->p == b.field->p);
}

template <unsigned Bits>
FieldElement<Bits> make_element(const Wide<Bits>& w, FieldRef<Bits> field) {
  if (!(w < field->p)) throw std::invalid_argument("field element not below the modulus");
  return FieldElement<Bits>{w, std::move(field)};
}

template <unsigned Bits>
FieldElement<Bits> fe_zero(FieldRef<Bits> field) {
  return FieldElement<Bits>{Wide<Bits>::zero(), std::move(field)};
}

template <unsigned Bits>
FieldElement<Bits> fe_one(FieldRef<Bits> field) {
  return FieldElement<Bits>{Wide<Bits>::from_u64(1), std::move(field)};
}

enum class AluOp : uint8_t { Add, Sub };

// ---------------------------------------------------------------------------
// Value cores. These compute the datapath's exact results without touching a
// ledger; the charged operations and the group-operation level schedule wrap
// them with the appropriate cycle accounting.
// ---------------------------------------------------------------------------

/// (x + y) mod p: add, then subtract p once when the sum reaches it. The
/// carry-out stands in for bit Bits of the true sum, so the wrapped
/// subtraction lands in range even when p is close to 2^Bits.
template <unsigned Bits>
FieldElement<Bits> fe_add(const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
  EDPM_CONTRACT(same_field(x, y), "fe_add operands from different fields");
  auto [s, carry] = add_carry(x.w, y.w);
  if (carry || !(s < x.field->p)) s -= x.field->p;
  return FieldElement<Bits>{s, x.field};
}

/// (x - y) mod p: subtract, adding p back when the difference borrows.
template <unsigned Bits>
FieldElement<Bits> fe_sub(const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
  EDPM_CONTRACT(same_field(x, y), "fe_sub operands from different fields");
  auto [d, borrow] = sub_borrow(x.w, y.w);
  if (borrow) d += x.field->p;
  return FieldElement<Bits>{d, x.field};
}

/// x mod p256 by the nine-term word-shuffle sum.
///
/// The double-width input is read as sixteen 32-bit words x0..x15 and nine
/// 256-bit terms are assembled from them; the signed combination
/// s1 + 2*s2 + 2*s3 + s4 + s5 - s6 - s7 - s8 - s9 is congruent to x. The
/// sum is accumulated in a 320-bit register with 4*p added up front so it
/// never goes negative, then brought into range with at most eight
/// conditional subtractions. For inputs below p256^2 (the product of two
/// reduced elements) the sum lies in (-4p, 5p), which makes the correction
/// bound exact.
inline Word256 reduce_fast_p256_value(const Word512& x) {
  // term layouts: source word for each of the eight 32-bit output words,
  // least significant first; -1 places a zero word
  static constexpr int8_t kTerm[9][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7},          // s1
      {-1, -1, -1, 11, 12, 13, 14, 15},  // s2 (doubled)
      {-1, -1, -1, 12, 13, 14, 15, -1},  // s3 (doubled)
      {8, 9, 10, -1, -1, -1, 14, 15},    // s4
      {9, 10, 11, 13, 14, 15, 13, 8},    // s5
      {11, 12, 13, -1, -1, -1, 8, 10},   // s6 (subtracted)
      {12, 13, 14, 15, -1, -1, 9, 11},   // s7 (subtracted)
      {13, 14, 15, 8, 9, 10, -1, 12},    // s8 (subtracted)
      {14, 15, -1, 9, 10, 11, -1, 13},   // s9 (subtracted)
  };
  Wide<320> term[9];
  for (unsigned t = 0; t < 9; ++t) {
    Word256 v;
    for (unsigned j = 0; j < 8; ++j) {
      if (kTerm[t][j] >= 0) v.set_word32(j, x.word32(unsigned(kTerm[t][j])));
    }
    term[t] = v.zext<320>();
  }
  const Wide<320> p = p256_prime().zext<320>();
  Wide<320> acc = p << 2;  // +4p keeps the signed sum non-negative
  acc += term[0];
  acc += shl1(term[1]);
  acc += shl1(term[2]);
  acc += term[3];
  acc += term[4];
  acc -= term[5];
  acc -= term[6];
  acc -= term[7];
  acc -= term[8];
  unsigned corrections = 0;
  while (!(acc < p)) {
    acc -= p;
    ++corrections;
    EDPM_CONTRACT(corrections <= 8, "fast p256 reduction input exceeds p^2");
  }
  return acc.trunc<256>();
}

/// x mod (2^255 - 19) by repeated pseudo-Mersenne folding: split at bit 255
/// and add back 19 times the high part until the value fits in 255 bits,
/// then subtract p at most once.
inline Word256 reduce_25519_value(const Word512& x) {
  const Word256 p = p25519_prime();
  Word512 v = x;
  for (;;) {
    const Word512 high = v >> 255;
    if (high.is_zero()) break;
    Word512 folded = v.keep_low(255);
    folded += high << 4;
    folded += shl1(high);
    folded += high;  // +19 * high
    v = folded;
  }
  Word256 r = v.trunc<256>();
  if (!(r < p)) r -= p;
  return r;
}

/// Division-based reduction for arbitrary odd primes: restoring shift-
/// subtract long division over all 2*Bits input bits.
template <unsigned Bits>
Wide<Bits> reduce_generic_value(const Wide<2 * Bits>& x, const Wide<Bits>& p) {
  const Wide<2 * Bits> pw = p.template zext<2 * Bits>();
  Wide<2 * Bits> r;
  for (int i = 2 * int(Bits) - 1; i >= 0; --i) {
    r <<= 1;
    if (x.bit(unsigned(i))) r.limb[0] |= 1;
    if (!(r < pw)) r -= pw;
  }
  return r.template trunc<Bits>();
}

/// Backend dispatch for the value-level reduction of a double-width word.
template <unsigned Bits>
Wide<Bits> reduce_value(const Wide<2 * Bits>& x, const FieldParams<Bits>& field) {
  if constexpr (Bits == 256) {
    switch (field.backend) {
      case ReduceBackend::FastP256:
        return reduce_fast_p256_value(x);
      case ReduceBackend::Pseudo25519:
        return reduce_25519_value(x);
      case ReduceBackend::GenericOracle:
        return reduce_generic_value<Bits>(x, field.p);
    }
    throw ContractViolation("unknown reduction backend");
  } else {
    EDPM_CONTRACT(field.backend == ReduceBackend::GenericOracle,
                  "scaled-down fields use the generic reduction");
    return reduce_generic_value<Bits>(x, field.p);
  }
}

/// (x * y) mod p without cycle accounting.
template <unsigned Bits>
FieldElement<Bits> fe_mul(const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
  EDPM_CONTRACT(same_field(x, y), "fe_mul operands from different fields");
  return FieldElement<Bits>{reduce_value<Bits>(booth_product(x.w, y.w), *x.field), x.field};
}

// ---------------------------------------------------------------------------
// Charged operations: the behavioral models of the arithmetic units, each
// posting its clock cycles to the ledger.
// ---------------------------------------------------------------------------

/// Combined modular adder/subtractor; one cycle regardless of operands.
template <unsigned Bits>
FieldElement<Bits> mod_addsub(const FieldElement<Bits>& x, const FieldElement<Bits>& y, AluOp op,
                              CycleLedger& ledger) {
  FieldElement<Bits> r = (op == AluOp::Add) ? fe_add(x, y) : fe_sub(x, y);
  ledger.charge(Unit::AddSub, 1);
  return r;
}

/// One-cycle fast reduction modulo the NIST P-256 prime.
inline FieldElement<256> fast_reduce_p256(const Word512& x, FieldRef<256> field,
                                          CycleLedger& ledger) {
  EDPM_CONTRACT(field->backend == ReduceBackend::FastP256, "field is not FastP256");
  FieldElement<256> r{reduce_fast_p256_value(x), std::move(field)};
  ledger.charge(Unit::Reduce, 1);
  return r;
}

/// One-cycle reduction modulo 2^255 - 19.
inline FieldElement<256> reduce_25519(const Word512& x, FieldRef<256> field, CycleLedger& ledger) {
  EDPM_CONTRACT(field->backend == ReduceBackend::Pseudo25519, "field is not Pseudo25519");
  FieldElement<256> r{reduce_25519_value(x), std::move(field)};
  ledger.charge(Unit::Reduce, 1);
  return r;
}

/// Backend-dispatched reduction, one cycle.
template <unsigned Bits>
FieldElement<Bits> mod_reduce(const Wide<2 * Bits>& x, FieldRef<Bits> field, CycleLedger& ledger) {
  FieldElement<Bits> r{reduce_value<Bits>(x, *field), std::move(field)};
  ledger.charge(Unit::Reduce, 1);
  return r;
}

/// Modular multiplication: the serial multiplier followed by the one-cycle
/// reduction. With the radix-4 engine this is Bits/2 + 1 cycles total (129
/// at the full 256-bit width).
template <unsigned Bits>
FieldElement<Bits> mod_mul(const FieldElement<Bits>& x, const FieldElement<Bits>& y,
                           CycleLedger& ledger, MultiplierKind kind = MultiplierKind::BoothRadix4) {
  EDPM_CONTRACT(same_field(x, y), "mod_mul operands from different fields");
  Wide<2 * Bits> product = multiply_with(kind, x.w, y.w, ledger);
  return mod_reduce<Bits>(product, x.field, ledger);
}

/// Standalone latency of one modular multiply or square on the radix-4
/// datapath; also the latency of a multiplicative level in the group
/// operation's schedule.
constexpr uint64_t mod_mul_cycles(unsigned bits) { return bits / 2 + 1; }

}  // namespace edpm
