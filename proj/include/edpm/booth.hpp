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

#include "edpm/contracts.hpp"
#include "edpm/ledger.hpp"
#include "edpm/wide.hpp"

namespace edpm {

/// Serial-multiplier engine selection. BoothRadix4 retires two multiplier
/// bits per clock (Bits/2 steps); the other two retire one bit per clock
/// (Bits steps) and exist as cross-check alternates.
enum class MultiplierKind : uint8_t { BoothRadix4, BoothRadix2, Schoolbook };

/// Cycle-stepped model of the Booth radix-4 multiplier.
///
/// Each step recodes the multiplier window (bit 2i+1, bit 2i, bit 2i-1),
/// with bit -1 read as 0, into a digit in {0, +-1, +-2}, adds that multiple
/// of the multiplicand into the accumulator at the current alignment, and
/// advances the alignment by two bit positions. The accumulator works in
/// two's complement modulo 2^(2*Bits), so negative partial sums need no
/// separate sign register.
///
/// Booth recoding reads the multiplier as a signed value; when its top bit
/// is set the recoded digits sum to (multiplier - 2^Bits). The engine folds
/// the +multiplicand*2^Bits correction into the final step, so the unsigned
/// product is exact after exactly Bits/2 steps, independent of operands.
///
/// An engine is a single-owner mutable object; distinct engines may run
/// concurrently without coordination.
template <unsigned Bits>
class BoothEngine {
  static_assert(Bits % 2 == 0, "radix-4 recoding needs an even width");

 public:
  enum class State : uint8_t { Idle, Busy, Done };

  static constexpr unsigned kSteps = Bits / 2;

  BoothEngine() = default;

  /// Loads the operand registers and enters Busy. Restarting an engine that
  /// has finished a previous product is allowed.
  void start(const Wide<Bits>& multiplier, const Wide<Bits>& multiplicand) {
    multiplier_ = multiplier;
    multiplicand_ = multiplicand;
    accumulator_ = Wide<2 * Bits>::zero();
    aligned_ = multiplicand.template zext<2 * Bits>();
    step_ = 0;
    state_ = State::Busy;
  }

  /// Booth digit for window i of the given multiplier.
  static int recode_digit(const Wide<Bits>& multiplier, unsigned i) {
    EDPM_CONTRACT(i < kSteps, "Booth window index out of range");
    const int lo = (i == 0) ? 0 : int(multiplier.bit(2 * i - 1));
    const int mid = int(multiplier.bit(2 * i));
    const int hi = int(multiplier.bit(2 * i + 1));
    return lo + mid - 2 * hi;
  }

  /// One clock of the Busy state machine.
  void step() {
    EDPM_CONTRACT(state_ == State::Busy, "booth_step on a non-Busy engine");
    switch (recode_digit(multiplier_, step_)) {
      case 1:
        accumulator_ += aligned_;
        break;
      case 2:
        accumulator_ += shl1(aligned_);
        break;
      case -1:
        accumulator_ -= aligned_;
        break;
      case -2:
        accumulator_ -= shl1(aligned_);
        break;
      default:
        break;  // digit 0: accumulator holds
    }
    if (step_ == kSteps - 1 && multiplier_.bit(Bits - 1)) {
      // unsigned fix-up, fused into the last step at no extra cycle
      accumulator_ += multiplicand_.template zext<2 * Bits>() << Bits;
    }
    aligned_ <<= 2;
    ++step_;
    ++cycles_charged_;
    if (step_ == kSteps) state_ = State::Done;
  }

  State state() const { return state_; }
  unsigned step_count() const { return step_; }
  uint64_t cycles_charged() const { return cycles_charged_; }
  const Wide<2 * Bits>& accumulator() const { return accumulator_; }

  /// The exact product; only valid once the engine is Done.
  const Wide<2 * Bits>& product() const {
    EDPM_CONTRACT(state_ == State::Done, "product read before the engine is Done");
    return accumulator_;
  }

 private:
  State state_ = State::Idle;
  unsigned step_ = 0;
  Wide<2 * Bits> accumulator_{};
  Wide<2 * Bits> aligned_{};
  Wide<Bits> multiplicand_{};
  Wide<Bits> multiplier_{};
  uint64_t cycles_charged_ = 0;
};

/// Exact 2*Bits product by the radix-4 engine, without cycle accounting.
/// This is the value core the charged operations and the group-operation
/// schedule are built on.
template <unsigned Bits>
Wide<2 * Bits> booth_product(const Wide<Bits>& m, const Wide<Bits>& r) {
  BoothEngine<Bits> engine;
  engine.start(m, r);
  while (engine.state() == BoothEngine<Bits>::State::Busy) engine.step();
  return engine.product();
}

/// Exact product, charging Bits/2 cycles to the multiply unit.
template <unsigned Bits>
Wide<2 * Bits> booth_multiply(const Wide<Bits>& m, const Wide<Bits>& r, CycleLedger& ledger) {
  Wide<2 * Bits> p = booth_product(m, r);
  ledger.charge(Unit::Multiply, BoothEngine<Bits>::kSteps);
  return p;
}

/// Booth radix-2 alternate: one signed bit-recoded digit per step, Bits
/// steps, same final-step unsigned fix-up as the radix-4 engine.
template <unsigned Bits>
Wide<2 * Bits> booth_radix2_product(const Wide<Bits>& m, const Wide<Bits>& r) {
  Wide<2 * Bits> acc;
  Wide<2 * Bits> aligned = r.template zext<2 * Bits>();
  for (unsigned i = 0; i < Bits; ++i) {
    const int lo = (i == 0) ? 0 : int(m.bit(i - 1));
    switch (lo - int(m.bit(i))) {
      case 1:
        acc += aligned;
        break;
      case -1:
        acc -= aligned;
        break;
      default:
        break;
    }
    if (i == Bits - 1 && m.bit(Bits - 1)) {
      acc += r.template zext<2 * Bits>() << Bits;
    }
    aligned <<= 1;
  }
  return acc;
}

template <unsigned Bits>
Wide<2 * Bits> booth_radix2_multiply(const Wide<Bits>& m, const Wide<Bits>& r, CycleLedger& ledger) {
  Wide<2 * Bits> p = booth_radix2_product(m, r);
  ledger.charge(Unit::Multiply, Bits);
  return p;
}

/// Plain shift-and-add serial multiplier, Bits steps.
template <unsigned Bits>
Wide<2 * Bits> schoolbook_product(const Wide<Bits>& m, const Wide<Bits>& r) {
  Wide<2 * Bits> acc;
  Wide<2 * Bits> aligned = r.template zext<2 * Bits>();
  for (unsigned i = 0; i < Bits; ++i) {
    if (m.bit(i)) acc += aligned;
    aligned <<= 1;
  }
  return acc;
}

template <unsigned Bits>
Wide<2 * Bits> schoolbook_multiply(const Wide<Bits>& m, const Wide<Bits>& r, CycleLedger& ledger) {
  Wide<2 * Bits> p = schoolbook_product(m, r);
  ledger.charge(Unit::Multiply, Bits);
  return p;
}

/// Product by the selected engine, with that engine's cycle charge.
template <unsigned Bits>
Wide<2 * Bits> multiply_with(MultiplierKind kind, const Wide<Bits>& m, const Wide<Bits>& r,
                             CycleLedger& ledger) {
  switch (kind) {
    case MultiplierKind::BoothRadix4:
      return booth_multiply(m, r, ledger);
    case MultiplierKind::BoothRadix2:
      return booth_radix2_multiply(m, r, ledger);
    case MultiplierKind::Schoolbook:
      return schoolbook_multiply(m, r, ledger);
  }
  throw ContractViolation("unknown multiplier kind");
}

}  // namespace edpm
