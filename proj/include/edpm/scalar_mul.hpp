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

#include <cstdint>
#include <optional>

#include "edpm/group_op.hpp"

namespace edpm {

template <unsigned Bits>
struct Scalar {
  Wide<Bits> value;
};

/// How the point-multiplication controller schedules its iterations.
///
/// PaperCycles runs a fixed m-1 iterations for an m-bit datapath: the
/// iterations above the scalar's top set bit execute the same twin
/// point-double / point-add datapath work as every other iteration but
/// leave the accumulator untouched, so the ledger is identical for any two
/// same-width scalars. ExactCycles starts at the top set bit and skips the
/// leading zeros.
enum class CycleMode : uint8_t { PaperCycles, ExactCycles };

template <unsigned Bits>
struct PmResult {
  ProjectivePoint<Bits> point;
  CycleLedger ledger;
  CycleMode mode;
  bool zero_scalar = false;  // k = 0: identity returned, no group-op work
};

/// Total paper-mode cycles for an m-bit point multiplication:
/// (m-1) * (5m/2 + 6), i.e. 164,730 at m = 256.
constexpr uint64_t pm_cycles(unsigned bits) { return (bits - 1) * group_op_cycles(bits); }

/// The double-and-add-always point-multiplication controller.
///
/// Every iteration issues a point doubling of the accumulator and a point
/// addition of the base point onto that doubling; the two run as parallel
/// group-operation datapath instances, so the iteration is charged one
/// 5m/2 + 6 window to the pm unit, and the key bit selects which result
/// survives through the output multiplexer. Control flow never branches on
/// operand values, only on the iteration schedule of the selected mode.
template <unsigned Bits>
PmResult<Bits> point_multiply(const Scalar<Bits>& k, const AffinePoint<Bits>& P,
                              const CurveParams<Bits>& c, CycleMode mode) {
  if (!c.complete) {
    throw std::invalid_argument("point multiplication requires a complete curve");
  }
  if (!on_curve(P, c)) {
    throw std::invalid_argument("point is not on the curve");  // before any cycle is charged
  }

  PmResult<Bits> result{to_projective(P), CycleLedger{}, mode, false};
  if (k.value.is_zero()) {
    result.point = identity_projective(c);
    result.zero_scalar = true;
    return result;
  }

  const ProjectivePoint<Bits> base = to_projective(P);
  const int top = k.value.top_bit();
  ProjectivePoint<Bits> acc = base;  // accumulator starts at P, aligned to the top set bit

  auto iteration = [&](std::optional<unsigned> bit_index) {
    const auto doubled = detail::run_unified_schedule(acc, acc, c, result.ledger);
    const auto added = detail::run_unified_schedule(doubled, base, c, result.ledger);
    result.ledger.charge(Unit::Pm, group_op_cycles(Bits));
    if (bit_index) {
      acc = k.value.bit(*bit_index) ? added : doubled;
    }
    // no bit index: dummy iteration above the top set bit; both results
    // are discarded and the accumulator holds
  };

  if (mode == CycleMode::PaperCycles) {
    const unsigned dummies = (Bits - 1) - unsigned(top);
    for (unsigned j = 0; j < Bits - 1; ++j) {
      if (j < dummies) {
        iteration(std::nullopt);
      } else {
        iteration(Bits - 2 - j);
      }
    }
  } else {
    for (int i = top - 1; i >= 0; --i) {
      iteration(unsigned(i));
    }
  }
  result.point = acc;
  return result;
}

/// Latency and throughput derived from a cycle total at a clock frequency.
struct LatencyReport {
  uint64_t cycles = 0;
  unsigned bits = 0;
  double clock_mhz = 0.0;
  double time_seconds = 0.0;
  std::optional<double> throughput_bps;  // absent when no cycles elapsed
};

inline LatencyReport latency_report(uint64_t cycles, unsigned bits, double clock_mhz) {
  EDPM_CONTRACT(clock_mhz > 0.0, "clock frequency must be positive");
  LatencyReport r;
  r.cycles = cycles;
  r.bits = bits;
  r.clock_mhz = clock_mhz;
  r.time_seconds = double(cycles) / (clock_mhz * 1e6);
  if (cycles > 0) r.throughput_bps = double(bits) / r.time_seconds;
  return r;
}

template <unsigned Bits>
LatencyReport report(const PmResult<Bits>& r, double clock_mhz) {
  return latency_report(r.ledger.total(), Bits, clock_mhz);
}

}  // namespace edpm
