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
#include <cstdint>
#include <vector>

namespace edpm {

/// The datapath units that clock cycles are charged to.
enum class Unit : uint8_t { AddSub, Multiply, Reduce, GroupOp, Pm };

/// Arithmetic operations a composite unit issues to its internal ALUs.
enum class IssueKind : uint8_t { Add, Sub, Mul, Square };

/// Clock-cycle accounting for one simulation instance.
///
/// Two kinds of entries are recorded:
///   - charges: elapsed cycles attributed to the unit that owns the time
///     (a standalone modular multiply charges Multiply+Reduce; a unified
///     point operation charges GroupOp once for the whole level schedule;
///     the point-multiplication controller charges Pm once per iteration).
///   - issues: operations a composite unit schedules on its internal ALU
///     instances, recorded with their standalone latency as "scheduled
///     work" but not added to the counters, since the level model already
///     accounts for the elapsed time.
///
/// The event log keeps charges and issues in program order, which is what
/// the control-flow uniformity checks compare across different scalars.
/// A ledger is a single-owner mutable object; distinct ledgers may be used
/// from different threads without coordination.
struct CycleLedger {
  struct Event {
    bool charged;      // true: cycle charge; false: scheduled-work note
    Unit unit;         // charged unit, or the ALU an issue targets
    IssueKind kind;    // meaningful for issue events only
    uint64_t cycles;   // charged cycles, or the issue's standalone latency

    friend bool operator==(const Event&, const Event&) = default;
  };

  std::array<uint64_t, 5> counter{};  // indexed by Unit
  std::vector<Event> events;

  void charge(Unit u, uint64_t cycles) {
    counter[size_t(u)] += cycles;
    events.push_back(Event{true, u, IssueKind::Add, cycles});
  }

  void issue(Unit alu, IssueKind kind, uint64_t standalone_latency) {
    events.push_back(Event{false, alu, kind, standalone_latency});
  }

  uint64_t addsub() const { return counter[size_t(Unit::AddSub)]; }
  uint64_t multiply() const { return counter[size_t(Unit::Multiply)]; }
  uint64_t reduce() const { return counter[size_t(Unit::Reduce)]; }
  uint64_t group_op() const { return counter[size_t(Unit::GroupOp)]; }
  uint64_t pm() const { return counter[size_t(Unit::Pm)]; }

  /// Total charged cycles; by construction the sum of the per-unit counters.
  uint64_t total() const {
    uint64_t t = 0;
    for (uint64_t c : counter) t += c;
    return t;
  }

  /// Sum of the standalone latencies of all issued operations.
  uint64_t scheduled_work() const {
    uint64_t t = 0;
    for (const Event& e : events) {
      if (!e.charged) t += e.cycles;
    }
    return t;
  }

  uint64_t issue_count(IssueKind kind) const {
    uint64_t n = 0;
    for (const Event& e : events) {
      if (!e.charged && e.kind == kind) ++n;
    }
    return n;
  }

  friend bool operator==(const CycleLedger&, const CycleLedger&) = default;
};

}  // namespace edpm
