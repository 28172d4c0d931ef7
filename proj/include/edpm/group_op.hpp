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

#include <optional>
#include <string>
#include <utility>

#include "edpm/oracle.hpp"
#include "edpm/point.hpp"

namespace edpm {

/// Builds a curve, checking the type invariants (a, d non-zero and
/// distinct, base point on the curve when given) and establishing the
/// completeness flag by the oracle's Euler-criterion test.
template <unsigned Bits>
CurveParams<Bits> make_curve(FieldRef<Bits> field, const Wide<Bits>& a, const Wide<Bits>& d,
                             std::optional<std::pair<Wide<Bits>, Wide<Bits>>> base,
                             std::string name) {
  CurveParams<Bits> c;
  c.field = field;
  c.a = make_element(a, field);
  c.d = make_element(d, field);
  c.name = std::move(name);
  if (c.a.w.is_zero() || c.d.w.is_zero() || c.a.w == c.d.w) {
    throw std::invalid_argument("curve requires a != 0, d != 0, a != d");
  }
  const auto p = oracle::from_wide(field->p);
  c.complete = oracle::o_qr(oracle::from_wide(a), p) && !oracle::o_qr(oracle::from_wide(d), p);
  if (base) {
    AffinePoint<Bits> bp{make_element(base->first, field), make_element(base->second, field)};
    if (!on_curve(bp, c)) throw std::invalid_argument("base point is not on the curve");
    c.base_point = bp;
  }
  return c;
}

/// Latency of the six-level unified point operation: five multiplicative
/// levels plus one add/sub level, i.e. 5m/2 + 6 (646 at m = 256).
constexpr uint64_t group_op_cycles(unsigned bits) { return 5 * mod_mul_cycles(bits) + 1; }

namespace detail {

/// The fixed six-level schedule of the unified point operation. Issues the
/// 13 multiplications, 1 squaring and 4 add/subs to the ledger as scheduled
/// work and returns the result; the caller decides which unit the elapsed
/// level-model cycles are charged to.
///
///   level 1:  t1 = X1*X2   A = Z1*Z2   C2 = X1*Y2   D1 = Y1*Y2   D2 = X2*Y1
///   level 2:  B = A^2      C1 = a*t1   t2 = C2*D2
///   level 3:  E = d*t2
///   level 4:  F = B - E    G = B + E   t3 = C2 + D2   t4 = D1 - C1
///   level 5:  u = A*F      v = A*G     Z3 = F*G
///   level 6:  X3 = u*t3    Y3 = v*t4
///
/// Levels 1, 2, 3, 5 and 6 run their operations on parallel multiplier
/// instances and take one multiply latency each; level 4 takes one cycle.
template <unsigned Bits>
ProjectivePoint<Bits> run_unified_schedule(const ProjectivePoint<Bits>& P,
                                           const ProjectivePoint<Bits>& Q,
                                           const CurveParams<Bits>& c, CycleLedger& ledger) {
  EDPM_CONTRACT(same_field(P.X, c.a) && same_field(Q.X, c.a),
                "point operands from a different field than the curve");
  const uint64_t mul = mod_mul_cycles(Bits);

  auto issue_mul = [&](const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
    ledger.issue(Unit::Multiply, IssueKind::Mul, mul);
    return fe_mul(x, y);
  };
  auto issue_square = [&](const FieldElement<Bits>& x) {
    ledger.issue(Unit::Multiply, IssueKind::Square, mul);
    return fe_mul(x, x);
  };
  auto issue_add = [&](const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
    ledger.issue(Unit::AddSub, IssueKind::Add, 1);
    return fe_add(x, y);
  };
  auto issue_sub = [&](const FieldElement<Bits>& x, const FieldElement<Bits>& y) {
    ledger.issue(Unit::AddSub, IssueKind::Sub, 1);
    return fe_sub(x, y);
  };

  // level 1
  const auto t1 = issue_mul(P.X, Q.X);
  const auto A = issue_mul(P.Z, Q.Z);
  const auto C2 = issue_mul(P.X, Q.Y);
  const auto D1 = issue_mul(P.Y, Q.Y);
  const auto D2 = issue_mul(Q.X, P.Y);
  // level 2
  const auto B = issue_square(A);
  const auto C1 = issue_mul(c.a, t1);
  const auto t2 = issue_mul(C2, D2);
  // level 3
  const auto E = issue_mul(c.d, t2);
  // level 4
  const auto F = issue_sub(B, E);
  const auto G = issue_add(B, E);
  const auto t3 = issue_add(C2, D2);
  const auto t4 = issue_sub(D1, C1);
  // level 5
  const auto u = issue_mul(A, F);
  const auto v = issue_mul(A, G);
  const auto Z3 = issue_mul(F, G);
  // level 6
  const auto X3 = issue_mul(u, t3);
  const auto Y3 = issue_mul(v, t4);

  if (Z3.w.is_zero()) {
    throw std::domain_error("degenerate result: Z = 0 (exceptional pair on an incomplete curve)");
  }
  return ProjectivePoint<Bits>{X3, Y3, Z3};
}

}  // namespace detail

/// The unified point operation: computes P + Q, and equally P + P when the
/// operands coincide — there is no separate doubling path anywhere in the
/// module. Charges 5m/2 + 6 cycles to the group-op unit.
template <unsigned Bits>
ProjectivePoint<Bits> unified_point_op(const ProjectivePoint<Bits>& P,
                                       const ProjectivePoint<Bits>& Q, const CurveParams<Bits>& c,
                                       CycleLedger& ledger) {
  ProjectivePoint<Bits> r = detail::run_unified_schedule(P, Q, c, ledger);
  ledger.charge(Unit::GroupOp, group_op_cycles(Bits));
  return r;
}

/// Projective equality: X1*Z2 == X2*Z1 and Y1*Z2 == Y2*Z1 (mod p). This is
/// the comparative unit's predicate; it is not part of the cycle-charged
/// datapath.
template <unsigned Bits>
bool point_equal(const ProjectivePoint<Bits>& P, const ProjectivePoint<Bits>& Q) {
  EDPM_CONTRACT(!P.Z.w.is_zero() && !Q.Z.w.is_zero(), "point_equal requires Z != 0");
  return fe_mul(P.X, Q.Z) == fe_mul(Q.X, P.Z) && fe_mul(P.Y, Q.Z) == fe_mul(Q.Y, P.Z);
}

/// Normalizes (X : Y : Z) to (X/Z, Y/Z). Verification-side only: the
/// inversion is the oracle's Fermat inversion, and nothing is charged.
template <unsigned Bits>
AffinePoint<Bits> to_affine(const ProjectivePoint<Bits>& P) {
  if (P.Z.w.is_zero()) {
    throw std::domain_error("cannot normalize a point with Z = 0");
  }
  const auto p = oracle::from_wide(P.X.field->p);
  const auto zinv = oracle::o_invmod(oracle::from_wide(P.Z.w), p);
  const auto x = oracle::o_mulmod(oracle::from_wide(P.X.w), zinv, p);
  const auto y = oracle::o_mulmod(oracle::from_wide(P.Y.w), zinv, p);
  return AffinePoint<Bits>{FieldElement<Bits>{oracle::to_wide<Bits>(x), P.X.field},
                           FieldElement<Bits>{oracle::to_wide<Bits>(y), P.Y.field}};
}

}  // namespace edpm
