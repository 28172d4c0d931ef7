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

#include "edpm/field.hpp"

namespace edpm {

template <unsigned Bits>
struct AffinePoint {
  FieldElement<Bits> x, y;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// (X : Y : Z) with Z != 0; represents the affine point (X/Z, Y/Z).
template <unsigned Bits>
struct ProjectivePoint {
  FieldElement<Bits> X, Y, Z;
};

/// A twisted Edwards curve a*x^2 + y^2 = 1 + d*x^2*y^2 over a prime field.
///
/// `complete` records whether a is a quadratic residue and d a non-residue
/// modulo p (established once, by the oracle's Euler-criterion test, in
/// make_curve); the unified addition law is exception-free exactly when it
/// is set.
template <unsigned Bits>
struct CurveParams {
  FieldRef<Bits> field;
  FieldElement<Bits> a, d;
  std::optional<AffinePoint<Bits>> base_point;
  bool complete = false;
  std::string name;
};

template <unsigned Bits>
AffinePoint<Bits> identity_affine(const CurveParams<Bits>& c) {
  return AffinePoint<Bits>{fe_zero(c.field), fe_one(c.field)};
}

template <unsigned Bits>
ProjectivePoint<Bits> identity_projective(const CurveParams<Bits>& c) {
  return ProjectivePoint<Bits>{fe_zero(c.field), fe_one(c.field), fe_one(c.field)};
}

/// Affine curve-membership test: a*x^2 + y^2 == 1 + d*x^2*y^2 (mod p).
template <unsigned Bits>
bool on_curve(const AffinePoint<Bits>& p, const CurveParams<Bits>& c) {
  const auto x2 = fe_mul(p.x, p.x);
  const auto y2 = fe_mul(p.y, p.y);
  const auto lhs = fe_add(fe_mul(c.a, x2), y2);
  const auto rhs = fe_add(fe_one(c.field), fe_mul(c.d, fe_mul(x2, y2)));
  return lhs == rhs;
}

/// Projective curve-membership test:
/// (a*X^2 + Y^2) * Z^2 == Z^4 + d*X^2*Y^2 (mod p).
template <unsigned Bits>
bool on_curve(const ProjectivePoint<Bits>& p, const CurveParams<Bits>& c) {
  if (p.Z.w.is_zero()) return false;
  const auto x2 = fe_mul(p.X, p.X);
  const auto y2 = fe_mul(p.Y, p.Y);
  const auto z2 = fe_mul(p.Z, p.Z);
  const auto lhs = fe_mul(fe_add(fe_mul(c.a, x2), y2), z2);
  const auto rhs = fe_add(fe_mul(z2, z2), fe_mul(c.d, fe_mul(x2, y2)));
  return lhs == rhs;
}

/// Embeds an affine point as (x : y : 1).
template <unsigned Bits>
ProjectivePoint<Bits> to_projective(const AffinePoint<Bits>& p) {
  return ProjectivePoint<Bits>{p.x, p.y, fe_one(p.x.field)};
}

/// The affine negation (-x, y).
template <unsigned Bits>
AffinePoint<Bits> negate(const AffinePoint<Bits>& p) {
  return AffinePoint<Bits>{fe_sub(fe_zero(p.x.field), p.x), p.y};
}

}  // namespace edpm
