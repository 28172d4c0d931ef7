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

// Reference implementation on arbitrary-precision integers (GMP), used as
// ground truth by the test suites and by the verification-side point
// normalization. It deliberately shares no arithmetic with the fixed-width
// datapath: values cross over only through limb import/export, and every
// operation here is plain bignum math.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

#include "edpm/point.hpp"

namespace edpm::oracle {

using BigInt = mpz_class;

template <unsigned Bits>
BigInt from_wide(const Wide<Bits>& w) {
  BigInt v;
  mpz_import(v.get_mpz_t(), Wide<Bits>::kLimbs, -1 /* LSB limb first */, sizeof(uint64_t),
             0 /* native endian */, 0, w.limb.data());
  return v;
}

template <unsigned Bits>
Wide<Bits> to_wide(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > Bits) {
    throw std::domain_error("oracle value does not fit the word width");
  }
  Wide<Bits> w;
  size_t count = 0;
  mpz_export(w.limb.data(), &count, -1, sizeof(uint64_t), 0, 0, v.get_mpz_t());
  return w;
}

/// Non-negative remainder of x modulo p.
inline BigInt o_mod(const BigInt& x, const BigInt& p) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

inline BigInt o_mulmod(const BigInt& x, const BigInt& y, const BigInt& p) {
  return o_mod(x * y, p);
}

/// Modular inverse by Fermat exponentiation x^(p-2) mod p.
inline BigInt o_invmod(const BigInt& x, const BigInt& p) {
  const BigInt r = o_mod(x, p);
  if (r == 0) throw std::domain_error("modular inverse of zero");
  BigInt out;
  const BigInt e = p - 2;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out;
}

/// Euler criterion: true iff x is a non-zero quadratic residue modulo p.
inline bool o_qr(const BigInt& x, const BigInt& p) {
  BigInt out;
  const BigInt e = (p - 1) / 2;
  mpz_powm(out.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return out == 1;
}

template <unsigned Bits>
struct CurveInts {
  BigInt p, a, d;
};

template <unsigned Bits>
CurveInts<Bits> curve_ints(const CurveParams<Bits>& c) {
  return CurveInts<Bits>{from_wide(c.field->p), from_wide(c.a.w), from_wide(c.d.w)};
}

template <unsigned Bits>
bool o_on_curve(const BigInt& x, const BigInt& y, const CurveInts<Bits>& c) {
  const BigInt lhs = o_mod(c.a * x * x + y * y, c.p);
  const BigInt rhs = o_mod(1 + c.d * x * x * y * y, c.p);
  return lhs == rhs;
}

/// Exact affine addition on the twisted Edwards curve:
///   x3 = (x1*y2 + x2*y1) / (1 + d*x1*x2*y1*y2)
///   y3 = (y1*y2 - a*x1*x2) / (1 - d*x1*x2*y1*y2)
/// A zero denominator (possible only on incomplete curves) is an error.
template <unsigned Bits>
std::pair<BigInt, BigInt> o_affine_add_ints(const BigInt& x1, const BigInt& y1, const BigInt& x2,
                                            const BigInt& y2, const CurveInts<Bits>& c) {
  const BigInt t = o_mod(c.d * x1 * x2 * y1 * y2, c.p);
  const BigInt den_x = o_mod(1 + t, c.p);
  const BigInt den_y = o_mod(1 - t, c.p);
  if (den_x == 0 || den_y == 0) {
    throw std::domain_error("exceptional pair in affine addition (incomplete curve)");
  }
  BigInt x3 = o_mulmod(o_mod(x1 * y2 + x2 * y1, c.p), o_invmod(den_x, c.p), c.p);
  BigInt y3 = o_mulmod(o_mod(y1 * y2 - c.a * x1 * x2, c.p), o_invmod(den_y, c.p), c.p);
  return {std::move(x3), std::move(y3)};
}

template <unsigned Bits>
AffinePoint<Bits> o_affine_add(const AffinePoint<Bits>& P, const AffinePoint<Bits>& Q,
                               const CurveParams<Bits>& c) {
  const auto ci = curve_ints(c);
  auto [x3, y3] = o_affine_add_ints(from_wide(P.x.w), from_wide(P.y.w), from_wide(Q.x.w),
                                    from_wide(Q.y.w), ci);
  return AffinePoint<Bits>{FieldElement<Bits>{to_wide<Bits>(x3), c.field},
                           FieldElement<Bits>{to_wide<Bits>(y3), c.field}};
}

/// Exact k*P by plain MSB-first double-and-add, starting from the identity
/// and walking every bit of k. This is intentionally a different structure
/// from the datapath's point-multiplication controller.
template <unsigned Bits>
AffinePoint<Bits> o_scalar_mul(const BigInt& k, const AffinePoint<Bits>& P,
                               const CurveParams<Bits>& c) {
  if (sgn(k) < 0) throw std::domain_error("oracle scalar must be non-negative");
  const auto ci = curve_ints(c);
  const BigInt px = from_wide(P.x.w), py = from_wide(P.y.w);
  BigInt tx = 0, ty = 1;
  const size_t nbits = (k == 0) ? 0 : mpz_sizeinbase(k.get_mpz_t(), 2);
  for (size_t i = nbits; i-- > 0;) {
    std::tie(tx, ty) = o_affine_add_ints(tx, ty, tx, ty, ci);
    if (mpz_tstbit(k.get_mpz_t(), i)) {
      std::tie(tx, ty) = o_affine_add_ints(tx, ty, px, py, ci);
    }
  }
  return AffinePoint<Bits>{FieldElement<Bits>{to_wide<Bits>(tx), c.field},
                           FieldElement<Bits>{to_wide<Bits>(ty), c.field}};
}

template <unsigned Bits>
AffinePoint<Bits> o_scalar_mul(const Wide<Bits>& k, const AffinePoint<Bits>& P,
                               const CurveParams<Bits>& c) {
  return o_scalar_mul(from_wide(k), P, c);
}

}  // namespace edpm::oracle
