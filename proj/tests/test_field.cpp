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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace edpm;
using oracle::BigInt;
using oracle::from_wide;
using oracle::to_wide;

namespace {

FieldRef<256> fastp256_field() {
  static auto f = make_field<256>(p256_prime(), ReduceBackend::FastP256, "p256");
  return f;
}

FieldRef<256> p25519_field() {
  static auto f = make_field<256>(p25519_prime(), ReduceBackend::Pseudo25519, "25519");
  return f;
}

std::vector<FieldRef<256>> both_backends() { return {fastp256_field(), p25519_field()}; }

}  // namespace

TEST_CASE("field construction validates the prime and backend") {
  CHECK_THROWS_AS(make_field<256>(Word256::from_u64(10), ReduceBackend::GenericOracle, "even"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_field<256>(Word256::from_u64(1), ReduceBackend::GenericOracle, "one"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_field<256>(p25519_prime(), ReduceBackend::FastP256, "wrong"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_field<256>(p256_prime(), ReduceBackend::Pseudo25519, "wrong"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_field<8>(Wide<8>::from_u64(251), ReduceBackend::FastP256, "tiny"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_element(p256_prime(), fastp256_field()), std::invalid_argument);
}

TEST_CASE("combined adder/subtractor: trivial cases and cycle charge") {
  for (const auto& field : both_backends()) {
    auto pm1 = FieldElement<256>{field->p - Word256::from_u64(1), field};
    auto one = fe_one(field);
    CycleLedger ledger;
    CHECK(mod_addsub(pm1, one, AluOp::Add, ledger).w.is_zero());  // wraps to zero
    CHECK(mod_addsub(pm1, pm1, AluOp::Sub, ledger).w.is_zero());
    CHECK(ledger.addsub() == 2);
    CHECK(ledger.total() == 2);
  }
}

TEST_CASE("adder/subtractor rejects mixed fields") {
  CycleLedger ledger;
  auto x = fe_one(fastp256_field());
  auto y = fe_one(p25519_field());
  CHECK_THROWS_AS(mod_addsub(x, y, AluOp::Add, ledger), ContractViolation);
  CHECK_THROWS_AS(mod_mul(x, y, ledger), ContractViolation);
}

TEST_CASE("add/sub match the oracle on 10,000 pairs per backend") {
  for (const auto& field : both_backends()) {
    auto rng = test::make_rng(0xf1e1d001);
    const BigInt p = from_wide(field->p);
    for (int i = 0; i < 10000; ++i) {
      const auto x = test::random_element(rng, field);
      const auto y = test::random_element(rng, field);
      CycleLedger ledger;
      const auto sum = mod_addsub(x, y, AluOp::Add, ledger);
      const auto diff = mod_addsub(x, y, AluOp::Sub, ledger);
      CHECK(from_wide(sum.w) == oracle::o_mod(from_wide(x.w) + from_wide(y.w), p));
      CHECK(from_wide(diff.w) == oracle::o_mod(from_wide(x.w) - from_wide(y.w), p));
      CHECK(ledger.total() == 2);
    }
  }
}

TEST_CASE("fast p256 reduction: boundary cases") {
  auto field = fastp256_field();
  CycleLedger ledger;
  // below the modulus the value is unchanged
  const auto small = Word256::from_u64(123456789).zext<512>();
  CHECK(fast_reduce_p256(small, field, ledger).w == Word256::from_u64(123456789));
  // exactly the modulus reduces to zero
  CHECK(fast_reduce_p256(p256_prime().zext<512>(), field, ledger).w.is_zero());
  CHECK(ledger.reduce() == 2);
  CHECK_THROWS_AS(fast_reduce_p256(small, p25519_field(), ledger), ContractViolation);
}

TEST_CASE("fast p256 reduction matches the oracle on 10,000 products") {
  auto field = fastp256_field();
  auto rng = test::make_rng(0xf1e1d002);
  const BigInt p = from_wide(field->p);
  for (int i = 0; i < 10000; ++i) {
    // inputs below p^2, as produced by the multiplier
    const BigInt a = from_wide(test::random_below(rng, field->p));
    const BigInt b = from_wide(test::random_below(rng, field->p));
    const BigInt x = a * b;
    CHECK(from_wide(reduce_fast_p256_value(to_wide<512>(x))) == oracle::o_mod(x, p));
  }
}

TEST_CASE("25519 reduction: boundary cases") {
  auto field = p25519_field();
  CycleLedger ledger;
  Word512 x;
  x.set_bit(255);  // 2^255 folds to 19
  CHECK(reduce_25519(x, field, ledger).w == Word256::from_u64(19));
  CHECK(reduce_25519(p25519_prime().zext<512>(), field, ledger).w.is_zero());
  CHECK(ledger.reduce() == 2);
}

TEST_CASE("25519 reduction accepts any 512-bit input") {
  auto field = p25519_field();
  auto rng = test::make_rng(0xf1e1d003);
  const BigInt p = from_wide(field->p);
  for (int i = 0; i < 10000; ++i) {
    const auto x = test::random_wide<512>(rng);
    CHECK(from_wide(reduce_25519_value(x)) == oracle::o_mod(from_wide(x), p));
  }
}

TEST_CASE("generic division reduction agrees with the oracle") {
  auto rng = test::make_rng(0xf1e1d004);
  auto field = make_field<256>(p256_prime(), ReduceBackend::GenericOracle, "generic256");
  const BigInt p = from_wide(field->p);
  for (int i = 0; i < 1000; ++i) {
    const auto x = test::random_wide<512>(rng);
    CHECK(from_wide(reduce_generic_value<256>(x, field->p)) == oracle::o_mod(from_wide(x), p));
  }
  // small width
  auto f8 = make_field<8>(Wide<8>::from_u64(251), ReduceBackend::GenericOracle, "p251");
  for (unsigned v = 0; v < 65536; v += 17) {
    Wide<16> x;
    x.limb[0] = v;
    CHECK(reduce_generic_value<8>(x, f8->p).limb[0] == v % 251);
  }
}

TEST_CASE("reduction is idempotent on both backends") {
  auto rng = test::make_rng(0xf1e1d005);
  for (const auto& field : both_backends()) {
    for (int i = 0; i < 200; ++i) {
      const auto once = reduce_value<256>(test::random_wide<512>(rng), *field);
      CHECK(reduce_value<256>(once.zext<512>(), *field) == once);
    }
  }
}

TEST_CASE("modular multiplication: identities, oracle match, 129 cycles") {
  for (const auto& field : both_backends()) {
    auto rng = test::make_rng(0xf1e1d006);
    const BigInt p = from_wide(field->p);
    const auto pm1 = FieldElement<256>{field->p - Word256::from_u64(1), field};

    CycleLedger ledger;
    const auto y = test::random_element(rng, field);
    CHECK(mod_mul(fe_one(field), y, ledger) == y);
    CHECK(mod_mul(pm1, pm1, ledger).w == Word256::from_u64(1));  // (-1)^2 = 1

    for (int i = 0; i < 10000; ++i) {
      const auto a = test::random_element(rng, field);
      const auto b = test::random_element(rng, field);
      const uint64_t before = ledger.total();
      const auto z = mod_mul(a, b, ledger);
      CHECK(ledger.total() - before == 129);  // 128 multiply + 1 reduce, always
      CHECK(from_wide(z.w) == oracle::o_mulmod(from_wide(a.w), from_wide(b.w), p));
    }
    CHECK(ledger.multiply() == 10002u * 128);
    CHECK(ledger.reduce() == 10002u);
  }
}

TEST_CASE("alternate engines carry their own cycle price through mod_mul") {
  auto field = p25519_field();
  auto rng = test::make_rng(0xf1e1d007);
  const auto a = test::random_element(rng, field);
  const auto b = test::random_element(rng, field);
  CycleLedger r4, r2, sb;
  const auto z4 = mod_mul(a, b, r4, MultiplierKind::BoothRadix4);
  const auto z2 = mod_mul(a, b, r2, MultiplierKind::BoothRadix2);
  const auto zs = mod_mul(a, b, sb, MultiplierKind::Schoolbook);
  CHECK(z4 == z2);
  CHECK(z4 == zs);
  CHECK(r4.total() == 129);
  CHECK(r2.total() == 257);
  CHECK(sb.total() == 257);
}

TEST_CASE("sampled field axioms hold on both backends") {
  for (const auto& field : both_backends()) {
    auto rng = test::make_rng(0xf1e1d008);
    CycleLedger ledger;
    for (int i = 0; i < 1000; ++i) {
      const auto a = test::random_element(rng, field);
      const auto b = test::random_element(rng, field);
      const auto c = test::random_element(rng, field);
      // commutativity and associativity of multiplication
      CHECK(mod_mul(a, b, ledger) == mod_mul(b, a, ledger));
      CHECK(mod_mul(mod_mul(a, b, ledger), c, ledger) == mod_mul(a, mod_mul(b, c, ledger), ledger));
      // distributivity over the adder
      const auto lhs = mod_mul(a, mod_addsub(b, c, AluOp::Add, ledger), ledger);
      const auto rhs =
          mod_addsub(mod_mul(a, b, ledger), mod_mul(a, c, ledger), AluOp::Add, ledger);
      CHECK(lhs == rhs);
      // identities
      CHECK(mod_mul(a, fe_one(field), ledger) == a);
      CHECK(mod_addsub(a, fe_zero(field), AluOp::Add, ledger) == a);
    }
  }
}

TEST_CASE("scaled-down field: mod_mul costs m/2 + 1") {
  const auto curve = test::small_curve<8>();
  auto rng = test::make_rng(0xf1e1d009);
  const BigInt p = from_wide(curve.field->p);
  CycleLedger ledger;
  for (int i = 0; i < 500; ++i) {
    const auto a = test::random_element(rng, curve.field);
    const auto b = test::random_element(rng, curve.field);
    const uint64_t before = ledger.total();
    const auto z = mod_mul(a, b, ledger);
    CHECK(ledger.total() - before == 5);  // 8/2 + 1
    CHECK(from_wide(z.w) == oracle::o_mulmod(from_wide(a.w), from_wide(b.w), p));
  }
}
