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
using Engine = BoothEngine<256>;
using oracle::BigInt;
using oracle::from_wide;

namespace {

/// Signed two's-complement reading of a 256-bit word.
BigInt signed_value(const Word256& w) {
  BigInt v = from_wide(w);
  if (w.bit(255)) v -= BigInt(1) << 256;
  return v;
}

}  // namespace

TEST_CASE("engine walks Idle -> Busy -> Done in exactly 128 steps") {
  auto rng = test::make_rng(0xb007a001);
  Engine e;
  CHECK(e.state() == Engine::State::Idle);
  CHECK_THROWS_AS(e.step(), ContractViolation);

  e.start(test::random_wide<256>(rng), test::random_wide<256>(rng));
  unsigned steps = 0;
  while (e.state() == Engine::State::Busy) {
    e.step();
    ++steps;
  }
  CHECK(steps == 128);
  CHECK(e.step_count() == 128);
  CHECK(e.state() == Engine::State::Done);
  CHECK(e.cycles_charged() == 128);
  CHECK_THROWS_AS(e.step(), ContractViolation);
}

TEST_CASE("zero multiplier never touches the accumulator") {
  auto rng = test::make_rng(0xb007a002);
  Engine e;
  e.start(Word256::zero(), test::random_wide<256>(rng));
  while (e.state() == Engine::State::Busy) {
    e.step();
    CHECK(e.accumulator().is_zero());
  }
  CHECK(e.product().is_zero());
}

TEST_CASE("multiplier 3 recodes as -B then +4B") {
  const auto three = Word256::from_u64(3);
  CHECK(Engine::recode_digit(three, 0) == -1);
  CHECK(Engine::recode_digit(three, 1) == 1);
  for (unsigned i = 2; i < 128; ++i) CHECK(Engine::recode_digit(three, i) == 0);

  auto rng = test::make_rng(0xb007a003);
  const auto b = test::random_wide<256>(rng);
  CHECK(from_wide(booth_product(three, b)) == 3 * from_wide(b));
}

TEST_CASE("recoded digits match a scalar Booth reference, stepwise") {
  auto rng = test::make_rng(0xb007a004);
  const BigInt k2e512 = BigInt(1) << 512;
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = test::random_wide<256>(rng);
    const auto b = test::random_wide<256>(rng);
    const BigInt bb = from_wide(b);

    // reference recoding: digit i is m[2i-1] + m[2i] - 2*m[2i+1]
    BigInt digit_sum = 0;
    Engine e;
    e.start(m, b);
    for (unsigned i = 0; i < 128; ++i) {
      const int d = Engine::recode_digit(m, i);
      CHECK((d >= -2 && d <= 2));
      digit_sum += BigInt(d) << (2 * i);
      e.step();
      // the accumulator tracks the partial signed sum (plus the unsigned
      // fix-up once the final step has run)
      BigInt partial = digit_sum * bb;
      if (i == 127 && m.bit(255)) partial += bb << 256;
      CHECK(from_wide(e.accumulator()) == oracle::o_mod(partial, k2e512));
    }
    CHECK(digit_sum == signed_value(m));  // the digits recode the multiplier
    CHECK(from_wide(e.product()) == from_wide(m) * bb);
  }
}

TEST_CASE("booth_multiply identities and cycle charge") {
  auto rng = test::make_rng(0xb007a005);
  const auto r = test::random_wide<256>(rng);
  CycleLedger ledger;
  CHECK(booth_multiply(Word256::zero(), r, ledger).is_zero());
  CHECK(booth_multiply(Word256::from_u64(1), r, ledger) == r.zext<512>());
  CHECK(ledger.multiply() == 256);  // 128 per call
  CHECK(ledger.total() == 256);
}

TEST_CASE("products agree with the oracle on 10,000 random pairs") {
  auto rng = test::make_rng(0xb007a006);
  for (int i = 0; i < 10000; ++i) {
    const auto m = test::random_wide<256>(rng);
    const auto r = test::random_wide<256>(rng);
    CHECK(from_wide(booth_product(m, r)) == from_wide(m) * from_wide(r));
  }
}

TEST_CASE("radix-2 and schoolbook alternates") {
  auto rng = test::make_rng(0xb007a007);
  const auto r = test::random_wide<256>(rng);
  CycleLedger ledger;
  CHECK(booth_radix2_multiply(Word256::zero(), r, ledger).is_zero());
  CHECK(schoolbook_multiply(Word256::from_u64(1), r, ledger) == r.zext<512>());
  CHECK(ledger.multiply() == 512);  // 256 cycles per call, one bit per step

  for (int i = 0; i < 1000; ++i) {
    const auto a = test::random_wide<256>(rng);
    const auto b = test::random_wide<256>(rng);
    const auto booth = booth_product(a, b);
    CHECK(booth == booth_radix2_product(a, b));
    CHECK(booth == schoolbook_product(a, b));
    CHECK(from_wide(booth) == from_wide(a) * from_wide(b));
  }
}

TEST_CASE("8-bit engine is exhaustively exact") {
  for (unsigned m = 0; m < 256; ++m) {
    for (unsigned r = 0; r < 256; ++r) {
      const auto p = booth_product(Wide<8>::from_u64(m), Wide<8>::from_u64(r));
      REQUIRE(p.limb[0] == uint64_t(m) * r);
    }
  }
  CHECK(BoothEngine<8>::kSteps == 4);
}
