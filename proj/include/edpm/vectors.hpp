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

// Test-vector files: one case per line of whitespace-separated hex fields,
// preceded by `# key: value` header lines. Modular-arithmetic files carry
// `# op:` (add|sub|mul) and `# field:` naming the reduction backend (plus
// `# p:` for the generic backend); point files carry `# op:` (point-add|pm)
// and `# curve:`. Lines are
//   add/sub/mul:  operand operand expected
//   point-add:    x1 y1 x2 y2 expected_x expected_y
//   pm:           k px py expected_x expected_y

#include <functional>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edpm/curves.hpp"
#include "edpm/oracle.hpp"
#include "edpm/scalar_mul.hpp"

namespace edpm {

enum class VectorOp : uint8_t { Add, Sub, Mul, PointAdd, Pm };

inline const char* vector_op_name(VectorOp op) {
  switch (op) {
    case VectorOp::Add:
      return "add";
    case VectorOp::Sub:
      return "sub";
    case VectorOp::Mul:
      return "mul";
    case VectorOp::PointAdd:
      return "point-add";
    case VectorOp::Pm:
      return "pm";
  }
  return "?";
}

struct VectorFile {
  std::optional<VectorOp> op;
  std::optional<std::string> field_tag;  // backend name, modular ops
  std::optional<std::string> p_hex;      // generic backend only
  std::optional<std::string> curve;      // point ops
  std::vector<std::vector<std::string>> rows;
};

inline size_t vector_row_width(VectorOp op) {
  switch (op) {
    case VectorOp::Add:
    case VectorOp::Sub:
    case VectorOp::Mul:
      return 3;
    case VectorOp::PointAdd:
      return 6;
    case VectorOp::Pm:
      return 5;
  }
  return 0;
}

inline VectorFile parse_vector_file(std::istream& in) {
  VectorFile vf;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      // `# key: value` headers; anything else after '#' is a comment
      std::string key, value;
      if (first == "#" && ls >> key && key.size() > 1 && key.back() == ':' && ls >> value) {
        key.pop_back();
        if (key == "op") {
          if (value == "add") {
            vf.op = VectorOp::Add;
          } else if (value == "sub") {
            vf.op = VectorOp::Sub;
          } else if (value == "mul") {
            vf.op = VectorOp::Mul;
          } else if (value == "point-add") {
            vf.op = VectorOp::PointAdd;
          } else if (value == "pm") {
            vf.op = VectorOp::Pm;
          } else {
            throw UsageError("vector file: unknown op '" + value + "'");
          }
        } else if (key == "field") {
          vf.field_tag = value;
        } else if (key == "p") {
          vf.p_hex = value;
        } else if (key == "curve") {
          vf.curve = value;
        }
        // unrecognized keys are treated as comments
      }
      continue;
    }
    std::vector<std::string> row{first};
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    vf.rows.push_back(std::move(row));
  }
  if (!vf.rows.empty()) {
    if (!vf.op) throw UsageError("vector file: data rows but no '# op:' header");
    const size_t want = vector_row_width(*vf.op);
    for (const auto& row : vf.rows) {
      if (row.size() != want) {
        throw UsageError("vector file: expected " + std::to_string(want) + " fields, got " +
                         std::to_string(row.size()));
      }
    }
    const bool modular = *vf.op == VectorOp::Add || *vf.op == VectorOp::Sub || *vf.op == VectorOp::Mul;
    if (modular && !vf.field_tag) {
      throw UsageError("vector file: modular ops need a '# field:' header");
    }
    if (!modular && !vf.curve) {
      throw UsageError("vector file: point ops need a '# curve:' header");
    }
  }
  return vf;
}

struct VerifySummary {
  size_t passed = 0;
  size_t failed = 0;
};

namespace detail {

inline FieldRef<256> field_from_headers(const VectorFile& vf) {
  const ReduceBackend backend = backend_from_name(*vf.field_tag);
  Word256 p;
  switch (backend) {
    case ReduceBackend::FastP256:
      p = p256_prime();
      break;
    case ReduceBackend::Pseudo25519:
      p = p25519_prime();
      break;
    case ReduceBackend::GenericOracle:
      if (!vf.p_hex) throw UsageError("vector file: generic backend needs a '# p:' header");
      p = Word256::from_hex(*vf.p_hex);
      break;
  }
  return make_field<256>(p, backend, *vf.field_tag);
}

}  // namespace detail

/// Runs every case through the datapath and tallies matches. Malformed hex
/// or out-of-range operands are usage errors, not case failures.
inline VerifySummary run_verify(const VectorFile& vf,
                                MultiplierKind kind = MultiplierKind::BoothRadix4) {
  VerifySummary sum;
  if (vf.rows.empty()) return sum;

  auto parse = [](const std::string& hex) {
    try {
      return Word256::from_hex(hex);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("vector file: ") + e.what());
    }
  };
  auto element = [&](const std::string& hex, const FieldRef<256>& f) {
    try {
      return make_element(parse(hex), f);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("vector file: ") + e.what());
    }
  };

  switch (*vf.op) {
    case VectorOp::Add:
    case VectorOp::Sub:
    case VectorOp::Mul: {
      const auto field = detail::field_from_headers(vf);
      for (const auto& row : vf.rows) {
        const auto a = element(row[0], field);
        const auto b = element(row[1], field);
        const auto expected = parse(row[2]);
        CycleLedger ledger;
        FieldElement<256> got = (*vf.op == VectorOp::Mul)
                                    ? mod_mul(a, b, ledger, kind)
                                    : mod_addsub(a, b, *vf.op == VectorOp::Add ? AluOp::Add : AluOp::Sub,
                                                 ledger);
        (got.w == expected) ? ++sum.passed : ++sum.failed;
      }
      break;
    }
    case VectorOp::PointAdd: {
      const auto curve = resolve_curve(*vf.curve);
      for (const auto& row : vf.rows) {
        const AffinePoint<256> P{element(row[0], curve.field), element(row[1], curve.field)};
        const AffinePoint<256> Q{element(row[2], curve.field), element(row[3], curve.field)};
        CycleLedger ledger;
        const auto R = to_affine(unified_point_op(to_projective(P), to_projective(Q), curve, ledger));
        (R.x.w == parse(row[4]) && R.y.w == parse(row[5])) ? ++sum.passed : ++sum.failed;
      }
      break;
    }
    case VectorOp::Pm: {
      const auto curve = resolve_curve(*vf.curve);
      for (const auto& row : vf.rows) {
        const Scalar<256> k{parse(row[0])};
        const AffinePoint<256> P{element(row[1], curve.field), element(row[2], curve.field)};
        const auto r = point_multiply(k, P, curve, CycleMode::PaperCycles);
        const auto R = to_affine(r.point);
        (R.x.w == parse(row[3]) && R.y.w == parse(row[4])) ? ++sum.passed : ++sum.failed;
      }
      break;
    }
  }
  return sum;
}

/// Emits an oracle-computed vector file. Point operations need the curve's
/// base point; cases are derived deterministically from the seed.
inline void generate_vectors(std::ostream& out, const CurveParams<256>& curve, VectorOp op,
                             size_t count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto p = oracle::from_wide(curve.field->p);
  auto random_mod_p = [&] {
    Word512 raw;
    for (auto& l : raw.limb) l = rng();
    return oracle::o_mod(oracle::from_wide(raw), p);
  };

  out << "# op: " << vector_op_name(op) << "\n";
  const bool modular = op == VectorOp::Add || op == VectorOp::Sub || op == VectorOp::Mul;
  if (modular) {
    out << "# field: " << backend_name(curve.field->backend) << "\n";
    if (curve.field->backend == ReduceBackend::GenericOracle) {
      out << "# p: " << curve.field->p.to_hex() << "\n";
    }
    for (size_t i = 0; i < count; ++i) {
      const auto a = random_mod_p();
      const auto b = random_mod_p();
      oracle::BigInt expected;
      switch (op) {
        case VectorOp::Add:
          expected = oracle::o_mod(a + b, p);
          break;
        case VectorOp::Sub:
          expected = oracle::o_mod(a - b, p);
          break;
        default:
          expected = oracle::o_mulmod(a, b, p);
          break;
      }
      out << oracle::to_wide<256>(a).to_hex() << " " << oracle::to_wide<256>(b).to_hex() << " "
          << oracle::to_wide<256>(expected).to_hex() << "\n";
    }
    return;
  }

  if (!curve.base_point) {
    throw UsageError("point vectors need a curve with a base point");
  }
  out << "# curve: " << curve.name << "\n";
  // a pool of small multiples of the base point, built by the oracle
  std::vector<AffinePoint<256>> pool{*curve.base_point};
  while (pool.size() < 24) {
    pool.push_back(oracle::o_affine_add(pool.back(), *curve.base_point, curve));
  }
  if (op == VectorOp::PointAdd) {
    for (size_t i = 0; i < count; ++i) {
      const auto& P = pool[rng() % pool.size()];
      // every fourth case is a forced doubling
      const auto& Q = (i % 4 == 3) ? P : pool[rng() % pool.size()];
      const auto R = oracle::o_affine_add(P, Q, curve);
      out << P.x.w.to_hex() << " " << P.y.w.to_hex() << " " << Q.x.w.to_hex() << " "
          << Q.y.w.to_hex() << " " << R.x.w.to_hex() << " " << R.y.w.to_hex() << "\n";
    }
  } else {
    for (size_t i = 0; i < count; ++i) {
      Word256 k;
      for (auto& l : k.limb) l = rng();
      const auto& P = pool[rng() % pool.size()];
      const auto R = oracle::o_scalar_mul(k, P, curve);
      out << k.to_hex() << " " << P.x.w.to_hex() << " " << P.y.w.to_hex() << " " << R.x.w.to_hex()
          << " " << R.y.w.to_hex() << "\n";
    }
  }
}

}  // namespace edpm
