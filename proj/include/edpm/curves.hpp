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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "edpm/group_op.hpp"

namespace edpm {

/// Environment variable naming the directory searched for <name>.curve
/// files when a curve name is neither built in nor an existing path.
inline constexpr const char* kCurveDirEnv = "EDPM_CURVE_DIR";

/// Edwards25519: a = -1, d = -121665/121666 over p = 2^255 - 19, with the
/// standard base point.
inline CurveParams<256> ed25519_curve() {
  auto field = make_field<256>(p25519_prime(), ReduceBackend::Pseudo25519, "25519");
  const auto a = Word256::from_hex("7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffec");
  const auto d = Word256::from_hex("52036cee2b6ffe738cc740797779e89800700a4d4141d8ab75eb4dca135978a3");
  const auto bx = Word256::from_hex("216936d3cd6e53fec0a4e231fdd6dc5c692cc7609525a7b2c9562d608f25d51a");
  const auto by = Word256::from_hex("6666666666666666666666666666666666666666666666666666666666666658");
  return make_curve<256>(field, a, d, std::make_pair(bx, by), "ed25519");
}

/// A complete test curve over the NIST P-256 prime (a = 4 is a square,
/// d = 3 a non-square mod p). It exercises the fast-reduction datapath;
/// it is not a standardized curve.
inline CurveParams<256> p256e_curve() {
  auto field = make_field<256>(p256_prime(), ReduceBackend::FastP256, "p256");
  const auto a = Word256::from_u64(4);
  const auto d = Word256::from_u64(3);
  const auto bx = Word256::from_u64(2);
  const auto by = Word256::from_hex("692f62633ca5449e9875a139b6fa67b7659d1ed0f32f5714b32e88d8f8481ae5");
  return make_curve<256>(field, a, d, std::make_pair(bx, by), "p256e");
}

inline ReduceBackend backend_from_name(const std::string& name) {
  if (name == "fastp256") return ReduceBackend::FastP256;
  if (name == "pseudo25519") return ReduceBackend::Pseudo25519;
  if (name == "generic") return ReduceBackend::GenericOracle;
  throw UsageError("unknown reduction backend '" + name + "'");
}

/// Parses a curve definition: one `key value` pair per line, `#` comments.
/// Required keys: backend, p, a, d; optional: name, base_x, base_y (both or
/// neither). All values are big-endian hex except backend and name.
inline CurveParams<256> parse_curve_definition(std::istream& in, const std::string& default_name) {
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, value, extra;
    if (!(ls >> key)) continue;
    if (!(ls >> value) || (ls >> extra)) {
      throw UsageError("curve definition: expected 'key value' but got '" + line + "'");
    }
    if (!kv.emplace(key, value).second) {
      throw UsageError("curve definition: duplicate key '" + key + "'");
    }
  }
  for (const char* req : {"backend", "p", "a", "d"}) {
    if (!kv.count(req)) throw UsageError(std::string("curve definition: missing key '") + req + "'");
  }
  if (kv.count("base_x") != kv.count("base_y")) {
    throw UsageError("curve definition: base_x and base_y must be given together");
  }
  try {
    auto field = make_field<256>(Word256::from_hex(kv.at("p")), backend_from_name(kv.at("backend")),
                                 kv.count("name") ? kv.at("name") : default_name);
    std::optional<std::pair<Word256, Word256>> base;
    if (kv.count("base_x")) {
      base = std::make_pair(Word256::from_hex(kv.at("base_x")), Word256::from_hex(kv.at("base_y")));
    }
    return make_curve<256>(field, Word256::from_hex(kv.at("a")), Word256::from_hex(kv.at("d")),
                           base, kv.count("name") ? kv.at("name") : default_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("curve definition: ") + e.what());
  }
}

inline CurveParams<256> load_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open curve file '" + path.string() + "'");
  return parse_curve_definition(in, path.stem().string());
}

/// Resolves a curve argument: a built-in name, a path to a definition
/// file, or a name found as <name>.curve under $EDPM_CURVE_DIR.
inline CurveParams<256> resolve_curve(const std::string& name_or_path) {
  if (name_or_path == "ed25519") return ed25519_curve();
  if (name_or_path == "p256e") return p256e_curve();
  if (std::filesystem::exists(name_or_path)) return load_curve_file(name_or_path);
  if (const char* dir = std::getenv(kCurveDirEnv)) {
    const auto candidate = std::filesystem::path(dir) / (name_or_path + ".curve");
    if (std::filesystem::exists(candidate)) return load_curve_file(candidate);
  }
  throw UsageError("unknown curve '" + name_or_path + "' (not a built-in, file, or $" +
                   std::string(kCurveDirEnv) + " entry)");
}

}  // namespace edpm
