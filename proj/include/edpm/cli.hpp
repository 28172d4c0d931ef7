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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edpm/curves.hpp"
#include "edpm/scalar_mul.hpp"
#include "edpm/vectors.hpp"

namespace edpm::cli {

inline constexpr double kDefaultClockMhz = 117.809;

/// Exit codes: 0 success, 1 verification failure or bad data (off-curve
/// point, degenerate result), 2 usage error (bad flags, malformed hex,
/// unreadable or ill-formed file).
enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

enum class OutputFormat : uint8_t { Text, Json };

struct RunConfig {
  std::string curve = "ed25519";
  std::string scalar_hex;
  std::string point = "base";
  std::string point2;
  double clock_mhz = kDefaultClockMhz;
  CycleMode cycle_mode = CycleMode::PaperCycles;
  MultiplierKind multiplier = MultiplierKind::BoothRadix4;
  OutputFormat output = OutputFormat::Text;
  // verify / gen-vectors
  std::string vector_file;
  std::string gen_op = "mul";
  size_t count = 32;
  uint64_t seed = 1;
  std::string out_path = "-";
};

namespace detail {

inline std::string format_quantity(double value, const char* unit) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g %s", value, unit);
  return buf;
}

inline std::string format_time(double seconds) {
  if (seconds == 0.0) return "0 s";
  if (seconds < 1e-6) return format_quantity(seconds * 1e9, "ns");
  if (seconds < 1e-3) return format_quantity(seconds * 1e6, "us");
  if (seconds < 1.0) return format_quantity(seconds * 1e3, "ms");
  return format_quantity(seconds, "s");
}

inline std::string format_rate(double bps) {
  if (bps >= 1e6) return format_quantity(bps / 1e6, "Mbps");
  if (bps >= 1e3) return format_quantity(bps / 1e3, "kbps");
  return format_quantity(bps, "bps");
}

inline Word256 parse_hex_arg(const std::string& hex, const char* what) {
  try {
    return Word256::from_hex(hex);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

inline FieldElement<256> parse_element_arg(const std::string& hex, const FieldRef<256>& field,
                                           const char* what) {
  try {
    return make_element(parse_hex_arg(hex, what), field);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

/// "base" or "<x-hex>,<y-hex>". Hex shape problems are usage errors; curve
/// membership is checked later by the operation itself.
inline AffinePoint<256> parse_point_arg(const std::string& spec, const CurveParams<256>& curve,
                                        const char* what) {
  if (spec == "base") {
    if (!curve.base_point) {
      throw UsageError("curve '" + curve.name + "' has no base point; give an explicit point");
    }
    return *curve.base_point;
  }
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw UsageError(std::string(what) + ": expected 'base' or '<x-hex>,<y-hex>'");
  }
  return AffinePoint<256>{parse_element_arg(spec.substr(0, comma), curve.field, what),
                          parse_element_arg(spec.substr(comma + 1), curve.field, what)};
}

inline void add_json_report(nlohmann::ordered_json& j, const LatencyReport& rep) {
  j["clock_mhz"] = rep.clock_mhz;
  j["cycles"] = rep.cycles;
  j["time_ms"] = rep.time_seconds * 1e3;
  if (rep.throughput_bps) {
    j["throughput_kbps"] = *rep.throughput_bps / 1e3;
  } else {
    j["throughput_kbps"] = nullptr;
  }
}

inline void print_text_report(std::ostream& out, const LatencyReport& rep) {
  out << "cycles:      " << rep.cycles << "\n";
  out << "time:        " << format_time(rep.time_seconds) << " (at " << rep.clock_mhz << " MHz)\n";
  if (rep.throughput_bps) {
    out << "throughput:  " << format_rate(*rep.throughput_bps) << "\n";
  } else {
    out << "throughput:  n/a (no cycles elapsed)\n";
  }
}

inline std::string multiplier_name(MultiplierKind k) {
  switch (k) {
    case MultiplierKind::BoothRadix4:
      return "radix4";
    case MultiplierKind::BoothRadix2:
      return "radix2";
    case MultiplierKind::Schoolbook:
      return "schoolbook";
  }
  return "?";
}

}  // namespace detail

inline int cmd_pm(const RunConfig& cfg, std::ostream& out) {
  const auto curve = resolve_curve(cfg.curve);
  const Scalar<256> k{detail::parse_hex_arg(cfg.scalar_hex, "scalar")};
  const auto P = detail::parse_point_arg(cfg.point, curve, "point");

  const auto result = point_multiply(k, P, curve, cfg.cycle_mode);
  const auto rep = report(result, cfg.clock_mhz);
  const auto affine = to_affine(result.point);
  const char* mode = cfg.cycle_mode == CycleMode::PaperCycles ? "paper" : "exact";

  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = "pm";
    j["curve"] = curve.name;
    j["scalar_hex"] = k.value.to_hex();
    j["cycle_mode"] = mode;
    j["zero_scalar"] = result.zero_scalar;
    detail::add_json_report(j, rep);
    j["projective"] = {{"x_hex", result.point.X.w.to_hex()},
                       {"y_hex", result.point.Y.w.to_hex()},
                       {"z_hex", result.point.Z.w.to_hex()}};
    j["affine"] = {{"x_hex", affine.x.w.to_hex()}, {"y_hex", affine.y.w.to_hex()}};
    out << j.dump(2) << "\n";
  } else {
    out << "curve:       " << curve.name << "\n";
    out << "scalar:      " << k.value.to_hex() << "\n";
    out << "cycle mode:  " << mode << "\n";
    if (result.zero_scalar) out << "zero scalar: result is the identity, no group-op cycles\n";
    out << "projective:  X = " << result.point.X.w.to_hex() << "\n";
    out << "             Y = " << result.point.Y.w.to_hex() << "\n";
    out << "             Z = " << result.point.Z.w.to_hex() << "\n";
    out << "affine:      x = " << affine.x.w.to_hex() << "\n";
    out << "             y = " << affine.y.w.to_hex() << "\n";
    detail::print_text_report(out, rep);
  }
  return kOk;
}

inline int cmd_point_op(const RunConfig& cfg, std::ostream& out) {
  const auto curve = resolve_curve(cfg.curve);
  const auto P = detail::parse_point_arg(cfg.point, curve, "point");
  const auto Q = cfg.point2.empty() ? P : detail::parse_point_arg(cfg.point2, curve, "point2");
  if (!on_curve(P, curve) || !on_curve(Q, curve)) {
    throw std::invalid_argument("point is not on the curve");
  }

  CycleLedger ledger;
  const auto R = unified_point_op(to_projective(P), to_projective(Q), curve, ledger);
  const auto rep = latency_report(ledger.total(), 256, cfg.clock_mhz);
  const auto affine = to_affine(R);

  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = "point-op";
    j["curve"] = curve.name;
    j["p"] = {{"x_hex", P.x.w.to_hex()}, {"y_hex", P.y.w.to_hex()}};
    j["q"] = {{"x_hex", Q.x.w.to_hex()}, {"y_hex", Q.y.w.to_hex()}};
    detail::add_json_report(j, rep);
    j["projective"] = {{"x_hex", R.X.w.to_hex()}, {"y_hex", R.Y.w.to_hex()}, {"z_hex", R.Z.w.to_hex()}};
    j["affine"] = {{"x_hex", affine.x.w.to_hex()}, {"y_hex", affine.y.w.to_hex()}};
    out << j.dump(2) << "\n";
  } else {
    out << "curve:       " << curve.name << "\n";
    out << "P:           x = " << P.x.w.to_hex() << "\n";
    out << "             y = " << P.y.w.to_hex() << "\n";
    out << "Q:           x = " << Q.x.w.to_hex() << "\n";
    out << "             y = " << Q.y.w.to_hex() << "\n";
    out << "projective:  X = " << R.X.w.to_hex() << "\n";
    out << "             Y = " << R.Y.w.to_hex() << "\n";
    out << "             Z = " << R.Z.w.to_hex() << "\n";
    out << "affine:      x = " << affine.x.w.to_hex() << "\n";
    out << "             y = " << affine.y.w.to_hex() << "\n";
    detail::print_text_report(out, rep);
  }
  return kOk;
}

inline int cmd_mod_mul(const RunConfig& cfg, const std::string& x_hex, const std::string& y_hex,
                       std::ostream& out) {
  const auto curve = resolve_curve(cfg.curve);
  const auto x = detail::parse_element_arg(x_hex, curve.field, "x");
  const auto y = detail::parse_element_arg(y_hex, curve.field, "y");

  CycleLedger ledger;
  const auto z = mod_mul(x, y, ledger, cfg.multiplier);
  const auto rep = latency_report(ledger.total(), 256, cfg.clock_mhz);

  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = "mod-mul";
    j["field"] = backend_name(curve.field->backend);
    j["multiplier"] = detail::multiplier_name(cfg.multiplier);
    j["x_hex"] = x.w.to_hex();
    j["y_hex"] = y.w.to_hex();
    j["product_hex"] = z.w.to_hex();
    detail::add_json_report(j, rep);
    out << j.dump(2) << "\n";
  } else {
    out << "field:       " << backend_name(curve.field->backend) << "\n";
    out << "multiplier:  " << detail::multiplier_name(cfg.multiplier) << "\n";
    out << "x:           " << x.w.to_hex() << "\n";
    out << "y:           " << y.w.to_hex() << "\n";
    out << "product:     " << z.w.to_hex() << "\n";
    detail::print_text_report(out, rep);
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.vector_file);
  if (!in) throw UsageError("cannot open vector file '" + cfg.vector_file + "'");
  const auto vf = parse_vector_file(in);
  const auto sum = run_verify(vf, cfg.multiplier);
  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["passed"] = sum.passed;
    j["failed"] = sum.failed;
    out << j.dump(2) << "\n";
  } else {
    out << sum.passed << " passed, " << sum.failed << " failed\n";
  }
  return sum.failed == 0 ? kOk : kFailure;
}

/// The three-row summary of the model: modular multiplication, unified
/// point operation and full point multiplication, with time and throughput
/// derived from the configured clock. The cycle columns come from actually
/// running the datapath, not from pasted constants.
inline int cmd_table2(const RunConfig& cfg, std::ostream& out) {
  const auto curve = resolve_curve(cfg.curve);
  if (!curve.base_point) throw UsageError("table2 needs a curve with a base point");
  const auto base = *curve.base_point;

  CycleLedger mul_ledger;
  (void)mod_mul(base.x, base.y, mul_ledger);
  CycleLedger op_ledger;
  (void)unified_point_op(to_projective(base), to_projective(base), curve, op_ledger);
  const Scalar<256> demo{Word256::from_u64(0xC0FFEE)};  // cycles are scalar-independent
  const auto pm = point_multiply(demo, base, curve, CycleMode::PaperCycles);

  struct Row {
    const char* operation;
    uint64_t cycles;
  };
  const Row rows[] = {{"modular multiplication", mul_ledger.total()},
                      {"point operation", op_ledger.total()},
                      {"point multiplication", pm.ledger.total()}};

  const bool defaults_active = cfg.clock_mhz == kDefaultClockMhz;
  const char* note =
      "modular-multiplication time is derived from its cycle count at the configured clock; "
      "quoted timings based on a 15.832 ns period are inconsistent with 117.809 MHz and are "
      "not reproduced";

  if (cfg.output == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["command"] = "table2";
    j["curve"] = curve.name;
    j["clock_mhz"] = cfg.clock_mhz;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      const auto rep = latency_report(row.cycles, 256, cfg.clock_mhz);
      nlohmann::ordered_json r;
      r["operation"] = row.operation;
      detail::add_json_report(r, rep);
      r.erase("clock_mhz");
      j["rows"].push_back(r);
    }
    if (defaults_active) j["paper_period_note"] = note;
    out << j.dump(2) << "\n";
  } else {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-24s %8s   %-12s %-12s", "operation", "cycles", "time",
                  "throughput");
    out << buf << "\n";
    for (const auto& row : rows) {
      const auto rep = latency_report(row.cycles, 256, cfg.clock_mhz);
      std::snprintf(buf, sizeof(buf), "%-24s %8llu   %-12s %-12s", row.operation,
                    static_cast<unsigned long long>(rep.cycles),
                    detail::format_time(rep.time_seconds).c_str(),
                    detail::format_rate(*rep.throughput_bps).c_str());
      out << buf << "\n";
    }
    out << "(at " << cfg.clock_mhz << " MHz)\n";
    if (defaults_active) out << "paper_period_note: " << note << "\n";
  }
  return kOk;
}

inline int cmd_gen_vectors(const RunConfig& cfg, std::ostream& out) {
  static const std::map<std::string, VectorOp> ops = {{"add", VectorOp::Add},
                                                      {"sub", VectorOp::Sub},
                                                      {"mul", VectorOp::Mul},
                                                      {"point-add", VectorOp::PointAdd},
                                                      {"pm", VectorOp::Pm}};
  const auto it = ops.find(cfg.gen_op);
  if (it == ops.end()) throw UsageError("unknown vector op '" + cfg.gen_op + "'");
  const auto curve = resolve_curve(cfg.curve);
  if (cfg.out_path == "-") {
    generate_vectors(out, curve, it->second, cfg.count, cfg.seed);
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    generate_vectors(file, curve, it->second, cfg.count, cfg.seed);
  }
  return kOk;
}

/// Builds the CLI and dispatches one invocation. Streams are injectable so
/// the binary and the tests share the same entry point.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-accurate model of a twisted Edwards curve point-multiplication accelerator"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string x_hex, y_hex;

  const std::map<std::string, CycleMode> mode_map{{"paper", CycleMode::PaperCycles},
                                                  {"exact", CycleMode::ExactCycles}};
  const std::map<std::string, MultiplierKind> mult_map{{"radix4", MultiplierKind::BoothRadix4},
                                                       {"radix2", MultiplierKind::BoothRadix2},
                                                       {"schoolbook", MultiplierKind::Schoolbook}};
  const std::map<std::string, OutputFormat> output_map{{"text", OutputFormat::Text},
                                                       {"json", OutputFormat::Json}};

  auto add_common = [&](CLI::App* sub, bool with_clock = true) {
    sub->add_option("--curve", cfg.curve, "built-in curve name, file path, or $EDPM_CURVE_DIR entry")
        ->capture_default_str();
    if (with_clock) {
      sub->add_option("--clock-mhz", cfg.clock_mhz, "clock frequency in MHz")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
    }
    sub->add_option("--output", cfg.output, "report format")
        ->transform(CLI::CheckedTransformer(output_map, CLI::ignore_case))
        ->default_str("text");
  };

  auto* pm = app.add_subcommand("pm", "point multiplication k*P with cycle report");
  pm->add_option("--scalar", cfg.scalar_hex, "scalar k, big-endian hex")->required();
  pm->add_option("--point", cfg.point, "'base' or '<x-hex>,<y-hex>'")->capture_default_str();
  pm->add_option("--cycle-mode", cfg.cycle_mode, "iteration schedule")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case))
      ->default_str("paper");
  add_common(pm);

  auto* pop = app.add_subcommand("point-op", "one unified point operation P + Q");
  pop->add_option("--point", cfg.point, "'base' or '<x-hex>,<y-hex>'")->capture_default_str();
  pop->add_option("--point2", cfg.point2, "second operand; defaults to --point (doubling)");
  add_common(pop);

  auto* mm = app.add_subcommand("mod-mul", "modular multiplication over the curve's field");
  mm->add_option("-x,--x", x_hex, "first operand, hex")->required();
  mm->add_option("-y,--y", y_hex, "second operand, hex")->required();
  mm->add_option("--multiplier", cfg.multiplier, "serial multiplier engine")
      ->transform(CLI::CheckedTransformer(mult_map, CLI::ignore_case))
      ->default_str("radix4");
  add_common(mm);

  auto* ver = app.add_subcommand("verify", "run a test-vector file through the datapath");
  ver->add_option("file", cfg.vector_file, "vector file")->required();
  ver->add_option("--output", cfg.output, "report format")
      ->transform(CLI::CheckedTransformer(output_map, CLI::ignore_case))
      ->default_str("text");

  auto* tbl = app.add_subcommand("table2", "cycle/time/throughput summary of the three units");
  add_common(tbl);

  auto* gen = app.add_subcommand("gen-vectors", "emit an oracle-computed test-vector file");
  gen->add_option("--op", cfg.gen_op, "add | sub | mul | point-add | pm")->capture_default_str();
  gen->add_option("--count", cfg.count, "number of cases")->capture_default_str();
  gen->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", cfg.out_path, "output path, '-' for stdout")->capture_default_str();
  add_common(gen, /*with_clock=*/false);

  // CLI11 wants mutable argc/argv
  std::vector<const char*> argv;
  argv.push_back("edpm");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (pm->parsed()) return cmd_pm(cfg, out);
    if (pop->parsed()) return cmd_point_op(cfg, out);
    if (mm->parsed()) return cmd_mod_mul(cfg, x_hex, y_hex, out);
    if (ver->parsed()) return cmd_verify(cfg, out);
    if (tbl->parsed()) return cmd_table2(cfg, out);
    if (gen->parsed()) return cmd_gen_vectors(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace edpm::cli
