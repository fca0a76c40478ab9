// Copyright 2026 The Lance Authors. All rights reserved.
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

// Desk-scale benchmark harness: runs the four engines over seeded synthetic
// layers and reports wall time together with exact multiply counts and the
// error against the direct oracle. Wall time is published, never asserted;
// the arithmetic-reduction ratio is the portable comparison.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lance/engines.hpp"
#include "lance/metrics.hpp"
#include "lance/rng.hpp"

namespace lance {

struct LayerConfig {
  std::string name;
  ConvSpec spec;
  LanceConfig cfg;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::string layer;
  std::string engine;
  int threads = 1;
  std::uint64_t wall_ns = 0;  // median of the timed repeats
  std::uint64_t multiplies = 0;
  double ratio_vs_direct = 1.0;
  bool waste = false;
  double max_abs_err = 0.0;  // against direct_conv on identical inputs
};

struct BenchReport {
  int threads = 1;
  std::vector<BenchRow> rows;
};

inline Granularity granularity_from_string(const std::string& s) {
  if (s == "tile") return Granularity::PerTile;
  if (s == "position") return Granularity::PerPosition;
  if (s == "tensor") return Granularity::PerTensor;
  throw std::invalid_argument("unknown granularity: " + s);
}

inline LayerConfig layer_from_json(const nlohmann::json& j, int ordinal) {
  LayerConfig layer;
  layer.name = j.value("name", "layer" + std::to_string(ordinal));
  for (const char* field : {"n", "c", "h", "w", "k"})
    if (!j.contains(field))
      throw std::invalid_argument("layer '" + layer.name + "' missing field " + field);
  layer.spec.n = j.at("n").get<int>();
  layer.spec.c = j.at("c").get<int>();
  layer.spec.h = j.at("h").get<int>();
  layer.spec.w = j.at("w").get<int>();
  layer.spec.k = j.at("k").get<int>();
  layer.spec.pad = j.value("pad", 1);
  layer.cfg.bits_w = j.value("bits_w", 8);
  layer.cfg.bits_i = j.value("bits_i", 8);
  layer.cfg.granularity = granularity_from_string(j.value("granularity", "position"));
  layer.seed = j.value("seed", std::uint64_t(0));
  layer.spec.validate();
  return layer;
}

// Accepts either a bare JSON array of layers or {"layers": [...]}.
inline std::vector<LayerConfig> parse_bench_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bench config is not valid JSON: ") +
                                e.what());
  }
  const nlohmann::json* layers = &doc;
  if (doc.is_object()) {
    if (!doc.contains("layers"))
      throw std::invalid_argument("bench config object lacks a 'layers' array");
    layers = &doc.at("layers");
  }
  if (!layers->is_array())
    throw std::invalid_argument("bench config must be a JSON array of layers");
  std::vector<LayerConfig> out;
  int ordinal = 0;
  for (const auto& j : *layers) out.push_back(layer_from_json(j, ordinal++));
  return out;
}

namespace bench_detail {

inline std::uint64_t median_ns(std::vector<std::uint64_t> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace bench_detail

// Runs direct, winograd, lance-faithful and lance-gemm on every layer with
// identical seeded data. The gemm engine cannot run PerTile, so a PerTile
// layer falls back to PerPosition for that row only.
inline BenchReport run_bench(const std::vector<LayerConfig>& layers, int repeats = 5) {
  if (repeats < 1) repeats = 1;
  BenchReport report;
  report.threads = max_threads();

  for (const LayerConfig& layer : layers) {
    Tensor4 x(layer.spec.n, layer.spec.h, layer.spec.w, layer.spec.c);
    FilterBank w(layer.spec.k, ConvSpec::r, ConvSpec::s, layer.spec.c);
    UniformSource src(layer.seed);
    src.fill(x.data);
    src.fill(w.data);

    const Tensor4 oracle = direct_conv(x, w, layer.spec);

    for (EngineKind engine : {EngineKind::Direct, EngineKind::WinogradFp,
                              EngineKind::LanceFaithful, EngineKind::LanceGemm}) {
      LanceConfig cfg = layer.cfg;
      cfg.mode = engine == EngineKind::LanceGemm ? LanceMode::Gemm : LanceMode::Faithful;
      if (engine == EngineKind::LanceGemm && cfg.granularity == Granularity::PerTile)
        cfg.granularity = Granularity::PerPosition;

      BenchRow row;
      row.layer = layer.name;
      row.engine = to_string(engine);
      row.threads = report.threads;

      reset_multiply_count();
      const Tensor4 y = run_engine(engine, x, w, layer.spec, cfg);
      row.multiplies = multiply_count();
      row.max_abs_err = engine == EngineKind::Direct ? 0.0 : max_abs_diff(y, oracle);
      const ArithmeticReport arep = arithmetic_report(layer.spec, engine);
      row.ratio_vs_direct = arep.ratio_vs_direct;
      row.waste = arep.waste;

      std::vector<std::uint64_t> samples;
      samples.reserve(std::size_t(repeats));
      for (int rep = 0; rep < repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        run_engine(engine, x, w, layer.spec, cfg);
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::uint64_t(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                .count()));
      }
      row.wall_ns = bench_detail::median_ns(std::move(samples));
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string bench_csv(const BenchReport& report) {
  std::string out =
      "layer,engine,threads,wall_ns,multiplies,ratio_vs_direct,waste,max_abs_err\n";
  for (const BenchRow& row : report.rows) {
    out += row.layer + ',' + row.engine + ',' + std::to_string(row.threads) + ',' +
           std::to_string(row.wall_ns) + ',' + std::to_string(row.multiplies) + ',' +
           format_double(row.ratio_vs_direct) + ',' + (row.waste ? "1" : "0") + ',' +
           format_double(row.max_abs_err) + '\n';
  }
  return out;
}

inline nlohmann::json bench_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"layer", row.layer},
                    {"engine", row.engine},
                    {"threads", row.threads},
                    {"wall_ns", row.wall_ns},
                    {"multiplies", row.multiplies},
                    {"ratio_vs_direct", row.ratio_vs_direct},
                    {"waste", row.waste},
                    {"max_abs_err", row.max_abs_err}});
  }
  return {{"threads", report.threads}, {"rows", rows}};
}

}  // namespace lance
