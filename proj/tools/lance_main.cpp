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

// lance CLI: offline verification, convolution over tensor files, and the
// benchmark report generator.
//
// Exit codes: 0 ok, 1 verification/assertion failure, 2 usage or I/O error.

#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lance/bench.hpp"
#include "lance/engines.hpp"
#include "lance/parallel.hpp"
#include "lance/tensor_io.hpp"
#include "lance/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t fnv1a64(const lance::Tensor4& t) {
  std::uint64_t hash = 1469598103934665603ull;
  for (float v : t.data) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      hash ^= (bits >> (8 * i)) & 0xff;
      hash *= 1099511628211ull;
    }
  }
  return hash;
}

lance::EngineKind engine_from_string(const std::string& name) {
  if (name == "direct") return lance::EngineKind::Direct;
  if (name == "quantized-direct") return lance::EngineKind::QuantizedDirect;
  if (name == "winograd") return lance::EngineKind::WinogradFp;
  if (name == "lance-faithful") return lance::EngineKind::LanceFaithful;
  if (name == "lance-gemm") return lance::EngineKind::LanceGemm;
  throw std::invalid_argument("unknown engine: " + name);
}

int cmd_verify() {
  return lance::run_verify(std::cout) ? kExitOk : kExitVerifyFailure;
}

int cmd_run(const std::string& input_path, const std::string& filter_path,
            const std::string& engine_name, int bits_w, int bits_i,
            const std::string& granularity, int pad, const std::string& out_path) {
  const lance::Tensor4 x = lance::read_tensor_file(input_path);

  // Filters travel in the same container format with dims read as K,R,S,C.
  const lance::Tensor4 ft = lance::read_tensor_file(filter_path);
  const lance::FilterBank w(ft.n, ft.h, ft.w, ft.c, ft.data);

  lance::ConvSpec spec;
  spec.n = x.n;
  spec.c = x.c;
  spec.h = x.h;
  spec.w = x.w;
  spec.k = w.k;
  spec.pad = pad;

  lance::LanceConfig cfg;
  cfg.bits_w = bits_w;
  cfg.bits_i = bits_i;
  cfg.granularity = lance::granularity_from_string(granularity);
  const lance::EngineKind engine = engine_from_string(engine_name);
  cfg.mode = engine == lance::EngineKind::LanceGemm ? lance::LanceMode::Gemm
                                                    : lance::LanceMode::Faithful;

  const lance::Tensor4 y = lance::run_engine(engine, x, w, spec, cfg);
  lance::write_tensor_file(y, out_path);
  std::cout << "output dims " << y.n << ' ' << y.h << ' ' << y.w << ' ' << y.c
            << "  checksum " << std::hex << fnv1a64(y) << std::dec << '\n';
  return kExitOk;
}

int cmd_bench(const std::string& config_path, const std::string& out_path,
              int repeats) {
  std::ifstream in(config_path);
  if (!in) throw lance::FormatError("cannot open bench config: " + config_path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  const std::vector<lance::LayerConfig> layers =
      lance::parse_bench_config(buffer.str());
  const lance::BenchReport report = lance::run_bench(layers, repeats);

  // Two artifacts per run: <base>.csv and <base>.json.
  std::string base = out_path;
  for (const char* ext : {".csv", ".json"}) {
    const std::string suffix(ext);
    if (base.size() > suffix.size() &&
        base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0)
      base.resize(base.size() - suffix.size());
  }
  const std::string csv_path = base + ".csv";
  const std::string json_path = base + ".json";

  std::ofstream csv(csv_path);
  if (!csv) throw lance::FormatError("cannot write: " + csv_path);
  csv << lance::bench_csv(report);
  std::ofstream json(json_path);
  if (!json) throw lance::FormatError("cannot write: " + json_path);
  json << lance::bench_json(report).dump(2) << '\n';

  std::cout << "bench: " << report.rows.size() << " rows (" << layers.size()
            << " layers x 4 engines), threads=" << report.threads << '\n'
            << "wrote " << csv_path << " and " << json_path << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  lance::set_max_threads(lance::threads_from_env());

  CLI::App app{"lance: quantized Winograd convolution engines"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the full property suite");
  (void)verify;

  auto* run = app.add_subcommand("run", "convolve a tensor file with a filter file");
  std::string input_path, filter_path, out_path;
  std::string engine_name = "direct";
  std::string granularity = "position";
  int bits_w = 8, bits_i = 8, pad = 0;
  run->add_option("--input", input_path, "input tensor file (LTEN)")->required();
  run->add_option("--filters", filter_path, "filter tensor file (LTEN, dims K,R,S,C)")
      ->required();
  run->add_option("--engine", engine_name,
                  "direct|quantized-direct|winograd|lance-faithful|lance-gemm")
      ->check(CLI::IsMember({"direct", "quantized-direct", "winograd",
                             "lance-faithful", "lance-gemm"}));
  run->add_option("--bits-w", bits_w, "weight bit-width (2..8, or 32 = no quantization)");
  run->add_option("--bits-i", bits_i, "input bit-width (2..8, or 32 = no quantization)");
  run->add_option("--granularity", granularity, "tile|position|tensor")
      ->check(CLI::IsMember({"tile", "position", "tensor"}));
  run->add_option("--pad", pad, "symmetric zero padding")->check(CLI::Range(0, 1));
  run->add_option("--out", out_path, "output tensor file")->required();

  auto* bench = app.add_subcommand("bench", "run the engine comparison report");
  std::string config_path, bench_out = "bench";
  int repeats = 5;
  bench->add_option("--config", config_path, "JSON layer list")->required();
  bench->add_option("--out", bench_out, "report base path (.csv/.json appended)");
  bench->add_option("--repeats", repeats, "timed repeats per engine (median reported)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify();
    if (app.got_subcommand(run))
      return cmd_run(input_path, filter_path, engine_name, bits_w, bits_i,
                     granularity, pad, out_path);
    return cmd_bench(config_path, bench_out, repeats);
  } catch (const lance::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
}
