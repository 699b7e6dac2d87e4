// Copyright 2026 The probmetric Authors
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

// probmetric: command-line front end.
//
// Exit codes: 0 success / suite passed, 1 failure (invalid instance, failed
// suite), 2 usage error or a refused size.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "probmetric/probmetric.hpp"

namespace pm = probmetric;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown for malformed command-line values (descriptors, seed ranges).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto as_usage(F&& parse) {
  try {
    return parse();
  } catch (const pm::InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(s);
      return {v, v};
    }
    const auto a = std::stoull(s.substr(0, dots));
    const auto b = std::stoull(s.substr(dots + 2));
    if (a > b) throw UsageError("empty seed range '" + s + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("seed range must look like a..b, got '" + s + "'");
  }
}

int cmd_validate(const std::string& file) {
  const auto bundle = pm::load_bundle(file);
  std::cout << "ok: " << bundle.space->size() << " points, "
            << bundle.laws.size() << " laws, "
            << bundle.random_variables.size() << " random variables, "
            << bundle.sequences.size() << " sequences\n";
  return 0;
}

int cmd_metric(const std::string& desc_text, const std::string& a,
               const std::string& b, const std::string& file) {
  const auto desc = as_usage([&] { return pm::parse_descriptor(desc_text); });
  const auto bundle = pm::load_bundle(file);
  const auto value = pm::eval_metric(desc, bundle.rv(a), bundle.rv(b));
  std::cout << value.str() << "\n";
  return 0;
}

int cmd_hat(const std::string& desc_text, const std::string& p,
            const std::string& q, const std::string& file, bool witness) {
  const auto desc = as_usage([&] { return pm::parse_descriptor(desc_text); });
  const auto bundle = pm::load_bundle(file);
  const auto result = pm::hat_with_witness(desc, bundle.law(p), bundle.law(q));
  std::cout << result.value.str();
  if (!result.exact) std::cout << " (upper bound)";
  std::cout << "\n";
  if (witness) std::cout << pm::coupling_to_json(result.coupling).dump(2) << "\n";
  return 0;
}

int cmd_limit(const std::string& gauge_text, const std::string& seq,
              const std::string& target, const std::string& file) {
  const auto gauge = as_usage([&] { return pm::parse_gauge(gauge_text); });
  const auto bundle = pm::load_bundle(file);
  const auto value =
      pm::limit_operator(gauge, bundle.sequence(seq), bundle.rv(target));
  std::cout << value.str() << "\n";
  return 0;
}

int cmd_suite(const std::string& name, const std::string& seeds,
              bool float_mode, const std::string& format, bool timing,
              const std::string& dump_dir) {
  const auto [first, last] = parse_seed_range(seeds);
  const auto fmt = as_usage([&] { return pm::parse_report_format(format); });
  const auto names = pm::suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw UsageError("unknown suite '" + name + "'");
  }
  pm::SuiteOptions options;
  options.float_mode = float_mode;
  const auto report = pm::run_suite(name, first, last, options);
  std::cout << pm::emit_report(report, fmt, timing);
  if (!dump_dir.empty() && !report.failures.empty()) {
    std::filesystem::create_directories(dump_dir);
    for (const auto& f : report.failures) {
      if (f.instance.empty()) continue;
      const auto path = std::filesystem::path(dump_dir) /
                        (name + "-seed" + std::to_string(f.seed) + ".json");
      std::ofstream(path) << f.instance;
    }
  }
  return report.passed() ? 0 : kExitFailure;
}

// Searches one generated instance for gauges whose reflected limit
// operator falls strictly below every version found. A positive gap is
// only a candidate: each one is written out as an instance file and listed
// by path; the full log goes to gaps-<seed>.txt.
int cmd_gap_explore(std::uint64_t seed, std::size_t budget,
                    const std::string& out_dir, const std::string& profile) {
  const auto prof = as_usage([&] { return pm::Profile::named(profile); });
  const auto bundle = pm::generate(seed, prof);
  const auto base = std::filesystem::path(out_dir);
  std::filesystem::create_directories(base);
  pm::Rng rng(seed);
  std::vector<pm::Gauge> gauges{pm::Gauge::ky_fan_family(),
                                pm::Gauge::prokhorov_family()};
  for (int k = 0; k < 3; ++k) {
    gauges.push_back(pm::Gauge::finite(pm::suites::random_basis(rng)));
  }
  std::ofstream log(base / ("gaps-" + std::to_string(seed) + ".txt"));
  const auto seq = bundle.sequence("seq");
  const auto& target = bundle.rv("xi");
  std::size_t candidates = 0;
  for (std::size_t k = 0; k < gauges.size(); ++k) {
    const auto& g = gauges[k];
    const auto gap = pm::min_limit_gap(g, seq, target, budget, pm::Rng(seed));
    log << g.str() << " lower=" << gap.lower.str()
        << " upper=" << gap.upper.str()
        << " versions=" << gap.versions_tried
        << (gap.strict_candidate ? " strict-candidate" : "") << "\n";
    if (!gap.strict_candidate) continue;
    ++candidates;
    auto instance = bundle;
    instance.note = "strict-gap candidate for " + g.str() +
                    ": lower " + gap.lower.str() + ", upper " +
                    gap.upper.str();
    const auto path = base / ("candidate-" + std::to_string(seed) + "-" +
                              std::to_string(k) + ".json");
    pm::save_bundle(instance, path.string());
    std::cout << "candidate " << path.string() << "\n";
  }
  std::cout << candidates << " candidates from " << gauges.size()
            << " gauges, log " << (base / ("gaps-" + std::to_string(seed) +
                                           ".txt")).string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probability metrics on finite metric spaces"};
  app.require_subcommand(1);

  std::string file, desc, a, b, gauge, seq, target, name, seeds = "1..10";
  std::string format = "text", dump_dir, out_dir = "gaps", profile = "default";
  bool witness = false, float_mode = false, timing = false;
  std::uint64_t seed = 1;
  std::size_t budget = 8;

  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  validate->add_option("file", file, "Instance file")->required();

  auto* metric = app.add_subcommand("metric", "Evaluate d(rv1, rv2)");
  metric->add_option("desc", desc, "Metric descriptor")->required();
  metric->add_option("rv1", a)->required();
  metric->add_option("rv2", b)->required();
  metric->add_option("-f,--file", file, "Instance file")->required();

  auto* hat = app.add_subcommand("hat", "Minimal metric between two laws");
  hat->add_option("desc", desc, "Metric descriptor")->required();
  hat->add_option("lawP", a)->required();
  hat->add_option("lawQ", b)->required();
  hat->add_option("-f,--file", file, "Instance file")->required();
  hat->add_flag("--witness", witness, "Print an optimal coupling");

  auto* limit = app.add_subcommand("limit", "Limit operator of a gauge");
  limit->add_option("gauge", gauge)->required();
  limit->add_option("seq", seq)->required();
  limit->add_option("target", target)->required();
  limit->add_option("-f,--file", file, "Instance file")->required();

  auto* reflect = app.add_subcommand("reflect", "Minimal (reflected) gauge");
  reflect->add_option("gauge", gauge)->required();

  auto* coreflect =
      app.add_subcommand("coreflect", "Generating metric of a gauge");
  coreflect->add_option("gauge", gauge)->required();

  auto* suite = app.add_subcommand("suite", "Run a property suite");
  suite->add_option("name", name, "Suite name")->required();
  suite->add_option("--seeds", seeds, "Seed range a..b");
  suite->add_flag("--float", float_mode, "Floating-point comparisons");
  suite->add_option("--format", format, "text, csv or json");
  suite->add_flag("--timing", timing, "Include wall-clock time");
  suite->add_option("--dump", dump_dir, "Write failing instances here");

  auto* gap = app.add_subcommand("gap-explore", "Search for strict gaps");
  gap->add_option("--seed", seed);
  gap->add_option("--budget", budget);
  gap->add_option("--out", out_dir);
  gap->add_option("--profile", profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*metric) return cmd_metric(desc, a, b, file);
    if (*hat) return cmd_hat(desc, a, b, file, witness);
    if (*limit) return cmd_limit(gauge, seq, target, file);
    if (*reflect) {
      std::cout << pm::reflect(as_usage([&] { return pm::parse_gauge(gauge); }))
                       .str()
                << "\n";
      return 0;
    }
    if (*coreflect) {
      std::cout
          << pm::coreflect(as_usage([&] { return pm::parse_gauge(gauge); }))
                 .str()
          << "\n";
      return 0;
    }
    if (*suite) {
      return cmd_suite(name, seeds, float_mode, format, timing, dump_dir);
    }
    if (*gap) return cmd_gap_explore(seed, budget, out_dir, profile);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pm::SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
