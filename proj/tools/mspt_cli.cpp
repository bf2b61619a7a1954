// Copyright 2026 The mspt Authors
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

// Command-line front end: list, validate and run scenarios.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mspt/runner.hpp"
#include "mspt/scenario.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDimension = 3,
  kDefective = 4,
  kSecular = 5,
  kIntegrator = 6,
  kIo = 7,
  kOther = 8,
};

struct Overrides {
  std::string scenario;
  std::optional<int> order;
  std::string levels;
  std::vector<std::string> tolerances;
};

void add_scenario_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--scenario", o.scenario, "Scenario file or bundled scenario name")->required();
  cmd->add_option("--order", o.order, "Override the expansion order");
  cmd->add_option("--levels", o.levels, "Comma-separated levels, e.g. s1,1,s2,2");
  cmd->add_option("--tolerance", o.tolerances, "Tolerance override key=value (repeatable)");
}

mspt::Scenario load(const Overrides& o) {
  mspt::Scenario sc = mspt::load_scenario(o.scenario);
  for (const auto& kv : o.tolerances) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw mspt::ParseError("--tolerance", "expected key=value, got '" + kv + "'");
    const auto value = mspt::text::parse_real(kv.substr(eq + 1));
    if (!value) throw mspt::ParseError("--tolerance", "'" + kv.substr(eq + 1) + "' is not a number");
    mspt::set_tolerance(sc.tol, kv.substr(0, eq), *value, "--tolerance");
  }
  if (o.order) {
    sc.order = *o.order;
    if (o.levels.empty()) {
      std::erase_if(sc.levels, [&](const mspt::TruncationLevel& l) { return l.n > sc.order; });
      if (sc.levels.empty() && sc.order >= 0) sc.levels = mspt::default_levels(sc.order);
    }
  }
  if (!o.levels.empty()) {
    sc.levels.clear();
    std::stringstream ss(o.levels);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) sc.levels.push_back(mspt::parse_level(item, "--levels"));
  }
  mspt::validate(sc);
  return sc;
}

int fail(int code, const std::string& what) {
  std::fprintf(stderr, "mspt: error: %s\n", what.c_str());
  return code;
}

template <class Body>
int guarded(Body body) {
  try {
    return body();
  } catch (const mspt::ParseError& e) {
    return fail(kParse, e.what());
  } catch (const mspt::DimensionMismatch& e) {
    return fail(kDimension, e.what());
  } catch (const mspt::DefectiveGenerator& e) {
    return fail(kDefective, e.what());
  } catch (const mspt::PolynomialSecularTerm& e) {
    return fail(kSecular, e.what());
  } catch (const mspt::StepSizeUnderflow& e) {
    return fail(kIntegrator, e.what());
  } catch (const mspt::NonFiniteState& e) {
    return fail(kIntegrator, e.what());
  } catch (const mspt::IoError& e) {
    return fail(kIo, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kIo, e.what());
  } catch (const std::exception& e) {
    return fail(kOther, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple-scale perturbative dynamical maps for time-local master equations"};
  app.set_version_flag("--version", std::string(MSPT_VERSION));
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Print the bundled scenarios");

  Overrides vo;
  auto* validate = app.add_subcommand("validate", "Parse and check a scenario without running it");
  add_scenario_options(validate, vo);

  Overrides ro;
  std::string out_dir = "out";
  bool no_plots = false;
  std::string cache;
  auto* run = app.add_subcommand("run", "Run a scenario and write CSV, SVG and manifest files");
  add_scenario_options(run, ro);
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_flag("--no-plots", no_plots, "Skip SVG output");
  run->add_option("--cache", cache, "Expansion cache file, reused when it matches the scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (list->parsed()) {
    for (const auto& name : mspt::list_scenarios()) {
      const auto sc = mspt::parse_scenario(mspt::bundled_scenarios().at(name), name);
      std::printf("%-22s %s\n", name.c_str(), sc.description.c_str());
    }
    return kOk;
  }

  if (validate->parsed())
    return guarded([&] {
      const auto sc = load(vo);
      std::printf("ok: %s (order %d, %zu levels, %zu grid points)\n", sc.name.c_str(), sc.order, sc.levels.size(),
                  sc.grid.values().size());
      return kOk;
    });

  return guarded([&] {
    const auto sc = load(ro);
    mspt::RunOptions opts;
    opts.out_dir = out_dir;
    opts.plots = !no_plots;
    if (!cache.empty()) opts.cache = cache;
    std::vector<std::string> files;
    const auto res = mspt::run(sc, opts, &files);
    std::printf("%s: %zu levels x %zu points -> %s\n", sc.name.c_str(), res.levels.size(), res.grid.size(),
                opts.out_dir.string().c_str());
    for (const auto& lr : res.levels)
      if (!lr.trace_distance.empty())
        std::printf("  level %-3s max trace distance %.3e\n", lr.level.label().c_str(),
                    *std::max_element(lr.trace_distance.begin(), lr.trace_distance.end()));
    return kOk;
  });
}
