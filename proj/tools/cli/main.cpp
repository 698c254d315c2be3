// Copyright 2026 The spinotto Authors
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

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include "api.hpp"
#include "commands.hpp"
#include "config.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out;
  int workers = 0;
  bool oracle = false;
  bool svg = false;
  std::vector<std::string> sets;
  std::string figure;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "INI configuration file")->check(CLI::ExistingFile);
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--oracle", f.oracle, "add oracle_W and oracle_eta columns");
  sub->add_flag("--svg", f.svg, "also write SVG line plots (figure)");
  sub->add_option("--set", f.sets, "override a key: section.key=value")->take_all();
}

std::string preset_list() {
  std::string out;
  for (const auto& n : cli::figure_names()) out += (out.empty() ? "" : ", ") + n;
  return out;
}

int run(const std::string& command, const Flags& flags) {
  static const std::map<std::string, std::set<std::string>> sections = {
      {"cycle", {"chain", "cycle", "output", "run"}},
      {"sweep", {"chain", "cycle", "sweep", "output", "run"}},
      {"figure", {"chain", "cycle", "output", "run"}},
      {"gc", {"chain", "gc", "output", "run"}},
      {"spectrum", {"chain", "spectrum", "output", "run"}},
      {"entanglement", {"chain", "entanglement", "output", "run"}},
      {"cd-coeffs", {"chain", "cd", "output", "run"}}};

  if (command == "figure") {
    const auto& names = cli::figure_names();
    if (std::find(names.begin(), names.end(), flags.figure) == names.end())
      throw cli::CliError("unknown figure preset '" + flags.figure + "'; presets: " + preset_list(),
                          cli::kUsage);
  }

  std::vector<cli::Entry> entries;
  if (!flags.config.empty()) entries = cli::read_config_file(flags.config);
  for (const auto& s : flags.sets) entries.push_back(cli::parse_override(s));

  cli::RunConfig base = command == "figure" ? cli::figure_defaults(flags.figure) : cli::RunConfig{};
  base.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  cli::RunConfig cfg = cli::apply_entries(base, entries, sections.at(command), command);
  if (!flags.out.empty()) cfg.out_dir = flags.out;
  if (flags.workers > 0) cfg.workers = flags.workers;
  if (flags.oracle) cfg.oracle = true;
  if (flags.svg) cfg.svg = true;
  if (command != "sweep" && !cfg.axes.empty())
    throw cli::CliError("sweep axes are only valid for 'sweep'", cli::kUsage);

  if (command == "cycle") return cli::cmd_cycle(cfg);
  if (command == "sweep") return cli::cmd_sweep(cfg);
  if (command == "gc") return cli::cmd_gc(cfg);
  if (command == "spectrum") return cli::cmd_spectrum(cfg);
  if (command == "entanglement") return cli::cmd_entanglement(cfg);
  if (command == "cd-coeffs") return cli::cmd_cd_coeffs(cfg);
  const bool p_given = std::any_of(entries.begin(), entries.end(), [](const cli::Entry& e) {
    return e.section == "chain" && e.key == "p";
  });
  return cli::cmd_figure(flags.figure, cfg, p_given);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interacting spin-chain quantum Otto engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", spinotto_version());
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"cycle", "run one Otto cycle and print its row"},
      {"sweep", "run a one- or two-axis grid of cycles"},
      {"figure", "write the CSV curves of a figure preset"},
      {"gc", "critical coupling for each power-law exponent"},
      {"spectrum", "chain energy levels"},
      {"entanglement", "W-state entropy, PPT witness and partial-transpose checks"},
      {"cd-coeffs", "counterdiabatic coefficients C_mn"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, flags);
    if (name == "figure")
      sub->add_option("name", flags.figure, "preset: " + preset_list())->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), flags);
  } catch (const cli::CliError& e) {
    std::cerr << "spinotto: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception& e) {
    std::cerr << "spinotto: " << e.what() << '\n';
    return cli::kNumerical;
  }
}
