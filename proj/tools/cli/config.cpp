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

#include "config.hpp"

#include <algorithm>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "api.hpp"

namespace cli {

namespace {

[[noreturn]] void config_error(const std::string& where, const std::string& msg) {
  throw CliError("config error at " + where + ": " + msg, kUsage);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

double to_double(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size() || !std::isfinite(v))
    config_error(where, "expected a number, got '" + t + "'");
  return v;
}

int to_int(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  int v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    config_error(where, "expected an integer, got '" + t + "'");
  return v;
}

bool to_bool(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  config_error(where, "expected true or false, got '" + t + "'");
}

std::vector<double> to_list(const std::string& text, const std::string& where) {
  std::vector<double> out;
  for (const auto& t : tokens(text)) out.push_back(to_double(t, where));
  if (out.empty()) config_error(where, "expected at least one value");
  return out;
}

template <class E>
E to_enum(const std::string& text, const std::string& where,
          const std::vector<std::pair<std::string, E>>& names) {
  const std::string t = trim(text);
  std::string choices;
  for (const auto& [name, value] : names) {
    if (t == name) return value;
    choices += (choices.empty() ? "" : ", ") + name;
  }
  config_error(where, "unknown value '" + t + "' (choose from " + choices + ")");
}

const std::set<std::string> kAxisNames = {"g", "g_over_gc", "r", "beta_h", "beta_c", "tau", "n", "p"};

void apply(RunConfig& c, const Entry& e) {
  const std::string where = e.origin + " [" + e.section + "] " + e.key;
  const std::string& v = e.value;
  const std::string& s = e.section;
  const std::string& k = e.key;
  if (s == "chain") {
    if (k == "n") return void(c.n = to_int(v, where));
    if (k == "p") return void(c.p = to_double(v, where));
    if (k == "g") return void(c.g = to_double(v, where));
    if (k == "g_over_gc") return void(c.g_over_gc = to_double(v, where));
    if (k == "omega0") return void(c.omega0 = to_double(v, where));
    if (k == "boundary")
      return void(c.boundary = to_enum<spinotto_boundary>(
                      v, where, {{"open", SPINOTTO_BOUNDARY_OPEN},
                                 {"periodic", SPINOTTO_BOUNDARY_PERIODIC}}));
  } else if (s == "cycle") {
    if (k == "r") {
      if (trim(v) == "r_ni_max") {
        c.r.reset();
        c.r_ni_max = true;
      } else {
        c.r = to_double(v, where);
        c.r_ni_max = false;
      }
      return;
    }
    if (k == "beta_h") return void(c.beta_h = to_double(v, where));
    if (k == "beta_c") return void(c.beta_c = to_double(v, where));
    if (k == "tau") return void(c.tau = to_double(v, where));
    if (k == "steps") return void(c.steps = to_int(v, where));
    if (k == "mode")
      return void(c.mode = to_enum<spinotto_mode>(v, where,
                                                  {{"adiabatic", SPINOTTO_MODE_ADIABATIC},
                                                   {"diabatic", SPINOTTO_MODE_DIABATIC},
                                                   {"diabatic_cd", SPINOTTO_MODE_DIABATIC_CD}}));
    if (k == "cd_variant")
      return void(c.cd_variant = to_enum<spinotto_cd_variant>(
                      v, where, {{"exact_chi", SPINOTTO_CD_FULL},
                                 {"chi_one", SPINOTTO_CD_CHI_ONE},
                                 {"action_minimum", SPINOTTO_CD_ACTION_MINIMUM}}));
  } else if (s == "sweep") {
    if (k == "axes") {
      std::vector<Axis> axes;
      for (const auto& name : tokens(v)) {
        if (!kAxisNames.count(name)) config_error(where, "unknown sweep axis '" + name + "'");
        auto old = std::find_if(c.axes.begin(), c.axes.end(),
                                [&](const Axis& a) { return a.name == name; });
        axes.push_back(old != c.axes.end() ? *old : Axis{name, {}});
      }
      if (axes.empty() || axes.size() > 2) config_error(where, "need one or two sweep axes");
      c.axes = axes;
      return;
    }
    if (kAxisNames.count(k)) {
      auto it = std::find_if(c.axes.begin(), c.axes.end(), [&](const Axis& a) { return a.name == k; });
      if (it == c.axes.end()) config_error(where, "grid given for an axis not listed in 'axes'");
      it->values = parse_grid(v, where);
      return;
    }
  } else if (s == "output") {
    if (k == "dir") return void(c.out_dir = trim(v));
    if (k == "svg") return void(c.svg = to_bool(v, where));
    if (k == "oracle") return void(c.oracle = to_bool(v, where));
  } else if (s == "run") {
    if (k == "workers") return void(c.workers = to_int(v, where));
  } else if (s == "gc") {
    if (k == "powers") return void(c.powers = to_list(v, where));
    if (k == "step") return void(c.gc_step = to_double(v, where));
  } else if (s == "spectrum") {
    if (k == "omega") return void(c.spectrum_omega = to_double(v, where));
    if (k == "levels") return void(c.levels = to_int(v, where));
  } else if (s == "entanglement") {
    if (k == "beta_delta") return void(c.beta_delta = to_list(v, where));
    if (k == "alpha") return void(c.alpha = to_double(v, where));
  } else if (s == "cd") {
    if (k == "omega") return void(c.cd_omega = to_double(v, where));
    if (k == "omega_dot") return void(c.cd_omega_dot = to_double(v, where));
  }
  config_error(where, "unknown key");
}

}  // namespace

std::vector<double> parse_grid(const std::string& text, const std::string& where) {
  const auto t = tokens(text);
  if (t.empty()) config_error(where, "empty grid");
  if (t[0] == "list") {
    std::vector<double> out;
    for (std::size_t k = 1; k < t.size(); ++k) out.push_back(to_double(t[k], where));
    if (out.empty()) config_error(where, "empty list grid");
    return out;
  }
  if (t[0] != "lin" && t[0] != "log")
    config_error(where, "grid must start with lin, log or list");
  if (t.size() != 4) config_error(where, "expected '" + t[0] + " lo hi count'");
  const double lo = to_double(t[1], where), hi = to_double(t[2], where);
  const int count = to_int(t[3], where);
  if (count < 1) config_error(where, "grid count must be positive");
  if (t[0] == "log" && (lo <= 0.0 || hi <= 0.0)) config_error(where, "log grid needs positive ends");
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    const double f = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    out.push_back(t[0] == "lin" ? lo + f * (hi - lo)
                                : std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))));
  }
  return out;
}

std::vector<Entry> read_config_file(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw CliError("config error at " + e.filename() + ":" + std::to_string(e.line()) + ": " +
                       e.message(),
                   kUsage);
  }
  // the tree has no positions; recover them for diagnostics
  std::map<std::pair<std::string, std::string>, int> lines;
  {
    std::ifstream f(path);
    std::string line, section;
    for (int no = 1; std::getline(f, line); ++no) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == ';' || t[0] == '#') continue;
      if (t[0] == '[') {
        section = trim(t.substr(1, t.find(']') - 1));
        continue;
      }
      const auto eq = t.find('=');
      if (eq != std::string::npos) lines[{section, trim(t.substr(0, eq))}] = no;
    }
  }
  std::vector<std::pair<int, Entry>> entries;
  for (const auto& [section, body] : tree) {
    if (body.empty())
      throw CliError("config error at " + path + ": key '" + section + "' outside any section",
                     kUsage);
    for (const auto& [key, value] : body) {
      const int no = lines[{section, key}];
      entries.push_back(
          {no, Entry{section, key, value.data(), path + ":" + std::to_string(no)}});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Entry> out;
  for (auto& [no, e] : entries) out.push_back(std::move(e));
  return out;
}

Entry parse_override(const std::string& text) {
  const auto dot = text.find('.');
  const auto eq = text.find('=');
  if (dot == std::string::npos || eq == std::string::npos || dot > eq)
    throw CliError("--set expects section.key=value, got '" + text + "'", kUsage);
  return Entry{trim(text.substr(0, dot)), trim(text.substr(dot + 1, eq - dot - 1)),
               trim(text.substr(eq + 1)), "--set"};
}

RunConfig apply_entries(RunConfig base, const std::vector<Entry>& entries,
                        const std::set<std::string>& sections, const std::string& command) {
  for (const auto& e : entries) {
    if (!sections.count(e.section))
      config_error(e.origin, "section [" + e.section + "] is not used by '" + command + "'");
    apply(base, e);
  }
  if (base.g && base.g_over_gc) throw CliError("config error: give chain.g or chain.g_over_gc, not both", kUsage);
  if (base.workers < 1) throw CliError("config error: workers must be at least 1", kUsage);
  for (const auto& a : base.axes)
    if (a.values.empty())
      throw CliError("config error: sweep axis '" + a.name + "' has no grid", kUsage);
  return base;
}

}  // namespace cli
