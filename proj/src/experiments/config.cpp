#include "nlsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nlsim/error.hpp"
#include "nlsim/imethod.hpp"
#include "nlsim/symbol.hpp"

namespace nlsim {

const char* to_string(Study s) {
  switch (s) {
    case Study::sweep_n: return "sweep_n";
    case Study::conserve: return "conserve";
    case Study::inequalities: return "inequalities";
    case Study::morawetz: return "morawetz";
    case Study::scatter: return "scatter";
  }
  return "?";
}

Study parse_study(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  for (Study s : {Study::sweep_n, Study::conserve, Study::inequalities, Study::morawetz, Study::scatter})
    if (key == to_string(s)) return s;
  throw ConfigError("unknown study '" + name + "'");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  return out;
}

long to_integer(const std::string& key, const std::string& v) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  return out;
}

int to_int(const std::string& key, const std::string& v) { return static_cast<int>(to_integer(key, v)); }

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "1") return true;
  if (v == "false" || v == "off" || v == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v, ',')) out.push_back(to_double(key, item));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

RadialProfile to_profile(const std::string& key, const std::string& v) {
  const auto parts = split(v, ' ');
  if (parts.size() < 3 || parts.size() > 4)
    throw ConfigError(key + ": family must read '<profile> <amplitude> <width> [seed]', got '" + v + "'");
  RadialProfile p;
  try {
    p.kind = parse_profile_kind(parts[0]);
  } catch (const Error& e) {
    throw ConfigError(key + ": " + e.what());
  }
  p.amplitude = to_double(key, parts[1]);
  p.width = to_double(key, parts[2]);
  if (parts.size() == 4) p.seed = static_cast<std::uint64_t>(to_integer(key, parts[3]));
  return p;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"study", [](auto& c, auto&, auto& v) { c.study = parse_study(v); }},
      {"seed", [](auto& c, auto& k, auto& v) { c.seed = static_cast<std::uint64_t>(to_integer(k, v)); }},
      {"output_dir", [](auto& c, auto&, auto& v) { c.output_dir = v; }},

      {"grid.dim", [](auto& c, auto& k, auto& v) { c.grid.dim = to_int(k, v); }},
      {"grid.n", [](auto& c, auto& k, auto& v) { c.grid.n = to_int(k, v); }},
      {"grid.extent", [](auto& c, auto& k, auto& v) { c.grid.extent = to_double(k, v); }},

      {"evolution.k", [](auto& c, auto& k, auto& v) { c.evolution.k = to_int(k, v); }},
      {"evolution.dt", [](auto& c, auto& k, auto& v) { c.evolution.dt = to_double(k, v); }},
      {"evolution.t_final", [](auto& c, auto& k, auto& v) { c.evolution.t_final = to_double(k, v); }},
      {"evolution.sample_every", [](auto& c, auto& k, auto& v) { c.evolution.sample_every = to_int(k, v); }},
      {"evolution.dealias", [](auto& c, auto& k, auto& v) { c.evolution.dealias = to_bool(k, v); }},
      {"evolution.nonlinearity",
       [](auto&, auto& k, auto& v) {
         if (v != "defocusing") throw ConfigError(k + ": only 'defocusing' is supported, got '" + v + "'");
       }},

      {"imethod.N", [](auto& c, auto& k, auto& v) { c.cutoffs = to_list(k, v); }},
      {"imethod.s", [](auto& c, auto& k, auto& v) { c.s = to_double(k, v); }},

      {"datum.profile",
       [](auto& c, auto& k, auto& v) {
         try {
           c.datum.kind = parse_profile_kind(v);
         } catch (const Error& e) {
           throw ConfigError(k + ": " + e.what());
         }
       }},
      {"datum.amplitude", [](auto& c, auto& k, auto& v) { c.datum.amplitude = to_double(k, v); }},
      {"datum.width", [](auto& c, auto& k, auto& v) { c.datum.width = to_double(k, v); }},
      {"datum.band_limit", [](auto& c, auto& k, auto& v) { c.datum_band_limit = to_double(k, v); }},
      {"datum.seed", [](auto& c, auto& k, auto& v) { c.datum.seed = static_cast<std::uint64_t>(to_integer(k, v)); }},

      {"inequalities.corpus_size", [](auto& c, auto& k, auto& v) { c.corpus_size = to_int(k, v); }},
      {"inequalities.smoothing_corpus_size",
       [](auto& c, auto& k, auto& v) { c.smoothing_corpus_size = to_int(k, v); }},
      {"inequalities.strichartz_time", [](auto& c, auto& k, auto& v) { c.strichartz_time = to_double(k, v); }},
      {"inequalities.grid3_n", [](auto& c, auto& k, auto& v) { c.grid3.n = to_int(k, v); }},
      {"inequalities.grid3_extent", [](auto& c, auto& k, auto& v) { c.grid3.extent = to_double(k, v); }},
      {"inequalities.radial_n", [](auto& c, auto& k, auto& v) { c.radial_grid.n = to_int(k, v); }},
      {"inequalities.radial_extent", [](auto& c, auto& k, auto& v) { c.radial_grid.extent = to_double(k, v); }},

      {"morawetz.family", [](auto& c, auto& k, auto& v) { c.families.push_back(to_profile(k, v)); }},

      {"scatter.extents", [](auto& c, auto& k, auto& v) { c.extents = to_list(k, v); }},
  };
  return table;
}

// Keys that may appear more than once.
const std::set<std::string> kRepeatable = {"morawetz.family"};

template <class F>
void as_config_error(const std::string& what, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

}  // namespace

Field ExperimentConfig::initial_datum(const Grid& g) const {
  Field u = make_radial_data(g, datum);
  return datum_band_limit > 0.0 ? low_pass(u, datum_band_limit) : u;
}

GridSpec GridSpec::with_extent(double new_extent) const {
  GridSpec out = *this;
  out.extent = new_extent;
  out.n = 2 * static_cast<int>(std::lround(0.5 * n * new_extent / extent));
  return out;
}

void ExperimentConfig::validate() const {
  as_config_error("grid", [&] { (void)grid.make(); });
  if (datum_band_limit < 0.0) throw ConfigError("datum.band_limit: must be non-negative");
  if (evolution.dim != grid.dim) throw ConfigError("evolution dimension differs from grid.dim");
  as_config_error("evolution", [&] { evolution.validate(); });

  const bool uses_datum = study == Study::sweep_n || study == Study::conserve || study == Study::scatter;
  if (uses_datum)
    as_config_error("datum", [&] { (void)initial_datum(grid.make()); });

  if (study == Study::sweep_n) {
    if (cutoffs.size() < 4) throw ConfigError("imethod.N: the sweep needs at least four values");
    for (std::size_t i = 1; i < cutoffs.size(); ++i)
      if (!(cutoffs[i] > cutoffs[i - 1])) throw ConfigError("imethod.N: values must be strictly increasing");
    const Grid g = grid.make();
    for (double N : cutoffs) {
      IMethodConfig ic{N, s, evolution.k, grid.dim};
      as_config_error("imethod", [&] { ic.validate_on(g); });
    }
  }
  if (study == Study::inequalities) {
    if (grid.dim != 2) throw ConfigError("inequalities: grid.dim must be 2 (the 3-d grids are separate)");
    if (corpus_size < 100) throw ConfigError("inequalities.corpus_size: at least 100 fields required");
    if (smoothing_corpus_size < 1 || smoothing_corpus_size > corpus_size)
      throw ConfigError("inequalities.smoothing_corpus_size: must lie in [1, corpus_size]");
    if (!(strichartz_time > 0.0)) throw ConfigError("inequalities.strichartz_time: must be positive");
    as_config_error("inequalities.grid3", [&] { (void)grid3.make(); });
    as_config_error("inequalities.radial", [&] { (void)radial_grid.make(); });
  }
  if (study == Study::morawetz) {
    if (families.size() < 5) throw ConfigError("morawetz.family: at least five data families required");
    const Grid g = grid.make();
    for (const auto& f : families) as_config_error("morawetz.family", [&] { (void)make_radial_data(g, f); });
  }
  if (study == Study::scatter) {
    for (double e : extents) {
      if (!(e > 0.0)) throw ConfigError("scatter.extents: must be positive");
      const GridSpec other = grid.with_extent(e);
      as_config_error("scatter.extents", [&] { (void)initial_datum(other.make()); });
    }
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  bool dt_given = false;
  std::set<std::string> seen;
  std::string section, line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      static const std::set<std::string> known = {"grid", "evolution", "imethod", "datum",
                                                  "inequalities", "morawetz", "scatter"};
      if (!known.count(section)) throw ConfigError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const std::string full = section.empty() ? key : section + "." + key;
    const auto it = setters().find(full);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + full + "'");
    if (!seen.insert(full).second && !kRepeatable.count(full))
      throw ConfigError(where + "duplicate key '" + full + "'");
    if (value.empty()) throw ConfigError(where + "empty value for '" + full + "'");
    try {
      it->second(cfg, full, value);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
    if (full == "evolution.dt") dt_given = true;
  }
  cfg.evolution.dim = cfg.grid.dim;
  if (!dt_given) as_config_error("grid", [&] { cfg.evolution.dt = default_time_step(cfg.grid.make()); });
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  return parse_config(in);
}

}  // namespace nlsim
