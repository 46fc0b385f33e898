#include "oscillock/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oscillock/errors.hpp"

namespace oscillock {
namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

// Walks one JSON object, tracking which keys were consumed.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_, "expected an object");
  }

  ~Section() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.count(key)) throw ConfigError(join(path_, key), "unknown key");
    }
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  std::string path(const std::string& key) const { return join(path_, key); }

  void read(const std::string& key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) throw ConfigError(path(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(const std::string& key, std::size_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_integer() || v->get<long long>() < 0) {
        throw ConfigError(path(key), "expected a non-negative integer");
      }
      out = v->get<std::size_t>();
    }
  }

  void read_u64(const std::string& key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (!v->is_number_unsigned()) throw ConfigError(path(key), "expected a non-negative integer");
      out = v->get<std::uint64_t>();
    }
  }

  void read(const std::string& key, std::string& out) {
    if (const json* v = find(key)) {
      if (!v->is_string()) throw ConfigError(path(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void read(const std::string& key, Complex& out) {
    if (const json* v = find(key)) out = to_complex(*v, path(key));
  }

  void read(const std::string& key, std::vector<double>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) throw ConfigError(path(key), "expected an array of numbers");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_number()) {
          throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected a number");
        }
        out.push_back((*v)[i].get<double>());
      }
    }
  }

  void read(const std::string& key, std::vector<Complex>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) throw ConfigError(path(key), "expected an array");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        out.push_back(to_complex((*v)[i], path(key) + "[" + std::to_string(i) + "]"));
      }
    }
  }

  void read(const std::string& key, std::vector<std::size_t>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) throw ConfigError(path(key), "expected an array of indices");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        const auto& e = (*v)[i];
        if (!e.is_number_integer() || e.get<long long>() < 0) {
          throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected a non-negative integer");
        }
        out.push_back(e.get<std::size_t>());
      }
    }
  }

 private:
  // A complex number is either a plain number or a [re, im] pair.
  static Complex to_complex(const json& v, const std::string& where) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ConfigError(where, "expected a number or a [re, im] pair");
  }

  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

SystemKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "harmonic") return SystemKind::harmonic;
  if (s == "hydrogen") return SystemKind::hydrogen;
  if (s == "custom") return SystemKind::custom;
  throw ConfigError(where, "unknown system '" + s + "' (harmonic | hydrogen | custom)");
}

const char* policy_name(SamplingPolicy p) { return p == SamplingPolicy::uniform ? "uniform" : "auto"; }

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

}  // namespace

void validate_config(const ScenarioConfig& c) {
  require(c.version == kConfigVersion, "version", "unsupported config version");
  const auto& s = c.system;
  require(s.omega > 0.0 && std::isfinite(s.omega), "system.omega", "must be positive");
  require(s.mass > 0.0 && std::isfinite(s.mass), "system.mass", "must be positive");
  require(s.cutoff >= 1, "system.cutoff", "must be at least 1");
  require(s.n_max >= 2, "system.n_max", "must be at least 2");
  if (s.kind == SystemKind::custom) {
    require(!s.energies.empty(), "system.energies", "custom systems need energies");
    require(s.energies.size() == s.amplitudes.size(), "system.amplitudes",
            "must have one amplitude per energy");
    for (double e : s.energies) require(e != 0.0 && std::isfinite(e), "system.energies", "must be nonzero");
  }
  if (s.kind == SystemKind::hydrogen) {
    require(s.amplitudes.size() <= s.n_max, "system.amplitudes", "more amplitudes than n_max states");
  }
  require(c.clock.lambda > 0.0 && std::isfinite(c.clock.lambda), "clock.lambda", "must be positive");
  require(c.clock.hbar > 0.0 && std::isfinite(c.clock.hbar), "clock.hbar", "must be positive");
  require(std::isfinite(c.tau.min) && std::isfinite(c.tau.max) && c.tau.max > c.tau.min, "tau.max",
          "must exceed tau.min");
  require(c.tau.samples >= 2, "tau.samples", "must be at least 2");
  require(!c.phases.states.empty(), "phases.states", "must list at least one eigenstate");
  require(c.density.x_max > c.density.x_min, "density.x_max", "must exceed density.x_min");
  require(c.density.x_points >= 2, "density.x_points", "must be at least 2");
  require(c.sweep.lambda_min > 0.0, "sweep.lambda_min", "must be positive");
  require(c.sweep.lambda_max > c.sweep.lambda_min, "sweep.lambda_max", "must exceed sweep.lambda_min");
  require(c.sweep.points >= 2, "sweep.points", "must be at least 2");
  require(c.sweep.min_periods >= 1, "sweep.min_periods", "must be at least 1");
  require(c.sweep.target_periods >= c.sweep.min_periods, "sweep.target_periods",
          "must be at least sweep.min_periods");
  require(c.sweep.samples_per_period >= 8.0, "sweep.samples_per_period", "must be at least 8");
  require(c.sweep.time_budget_seconds > 0.0, "sweep.time_budget_seconds", "must be positive");
  require(c.sweep.observable == "x" || c.sweep.observable == "p", "sweep.observable",
          "must be \"x\" or \"p\"");
  require(c.bound.sigma >= 0.0, "bound.sigma", "must be non-negative");
  require(c.bound.system_period > 0.0, "bound.system_period", "must be positive");
  require(!c.output.dir.empty(), "output.dir", "must not be empty");
}

ScenarioConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("", "syntax error at line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": " + e.what());
  }

  ScenarioConfig c;
  {
    Section top(root, "");
    if (const json* v = top.find("version")) {
      if (!v->is_number_integer()) throw ConfigError("version", "expected an integer");
      c.version = v->get<int>();
    }
    if (const json* v = top.find("system")) {
      Section s(*v, "system");
      std::string kind = to_string(c.system.kind);
      s.read("kind", kind);
      c.system.kind = parse_kind(kind, "system.kind");
      s.read("omega", c.system.omega);
      s.read("mass", c.system.mass);
      s.read("alpha", c.system.alpha);
      s.read("cutoff", c.system.cutoff);
      s.read("n_max", c.system.n_max);
      s.read("energies", c.system.energies);
      s.read("amplitudes", c.system.amplitudes);
    }
    if (const json* v = top.find("clock")) {
      Section s(*v, "clock");
      s.read("lambda", c.clock.lambda);
      s.read("hbar", c.clock.hbar);
    }
    if (const json* v = top.find("mode")) {
      if (!v->is_string()) throw ConfigError("mode", "expected a string");
      try {
        c.mode = phase_law_from_string(v->get<std::string>());
      } catch (const DomainError& e) {
        throw ConfigError("mode", e.what());
      }
    }
    if (const json* v = top.find("tau")) {
      Section s(*v, "tau");
      s.read("min", c.tau.min);
      s.read("max", c.tau.max);
      std::string policy = policy_name(c.tau.policy);
      s.read("policy", policy);
      if (policy == "auto") {
        c.tau.policy = SamplingPolicy::automatic;
      } else if (policy == "uniform") {
        c.tau.policy = SamplingPolicy::uniform;
      } else {
        throw ConfigError("tau.policy", "expected \"auto\" or \"uniform\"");
      }
      s.read("samples", c.tau.samples);
    }
    if (const json* v = top.find("phases")) {
      Section s(*v, "phases");
      s.read("states", c.phases.states);
    }
    if (const json* v = top.find("density")) {
      Section s(*v, "density");
      s.read("x_min", c.density.x_min);
      s.read("x_max", c.density.x_max);
      s.read("x_points", c.density.x_points);
    }
    if (const json* v = top.find("sweep")) {
      Section s(*v, "sweep");
      s.read("lambda_min", c.sweep.lambda_min);
      s.read("lambda_max", c.sweep.lambda_max);
      s.read("points", c.sweep.points);
      s.read("min_periods", c.sweep.min_periods);
      s.read("target_periods", c.sweep.target_periods);
      s.read("samples_per_period", c.sweep.samples_per_period);
      s.read("time_budget_seconds", c.sweep.time_budget_seconds);
      s.read("observable", c.sweep.observable);
    }
    if (const json* v = top.find("bound")) {
      Section s(*v, "bound");
      s.read("sigma", c.bound.sigma);
      s.read("system_period", c.bound.system_period);
    }
    if (const json* v = top.find("output")) {
      Section s(*v, "output");
      s.read("dir", c.output.dir);
    }
    top.read_u64("seed", c.seed);
  }
  validate_config(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string canonical_json(const ScenarioConfig& c) {
  json amplitudes = json::array();
  for (const auto& a : c.system.amplitudes) amplitudes.push_back(complex_json(a));
  json root = {
      {"version", c.version},
      {"system",
       {{"kind", to_string(c.system.kind)},
        {"omega", c.system.omega},
        {"mass", c.system.mass},
        {"alpha", complex_json(c.system.alpha)},
        {"cutoff", c.system.cutoff},
        {"n_max", c.system.n_max},
        {"energies", c.system.energies},
        {"amplitudes", amplitudes}}},
      {"clock", {{"lambda", c.clock.lambda}, {"hbar", c.clock.hbar}}},
      {"mode", to_string(c.mode)},
      {"tau",
       {{"min", c.tau.min}, {"max", c.tau.max}, {"policy", policy_name(c.tau.policy)}, {"samples", c.tau.samples}}},
      {"phases", {{"states", c.phases.states}}},
      {"density", {{"x_min", c.density.x_min}, {"x_max", c.density.x_max}, {"x_points", c.density.x_points}}},
      {"sweep",
       {{"lambda_min", c.sweep.lambda_min},
        {"lambda_max", c.sweep.lambda_max},
        {"points", c.sweep.points},
        {"min_periods", c.sweep.min_periods},
        {"target_periods", c.sweep.target_periods},
        {"samples_per_period", c.sweep.samples_per_period},
        {"time_budget_seconds", c.sweep.time_budget_seconds},
        {"observable", c.sweep.observable}}},
      {"bound", {{"sigma", c.bound.sigma}, {"system_period", c.bound.system_period}}},
      {"output", {{"dir", c.output.dir}}},
      {"seed", c.seed},
  };
  return root.dump();
}

std::string config_hash(const ScenarioConfig& config) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : canonical_json(config)) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace oscillock
