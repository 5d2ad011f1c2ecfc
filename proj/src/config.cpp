#include "ercd/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ercd {

namespace {

using nlohmann::json;

double as_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("config field '" + key + "' must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError("config field '" + key + "' must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError("config field '" + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

void merge_config_text(RunConfig& cfg, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  for (const auto& [key, val] : j.items()) {
    if (key == "grid_count")
      cfg.grid_count = as_int(val, key);
    else if (key == "grid_dk")
      cfg.grid_dk = as_number(val, key);
    else if (key == "mass")
      cfg.mass = as_number(val, key);
    else if (key == "tol_alg")
      cfg.tol_alg = as_number(val, key);
    else if (key == "tol_link")
      cfg.tol_link = as_number(val, key);
    else if (key == "tol_cons")
      cfg.tol_cons = as_number(val, key);
    else if (key == "tol_spec")
      cfg.tol_spec = as_number(val, key);
    else if (key == "seed") {
      if (!val.is_number_unsigned() && !val.is_number_integer())
        throw ConfigError("config field 'seed' must be a non-negative integer");
      cfg.seed = val.get<std::uint64_t>();
    } else if (key == "out")
      cfg.out = as_string(val, key);
    else if (key == "suite")
      cfg.suite = as_string(val, key);
    else if (key == "times") {
      if (!val.is_array()) throw ConfigError("config field 'times' must be an array");
      cfg.times.clear();
      for (const auto& t : val) cfg.times.push_back(as_number(t, "times[]"));
    } else if (key == "refine")
      cfg.refine = as_int(val, key);
    else if (key == "ordering")
      cfg.ordering = as_string(val, key);
    else if (key == "modes")
      cfg.modes = as_string(val, key);
    else if (key == "scheme")
      cfg.scheme = as_string(val, key);
    else
      throw ConfigError("unknown config field: " + key);
  }
}

void merge_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    merge_config_text(cfg, buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(e.what()) + " (in " + path + ")");
  }
}

void validate_config(const RunConfig& cfg) {
  if (cfg.grid_count < 1 || cfg.grid_count % 2 == 0)
    throw ConfigError("grid_count must be odd and >= 1");
  if (!(cfg.grid_dk > 0.0) || !std::isfinite(cfg.grid_dk))
    throw ConfigError("grid_dk must be positive");
  if (!(cfg.mass > 0.0) || !std::isfinite(cfg.mass))
    throw ConfigError("mass must be positive");
  for (double t : {cfg.tol_alg, cfg.tol_link, cfg.tol_cons, cfg.tol_spec})
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("tolerances must be positive");
  if (cfg.times.empty()) throw ConfigError("times must be non-empty");
  for (double t : cfg.times)
    if (!std::isfinite(t)) throw ConfigError("times entries must be finite");
  if (cfg.refine < 1 || cfg.refine > 8) throw ConfigError("refine must be in 1..8");
  if (cfg.ordering != "left" && cfg.ordering != "right" && cfg.ordering != "both")
    throw ConfigError("ordering must be left, right or both");
  if (cfg.modes != "grid" && cfg.modes != "single:k=0")
    throw ConfigError("modes must be 'grid' or 'single:k=0'");
  if (cfg.scheme != "spectral" && cfg.scheme != "stencil4")
    throw ConfigError("scheme must be 'spectral' or 'stencil4'");
}

std::vector<double> parse_times(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ConfigError("empty entry in times list");
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad times entry: " + tok);
    }
    if (pos != tok.size()) throw ConfigError("bad times entry: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("times list is empty");
  return out;
}

}  // namespace ercd
