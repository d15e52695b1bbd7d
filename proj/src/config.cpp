#include <fstream>
#include <sstream>

#include "artinff/cli.hpp"
#include "artinff/errors.hpp"

namespace artinff::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

uint64_t parse_uint(const std::string& v, const std::string& key) {
  if (v.empty()) throw config_error("config: empty value for " + key);
  uint64_t out = 0;
  for (char c : v) {
    if (c < '0' || c > '9')
      throw config_error("config: " + key + " must be a nonnegative integer, got \"" + v + "\"");
    out = out * 10 + (uint64_t)(c - '0');
  }
  return out;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw config_error("config: " + key + " must be true or false, got \"" + v + "\"");
}

void parse_n_range(const std::string& v, ExperimentConfig& cfg) {
  size_t dots = v.find("..");
  if (dots == std::string::npos) {
    cfg.n_lo = cfg.n_hi = (uint32_t)parse_uint(trim(v), "n");
  } else {
    cfg.n_lo = (uint32_t)parse_uint(trim(v.substr(0, dots)), "n");
    cfg.n_hi = (uint32_t)parse_uint(trim(v.substr(dots + 2)), "n");
  }
  if (cfg.n_lo == 0 || cfg.n_hi < cfg.n_lo)
    throw config_error("config: empty or invalid n range \"" + v + "\"");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[experiment]")
        throw config_error("config line " + std::to_string(lineno) +
                           ": unknown section " + line);
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "field")
      cfg.field = val;
    else if (key == "variety")
      cfg.variety = val;
    else if (key == "g")
      cfg.g = val;
    else if (key == "n")
      parse_n_range(val, cfg);
    else if (key == "cap")
      cfg.cap = parse_uint(val, key);
    else if (key == "threads")
      cfg.threads = (unsigned)parse_uint(val, key);
    else if (key == "delta")
      cfg.delta = val;
    else if (key == "m_max")
      cfg.m_max = parse_uint(val, key);
    else if (key == "nongeometric_primes") {
      cfg.nongeometric_primes.clear();
      std::istringstream ps(val);
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty())
          cfg.nongeometric_primes.push_back(parse_uint(tok, key));
      }
    } else if (key == "dump_histograms")
      cfg.dump_histograms = parse_bool(val, key);
    else if (key == "out_of_hypothesis")
      cfg.out_of_hypothesis = parse_bool(val, key);
    else if (key == "timing")
      cfg.timing = parse_bool(val, key);
    else if (key == "out")
      cfg.out = val;
    else if (key == "format") {
      if (val != "csv" && val != "json")
        throw config_error("config: format must be csv or json");
      cfg.format = val;
    } else
      throw config_error("config line " + std::to_string(lineno) +
                         ": unknown key \"" + key + "\"");
  }
  if (cfg.cap == 0) throw config_error("config: cap must be positive");
  if (cfg.threads == 0) throw config_error("config: threads must be positive");
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace artinff::cli
