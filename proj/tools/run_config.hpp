#ifndef NPSPEC_TOOLS_RUN_CONFIG_HPP
#define NPSPEC_TOOLS_RUN_CONFIG_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

// Flat key = value run configuration. Flags override file values; the cache
// directory can also come from the NPSPEC_CACHE_DIR environment variable.
struct RunConfig {
  double quad_tol = 1e-11;
  int default_N = 256;
  int m_max = 8;
  double a = 1.0;
  double eps = 0.02;
  double sigma_prolate = 0.5;
  double sigma_planar = 0.3;
  // calibration thresholds for the quasi-mode decay reports
  double quasimode_final_residual_max = 0.05;
  double quasimode_noise_band = 0.05;
  std::string cache_dir = ".npspec-cache";
  std::string output = "csv";

  static RunConfig load(const std::string& path) {
    RunConfig cfg;
    if (const char* env = std::getenv("NPSPEC_CACHE_DIR")) cfg.cache_dir = env;
    if (path.empty()) return cfg;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      if (trim(line).empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw std::runtime_error("config: line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      try {
        if (key == "quad_tol") cfg.quad_tol = std::stod(val);
        else if (key == "default_N") cfg.default_N = std::stoi(val);
        else if (key == "m_max") cfg.m_max = std::stoi(val);
        else if (key == "a") cfg.a = std::stod(val);
        else if (key == "eps") cfg.eps = std::stod(val);
        else if (key == "sigma_prolate") cfg.sigma_prolate = std::stod(val);
        else if (key == "sigma_planar") cfg.sigma_planar = std::stod(val);
        else if (key == "quasimode_final_residual_max") cfg.quasimode_final_residual_max = std::stod(val);
        else if (key == "quasimode_noise_band") cfg.quasimode_noise_band = std::stod(val);
        else if (key == "cache_dir") cfg.cache_dir = val;
        else if (key == "output") cfg.output = val;
        else throw std::runtime_error("config: unknown key '" + key + "'");
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("config: bad numeric value for '" + key + "'");
      }
    }
    if (cfg.output != "csv" && cfg.output != "json")
      throw std::runtime_error("config: output must be csv or json");
    return cfg;
  }
};

#endif
