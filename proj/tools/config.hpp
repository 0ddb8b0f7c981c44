#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "liespec/symspec.hpp"

namespace liespec::cli {

// Configuration problem, anchored to a line of the source when known.
struct ConfigError : std::runtime_error {
  long line = 0;
  ConfigError(const std::string& what, long line_no)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what), line(line_no) {}
};

struct FactorConfig {
  std::string type;
  int rank = 0;
  std::string kind = "group";
  std::vector<std::string> gamma;
  Q scale = 1;
  rootsys::MultProfile mult;
};

struct SpaceConfig {
  std::size_t torus_dim = 0;
  RatMat torus_gram;
  std::vector<FactorConfig> factors;
  std::vector<std::vector<std::string>> product_generators;

  symspec::SymmetricSpaceSpec space() const;
  symspec::MetricSpec metric() const;
  // Canonical TOML text; parses back to the same configuration.
  std::string to_toml() const;
};

SpaceConfig parse_space_config(const std::string& toml_text, const std::string& source = "config");
SpaceConfig load_space_config(const std::string& path);

// "1/4", "3", or an integer/string TOML value rendered as text.
Q parse_exact(const std::string& s);

}  // namespace liespec::cli
