#pragma once

#include <stdexcept>
#include <string>

namespace orgsim {

// Invalid configuration or input data (bad config key, malformed matrix
// file, inconsistent parameters). The CLI maps this to exit code 1;
// everything else unexpected maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orgsim
