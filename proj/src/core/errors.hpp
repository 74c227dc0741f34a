#pragma once

#include <stdexcept>
#include <string>

namespace sigdet {

// Problems with input files or serialized artifacts: malformed CSV rows,
// corrupt or version-mismatched model files, schema mismatches. Distinct from
// std::invalid_argument / std::domain_error, which signal bad parameters.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sigdet
