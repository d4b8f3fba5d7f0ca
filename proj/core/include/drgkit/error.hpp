#pragma once

#include <stdexcept>
#include <string>

namespace drgkit {

// All library failures are reported through this type. `kind()` is a short
// stable tag ("loop", "asymmetric", "not distance-regular", ...) that callers
// and tests can match on; `what()` carries the tag plus human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail.empty() ? kind : kind + ": " + detail),
        kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace drgkit
