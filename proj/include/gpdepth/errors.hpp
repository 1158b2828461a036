#pragma once

#include <stdexcept>
#include <string>

namespace gpdepth {

// Bad user-supplied input: missing files, malformed formats, out-of-range
// parameters. The CLI maps this to exit code 2; other failures map to 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpdepth
