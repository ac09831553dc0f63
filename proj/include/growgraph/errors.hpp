#pragma once

#include <stdexcept>
#include <string>

namespace growgraph {

/// Malformed input: bad parameters, invalid files, violated preconditions.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds one of the documented size caps (enumeration, oracle,
/// homomorphism counting). The CLI maps this to exit code 3.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace growgraph
