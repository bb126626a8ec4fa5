#pragma once

#include <stdexcept>
#include <string>

namespace gsob {

/// Runtime numerical failure: a singular linear system, an overflowing
/// reweighting factor, a non-finite sample. Argument and domain violations
/// throw std::invalid_argument instead.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsob
