#pragma once

#include <stdexcept>
#include <string>

namespace bollobas {

// Thrown when an enumeration would exceed its size guard and no override was
// given. The CLI maps this (and bad parameters) to exit status 2.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bollobas
