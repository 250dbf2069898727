#pragma once

#include <stdexcept>
#include <string>

namespace wafusion {

// Two failure classes, aligned with the CLI exit codes:
// data/format problems (exit 3) and numeric/contract violations (exit 4).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wafusion
