#pragma once

#include <stdexcept>
#include <string>

namespace tfcl {

// Error taxonomy mirrors the CLI exit codes: config=1, data=2, cap=3.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tfcl
