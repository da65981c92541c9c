#pragma once

#include <stdexcept>
#include <string>

namespace visipoly {

// Thrown when an argument violates a structural bound or precondition
// (bad family parameter, malformed input, set outside its domain).
class validity_error : public std::runtime_error {
public:
    explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a graph exceeds the configured enumeration cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace visipoly
