#ifndef GEOMLIFT_ERRORS_HPP
#define GEOMLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geomlift {

// Input that could not be parsed (bad file, bad JSON, loops/duplicates).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural hypothesis of the requested operation does not hold
// (wrong connectivity, not a cycle, not a separator, ...).
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The instance exceeds the documented desk-scale bound of an exact search.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace geomlift

#endif
