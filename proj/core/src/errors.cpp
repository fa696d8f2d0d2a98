#include "rovib/errors.hpp"

#include <utility>

namespace rovib {

ParseError::ParseError(std::size_t line, std::string field,
                       const std::string& message)
    : Error("line " + std::to_string(line) + ", field '" + field +
            "': " + message),
      line_(line),
      field_(std::move(field)) {}

PoleError::PoleError(double location, const std::string& message)
    : Error(message), location_(location) {}

ResolutionError::ResolutionError(std::size_t suggested_points,
                                 const std::string& message)
    : Error(message), suggested_points_(suggested_points) {}

}  // namespace rovib
