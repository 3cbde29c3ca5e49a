#ifndef ZGZ_ERRORS_HPP
#define ZGZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zgz {

// Invalid arguments, dimension mismatches, unsupported parameters.
struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// A linear system or matrix turned out singular.
struct SingularError : std::runtime_error {
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeded the exhaustive-verification caps.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// An instrumented reader was asked for a cell outside the declared plan.
struct OutOfPlanRead : std::logic_error {
    explicit OutOfPlanRead(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zgz

#endif
