#pragma once

#include <stdexcept>
#include <string>

namespace qdilog {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitLeadingCoefficient : Error {
    NonUnitLeadingCoefficient() : Error("leading coefficient is not a unit") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(long got, long want)
        : Error("dimension vector has length " + std::to_string(got) + ", expected " +
                std::to_string(want)) {}
};

struct AxisMismatch : Error {
    AxisMismatch() : Error("roots lie on different axes") {}
};

struct IncompleteOrder : Error {
    explicit IncompleteOrder(const std::string& why) : Error("incomplete order: " + why) {}
};

struct InvalidOrder : Error {
    explicit InvalidOrder(const std::string& why) : Error("invalid order: " + why) {}
};

struct ZeroVectorOperand : Error {
    ZeroVectorOperand() : Error("basis product needs nonzero dimension vectors") {}
};

struct BoxMismatch : Error {
    BoxMismatch() : Error("algebra elements live in different boxes") {}
};

}  // namespace qdilog
