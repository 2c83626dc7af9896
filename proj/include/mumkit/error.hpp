#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mumkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

struct InvalidOffsetError : Error {
    using Error::Error;
};

struct InvalidShapeError : Error {
    using Error::Error;
};

struct NormalizationError : Error {
    using Error::Error;
};

// Positivity bound mu_j >= -1/d failed for the requested (kappa, phases).
struct InfeasibleParametersError : Error {
    InfeasibleParametersError(const std::string& msg, std::size_t entry_, double value_)
        : Error(msg), entry(entry_), value(value_) {}
    std::size_t entry;
    double value;
};

struct InfeasibleCompletionError : Error {
    InfeasibleCompletionError(const std::string& msg, double discriminant_)
        : Error(msg), discriminant(discriminant_) {}
    double discriminant;
};

struct DegeneratePurityError : Error {
    using Error::Error;
};

struct UnsupportedDimensionError : Error {
    using Error::Error;
};

struct UnsupportedPurityError : Error {
    using Error::Error;
};

struct UnitarityError : Error {
    UnitarityError(const std::string& msg, std::size_t index_ = 0)
        : Error(msg), index(index_) {}
    std::size_t index;
};

struct NotTracelessError : Error {
    using Error::Error;
};

struct OrthonormalityError : Error {
    using Error::Error;
};

struct InvalidPermutationError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

// Unparseable or schema-violating external input (files, wire payloads).
struct MalformedInputError : Error {
    using Error::Error;
};

struct CompletenessError : Error {
    using Error::Error;
};

}  // namespace mumkit
