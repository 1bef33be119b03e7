#pragma once

#include <stdexcept>
#include <string>

namespace asrm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationInsufficient : Error {
    using Error::Error;
};

struct RootNotFound : Error {
    using Error::Error;
};

struct RootAmbiguous : Error {
    using Error::Error;
};

struct DegenerateGround : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct DegenerateB : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct BasisMismatch : Error {
    using Error::Error;
};

struct NotDensityMatrix : Error {
    using Error::Error;
};

struct ConfigInvalid : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    using Error::Error;
};

}  // namespace asrm
