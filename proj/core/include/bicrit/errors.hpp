#ifndef BICRIT_ERRORS_HPP
#define BICRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicrit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Expansion ran out of trusted bits before reaching the requested depth.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Some alpha_n hit zero exactly; the parameter is rational.
struct RationalAlpha : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

// g_r argument vanished to working precision (log of ~0).
struct SingularPoint : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct NotInSet : Error {
    using Error::Error;
};

struct ReturnNotFound : Error {
    using Error::Error;
};

struct NotBrjuno : Error {
    using Error::Error;
};

struct AlphaLooksBrjuno : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace bicrit

#endif
