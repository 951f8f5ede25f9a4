#ifndef PTCHAIN_ERRORS_HPP
#define PTCHAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptchain {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Energy lies outside the open lead band (-2 t0, 2 t0).
struct OmegaOutsideBand : DomainError {
    OmegaOutsideBand(double omega, double t0)
        : DomainError("omega " + std::to_string(omega) + " outside lead band |omega| < 2*t0 with t0 = " + std::to_string(t0)) {}
};

struct SingularMatrix : DomainError {
    explicit SingularMatrix(const std::string& what) : DomainError(what) {}
};

struct EigenFailure : DomainError {
    explicit EigenFailure(const std::string& what) : DomainError(what) {}
};

struct InvalidSize : DomainError {
    explicit InvalidSize(const std::string& what) : DomainError(what) {}
};

struct InvalidDetuning : DomainError {
    explicit InvalidDetuning(const std::string& what) : DomainError(what) {}
};

struct InvalidSpec : DomainError {
    explicit InvalidSpec(const std::string& what) : DomainError(what) {}
};

struct UnsupportedCouplingPattern : DomainError {
    explicit UnsupportedCouplingPattern(const std::string& what) : DomainError(what) {}
};

struct NoInnerChain : DomainError {
    explicit NoInnerChain(const std::string& what) : DomainError(what) {}
};

} // namespace ptchain

#endif
