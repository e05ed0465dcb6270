#pragma once

#include <stdexcept>
#include <string>

namespace vdl
{
    /// Argument outside the mathematical domain of an operation.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// A documented precondition of a closed-form result does not hold.
    class PreconditionError : public DomainError
    {
    public:
        using DomainError::DomainError;
    };

    /// Request exceeds what a numerical method is built to handle.
    class CapabilityError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Iteration or quadrature did not reach its tolerance. Carries the best
    /// value reached so far and the associated error estimate.
    class NumericalError : public std::runtime_error
    {
    public:
        NumericalError(const std::string &what, double partial, double error_estimate)
            : std::runtime_error(what), partial_(partial), error_estimate_(error_estimate)
        {
        }

        double partial() const noexcept { return partial_; }
        double error_estimate() const noexcept { return error_estimate_; }

    private:
        double partial_;
        double error_estimate_;
    };
}
