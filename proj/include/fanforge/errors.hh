#ifndef FANFORGE_GUARD_ERRORS_HH
#define FANFORGE_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace fanforge
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    // Raised when an operation is called outside its stated domain. Hypothesis
    // failures of lemma checks are reported as INAPPLICABLE verdicts instead.
    class PreconditionError : public Error
    {
    public:
        using Error::Error;
    };

    class StaleChainError : public Error
    {
    public:
        using Error::Error;
    };

    class ShiftRejected : public Error
    {
    public:
        using Error::Error;
    };

    // The color tau sits on an edge from the center to a max-degree vertex,
    // which cannot happen when the fan is maximum.
    class MaximalityViolation : public Error
    {
    public:
        MaximalityViolation(const std::string & what, int tau, int vertex) :
            Error(what), tau(tau), vertex(vertex)
        {
        }

        int tau;
        int vertex;
    };
}

#endif
