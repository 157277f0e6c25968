#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ribbon {

// Base class for all rejections of mathematically invalid input. name() is the
// stable identifier the CLI prints before the message; tests match on it.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define RIBBON_DOMAIN_ERROR(NAME)                                        \
    class NAME : public DomainError {                                    \
    public:                                                              \
        explicit NAME(const std::string& what) : DomainError(#NAME, what) {} \
    }

RIBBON_DOMAIN_ERROR(AlphaNotInvolution);
RIBBON_DOMAIN_ERROR(AlphaHasFixedPoint);
RIBBON_DOMAIN_ERROR(Disconnected);
RIBBON_DOMAIN_ERROR(DegreeTooSmall);
RIBBON_DOMAIN_ERROR(EmptyGraph);
RIBBON_DOMAIN_ERROR(NonIntegralGenus);
RIBBON_DOMAIN_ERROR(LoopContraction);
RIBBON_DOMAIN_ERROR(UnsatisfiableParameters);
RIBBON_DOMAIN_ERROR(TooLarge);
RIBBON_DOMAIN_ERROR(IncompleteCensus);
RIBBON_DOMAIN_ERROR(GenusZeroUnsupported);
RIBBON_DOMAIN_ERROR(NotFaithful);
RIBBON_DOMAIN_ERROR(NonPositivePerimeter);
RIBBON_DOMAIN_ERROR(NonPositiveLength);
RIBBON_DOMAIN_ERROR(PointOutsideAtlas);
RIBBON_DOMAIN_ERROR(NonIntegerLengths);
RIBBON_DOMAIN_ERROR(PoleAtLatticePoint);
RIBBON_DOMAIN_ERROR(UnsupportedTau);
RIBBON_DOMAIN_ERROR(InvalidGraphJson);

#undef RIBBON_DOMAIN_ERROR

} // namespace ribbon
