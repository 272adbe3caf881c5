#pragma once

#include <stdexcept>
#include <string>

namespace portes {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PORTES_DEFINE_ERROR(name)                                  \
    struct name : Error {                                           \
        explicit name(const std::string& what) : Error(what) {}     \
    }

PORTES_DEFINE_ERROR(NotPositiveDefinite);
PORTES_DEFINE_ERROR(Singular);
PORTES_DEFINE_ERROR(LagTooLarge);
PORTES_DEFINE_ERROR(SingularCovariance);
PORTES_DEFINE_ERROR(NonPositiveDeterminant);
PORTES_DEFINE_ERROR(ZeroDenominator);
PORTES_DEFINE_ERROR(EmptyOrder);
PORTES_DEFINE_ERROR(NonStationary);
PORTES_DEFINE_ERROR(NonInvertible);
PORTES_DEFINE_ERROR(RankDeficient);
PORTES_DEFINE_ERROR(AdapterFitFailure);
PORTES_DEFINE_ERROR(InvalidAlpha);
PORTES_DEFINE_ERROR(InvalidBeta);
PORTES_DEFINE_ERROR(DegenerateQuantiles);
PORTES_DEFINE_ERROR(CovarianceSingular);
PORTES_DEFINE_ERROR(StableParamsInvalid);
PORTES_DEFINE_ERROR(DomainError);

#undef PORTES_DEFINE_ERROR

}  // namespace portes
