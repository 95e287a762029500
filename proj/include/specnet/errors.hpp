#pragma once

#include <stdexcept>
#include <string>

namespace specnet {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SPECNET_ERROR_TYPE(Name)                                              \
    struct Name : Error {                                                     \
        explicit Name(const std::string& what = #Name) : Error(what) {}       \
    }

SPECNET_ERROR_TYPE(DivisionByZero);
SPECNET_ERROR_TYPE(BackendMismatch);
SPECNET_ERROR_TYPE(UnboundGenerator);
SPECNET_ERROR_TYPE(PoleAtEvaluationPoint);
SPECNET_ERROR_TYPE(NotLaurentPolynomial);
SPECNET_ERROR_TYPE(EndpointMismatch);
SPECNET_ERROR_TYPE(NotClosed);
SPECNET_ERROR_TYPE(UnknownName);
SPECNET_ERROR_TYPE(NoResolutionChosen);
SPECNET_ERROR_TYPE(NonGenericParameters);
SPECNET_ERROR_TYPE(MissingParameter);
SPECNET_ERROR_TYPE(NoSolution);
SPECNET_ERROR_TYPE(NonUniqueSolution);
SPECNET_ERROR_TYPE(NonDiagonalizableMonodromy);
SPECNET_ERROR_TYPE(NoAdmissibleFraming);
SPECNET_ERROR_TYPE(DegenerateFlags);
SPECNET_ERROR_TYPE(QuadraticDegenerate);
SPECNET_ERROR_TYPE(DegenerateLength);
SPECNET_ERROR_TYPE(UnknownNetworkAction);
SPECNET_ERROR_TYPE(InvalidTokenSequence);
SPECNET_ERROR_TYPE(NonUnitDeterminant);
SPECNET_ERROR_TYPE(NeitherSignMatches);
SPECNET_ERROR_TYPE(SeedAtSingularity);
SPECNET_ERROR_TYPE(StepBudgetExhausted);
SPECNET_ERROR_TYPE(UnresolvedSaddle);
SPECNET_ERROR_TYPE(BranchTrackingFailure);
SPECNET_ERROR_TYPE(NonPositiveParameter);
SPECNET_ERROR_TYPE(BadInput);

#undef SPECNET_ERROR_TYPE

} // namespace specnet
