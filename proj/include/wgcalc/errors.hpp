#pragma once

#include <stdexcept>
#include <string>

namespace wgcalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DenominatorVanishes : Error { using Error::Error; };
struct PoleAtInfinity : Error { using Error::Error; };
struct NonzeroConstantTerm : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct EmptyPairPartition : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct ParameterOutOfRange : Error { using Error::Error; };
struct DegreeBoundExceeded : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct NotCosetTypeInvariant : Error { using Error::Error; };
struct EndpointIsRoot : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };

} // namespace wgcalc
