#pragma once

#include <stdexcept>
#include <string>

namespace nkcfg {

// Every precondition failure in the library throws Error with a stable code,
// so callers (and tests) can react to the condition instead of parsing text.
enum class Errc {
    CoincidentPoints,
    IdenticalLines,
    ZeroRatio,
    PointOnAxis,
    DegeneratePair,
    HTooSmall,
    UnitRatio,
    NotDiagonal,
    SingularMap,
    SameDirection,
    DependentPencils,
    InputNotConfiguration,
    RTooLarge,
    DegenerateAfterRetries,
    NTooSmall,
    BadParams,
    ResourceLimit,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace nkcfg
