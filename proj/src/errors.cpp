#include "nkcfg/errors.hpp"

namespace nkcfg {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::CoincidentPoints: return "CoincidentPoints";
    case Errc::IdenticalLines: return "IdenticalLines";
    case Errc::ZeroRatio: return "ZeroRatio";
    case Errc::PointOnAxis: return "PointOnAxis";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::HTooSmall: return "HTooSmall";
    case Errc::UnitRatio: return "UnitRatio";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::SingularMap: return "SingularMap";
    case Errc::SameDirection: return "SameDirection";
    case Errc::DependentPencils: return "DependentPencils";
    case Errc::InputNotConfiguration: return "InputNotConfiguration";
    case Errc::RTooLarge: return "RTooLarge";
    case Errc::DegenerateAfterRetries: return "DegenerateAfterRetries";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::BadParams: return "BadParams";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace nkcfg
