#include "flowtri/errors.hpp"

namespace flowtri {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::CycleInGraph: return "CycleInGraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotThroughVertex: return "NotThroughVertex";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::NotValid: return "NotValid";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::BadChoices: return "BadChoices";
    case ErrorKind::BadFraming: return "BadFraming";
    case ErrorKind::ExceptionalRoute: return "ExceptionalRoute";
    case ErrorKind::NotSimplex: return "NotSimplex";
    case ErrorKind::NotLinearExtension: return "NotLinearExtension";
    case ErrorKind::RouteExplosion: return "RouteExplosion";
    case ErrorKind::CliqueExplosion: return "CliqueExplosion";
    case ErrorKind::FrontierExplosion: return "FrontierExplosion";
    case ErrorKind::InconsistentFraming: return "InconsistentFraming";
    case ErrorKind::NoFlip: return "NoFlip";
    case ErrorKind::NoQualifyingComponent: return "NoQualifyingComponent";
    case ErrorKind::MultipleQualifyingComponents: return "MultipleQualifyingComponents";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case ErrorKind::NoKappaImage: return "NoKappaImage";
    case ErrorKind::AmbiguousKappaImage: return "AmbiguousKappaImage";
    case ErrorKind::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorKind::StringMultiplicity: return "StringMultiplicity";
    case ErrorKind::NotGentle: return "NotGentle";
    case ErrorKind::ClaimFailed: return "ClaimFailed";
  }
  return "Unknown";
}

bool is_consistency_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentFraming:
    case ErrorKind::NoFlip:
    case ErrorKind::NoQualifyingComponent:
    case ErrorKind::MultipleQualifyingComponents:
    case ErrorKind::CycleDetected:
    case ErrorKind::NotTransitivelyReduced:
    case ErrorKind::NoKappaImage:
    case ErrorKind::AmbiguousKappaImage:
    case ErrorKind::NonIntegralSolution:
    case ErrorKind::NegativeCoefficient:
    case ErrorKind::StringMultiplicity:
    case ErrorKind::NotGentle:
    case ErrorKind::ClaimFailed:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace flowtri
