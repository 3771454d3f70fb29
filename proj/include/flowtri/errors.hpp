#ifndef FLOWTRI_ERRORS_HPP
#define FLOWTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flowtri {

enum class ErrorKind {
  // Input and usage problems.
  BadInput,
  IsolatedVertex,
  SelfLoop,
  CycleInGraph,
  UnknownVertex,
  UnknownEdge,
  NotThroughVertex,
  NotFull,
  NotValid,
  NotAmple,
  BadChoices,
  BadFraming,
  ExceptionalRoute,
  NotSimplex,
  NotLinearExtension,
  // Enumeration caps.
  RouteExplosion,
  CliqueExplosion,
  FrontierExplosion,
  // A structural claim did not hold on this instance.
  InconsistentFraming,
  NoFlip,
  NoQualifyingComponent,
  MultipleQualifyingComponents,
  CycleDetected,
  NotTransitivelyReduced,
  NoKappaImage,
  AmbiguousKappaImage,
  NonIntegralSolution,
  NegativeCoefficient,
  StringMultiplicity,
  NotGentle,
  // A checked identity between two computations failed.
  ClaimFailed,
};

const char* error_kind_name(ErrorKind kind);

// True for kinds that signal a failed structural claim rather than bad input
// or an exceeded limit.
bool is_consistency_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace flowtri

#endif  // FLOWTRI_ERRORS_HPP
