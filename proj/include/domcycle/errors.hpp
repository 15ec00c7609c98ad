#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domcycle {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  MalformedGraph6,
  MultiEdgeInGraph6,
  MalformedInput,
  Disconnected,
  NoTwoDisjointCycles,
  TooLarge,
  NotFourRegular,
  TrailNotInGraph,
  NotSimple,
  InvalidTransitionSystem,
  NotAMatching,
  OverlappingTriangles,
  NotDominating,
  NotACycle,
  InvalidTTrail,
  NoFourValentVertex,
  NotHamiltonian,
  NotDominatingInImage,
  PreconditionViolated,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace domcycle
