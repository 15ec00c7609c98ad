#include "domcycle/errors.hpp"

namespace domcycle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MultiEdgeInGraph6: return "MultiEdgeInGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoTwoDisjointCycles: return "NoTwoDisjointCycles";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFourRegular: return "NotFourRegular";
    case ErrorCode::TrailNotInGraph: return "TrailNotInGraph";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::InvalidTransitionSystem: return "InvalidTransitionSystem";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::OverlappingTriangles: return "OverlappingTriangles";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::InvalidTTrail: return "InvalidTTrail";
    case ErrorCode::NoFourValentVertex: return "NoFourValentVertex";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::NotDominatingInImage: return "NotDominatingInImage";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace domcycle
