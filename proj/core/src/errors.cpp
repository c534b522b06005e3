#include "valquiv/errors.hpp"

namespace valquiv {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Disconnected: return "Disconnected";
    case Errc::RankOne: return "RankOne";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::AsymmetricZero: return "AsymmetricZero";
    case Errc::NoSymmetrizer: return "NoSymmetrizer";
    case Errc::Overflow: return "Overflow";
    case Errc::UnorientedEdge: return "UnorientedEdge";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::OrientedCycle: return "OrientedCycle";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::MixedSignRoot: return "MixedSignRoot";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotASink: return "NotASink";
    case Errc::DifferentBase: return "DifferentBase";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::Stuck: return "Stuck";
    case Errc::InternalPositivityFailure: return "InternalPositivityFailure";
    case Errc::NoSuchClass: return "NoSuchClass";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

QuiverError::QuiverError(Errc code, const std::string& what, int position)
    : std::runtime_error(what), code_(code), position_(position) {}

void fail(Errc code, const std::string& what, int position) {
  throw QuiverError(code, what, position);
}

}  // namespace valquiv
