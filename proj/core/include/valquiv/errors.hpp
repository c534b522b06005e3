#pragma once

#include <stdexcept>
#include <string>

namespace valquiv {

// Failure modes of the library. The CLI prints the enumerator name verbatim
// as `error=<name>`, so these spellings are part of the output contract.
enum class Errc {
  Disconnected,
  RankOne,
  LoopEdge,
  AsymmetricZero,
  NoSymmetrizer,
  Overflow,
  UnorientedEdge,
  UnknownEdge,
  OrientedCycle,
  NotAFilter,
  NotPermutation,
  MixedSignRoot,
  CapExceeded,
  NotASink,
  DifferentBase,
  EmptySequence,
  Stuck,
  InternalPositivityFailure,
  NoSuchClass,
  ParseError,
};

const char* errc_name(Errc c);

class QuiverError : public std::runtime_error {
public:
  QuiverError(Errc code, const std::string& what, int position = -1);

  Errc code() const noexcept { return code_; }
  // 1-based letter index or input line when meaningful, -1 otherwise.
  int position() const noexcept { return position_; }

private:
  Errc code_;
  int position_;
};

[[noreturn]] void fail(Errc code, const std::string& what, int position = -1);

}  // namespace valquiv
