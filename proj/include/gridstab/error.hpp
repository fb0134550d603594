#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridstab {

// Every failure in the engine is thrown as an Error carrying a stable code.
// The C API maps codes 1:1 onto gs_status values; the CLI maps them onto
// process exit codes.  Keep this enum in sync with gs_status in gridstab.h.
enum class ErrorCode {
  InvalidArgument,    // precondition violated by the caller
  DimensionMismatch,  // matrix shapes incompatible
  SingularMatrix,     // LU pivot below tolerance
  NotSymmetric,       // eigensolver input asymmetric beyond tolerance
  NoConvergence,      // eigensolver sweep cap exhausted
  Disconnected,       // grid graph not connected
  Unreachable,        // no path between the queried nodes
  NotATree,           // operation requires an acyclic connected grid
  AlreadyAdjacent,    // candidate edge already present
  InvalidCode,        // tree code entry out of range
  SingularLoadBlock,  // load sub-block not invertible (block reduction)
  SingularPivot,      // load diagonal pivot ~0 (iterated reduction)
  NotUniform,         // matrix is not a coefficient multiple of one admittance
  NonSymmetricResult, // coupling construction produced an asymmetric matrix
  MultipleZeroModes,  // more than one eigenvalue inside the zero band
  NoZeroMode,         // no eigenvalue inside the zero band
  ZeroAdmittance,     // uniform classifier given c == 0
  OddRequired,        // closed form defined for odd n only
  HopOutOfRange,      // circulant hop k outside 1..(n-1)/2
  RankDeficient,      // least-squares design matrix rank-deficient
  NTooLarge,          // exhaustive enumeration refused above the cap
  EmptyWindow,        // metric window contains no samples
  ParseError,         // malformed input text (JSON/CSV/grid file)
  IoError,            // file unreadable / unwritable
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

const char* error_code_name(ErrorCode code) noexcept;

} // namespace gridstab
