#pragma once

#include <stdexcept>
#include <string>

namespace latlab {

enum class Err {
  NotALattice,
  NoBoundedOrder,
  CycleDetected,
  NotComparable,
  UnknownFixture,
  ParamOutOfRange,
  NotAChain,
  NotWeaklyRegular,
  NotACovering,
  NotModular,
  EmptyGeneratorSet,
  ParseError,
  UnknownGenerator,
  NotALadderCovering,
  UnknownChainDescriptor,
};

const char* err_name(Err e);

/// Thrown by validating constructors and operations with a stated error contract.
class LatticeError : public std::runtime_error {
 public:
  LatticeError(Err code, const std::string& msg);
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] void fail(Err code, const std::string& msg);

}  // namespace latlab
