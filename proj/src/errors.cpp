#include "latlab/errors.hpp"

namespace latlab {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotALattice: return "NotALattice";
    case Err::NoBoundedOrder: return "NoBoundedOrder";
    case Err::CycleDetected: return "CycleDetected";
    case Err::NotComparable: return "NotComparable";
    case Err::UnknownFixture: return "UnknownFixture";
    case Err::ParamOutOfRange: return "ParamOutOfRange";
    case Err::NotAChain: return "NotAChain";
    case Err::NotWeaklyRegular: return "NotWeaklyRegular";
    case Err::NotACovering: return "NotACovering";
    case Err::NotModular: return "NotModular";
    case Err::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case Err::ParseError: return "ParseError";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::NotALadderCovering: return "NotALadderCovering";
    case Err::UnknownChainDescriptor: return "UnknownChainDescriptor";
  }
  return "Unknown";
}

LatticeError::LatticeError(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw LatticeError(code, msg); }

}  // namespace latlab
