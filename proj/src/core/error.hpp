#pragma once

#include <stdexcept>
#include <string>

namespace tropica {

enum class Errc {
  Parse,
  InvalidArgument,
  DimensionMismatch,
  SemiringMismatch,
  UnsupportedSemiring,
  DivisionByZero,
  Divergent,
  NotConverged,
  NotTriangular,
  NoFiniteCycle,
  IncompatibleType,
  NoNonzeroPermutation,
  DegenerateHyperplane,
  ResidualCheck,
  Overflow,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tropica
