#pragma once

#include <stdexcept>
#include <string>

namespace fano {

enum class Err {
  UnknownVariable,
  SyntaxError,
  RingMismatch,
  BudgetExceeded,
  NonGenericWeight,
  NotSquareFreeMonomial,
  NotATriangulation,
  DegeneratePointConfiguration,
  LabelCollision,
  EmptyInput,
  VariableCountMismatch,
  VertexCountMismatch,
  UnknownName,
  InvalidType,
  NotRollable,
  OddB3,
  WrongDimension,
  PowerSeriesNonTermination,
  GenericityFailure,
  ExponentOverflow,
  IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what),
        kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace fano
