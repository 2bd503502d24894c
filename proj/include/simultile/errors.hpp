#ifndef SIMULTILE_ERRORS_HPP
#define SIMULTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simultile {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct NonPositiveModulus : Error {
  NonPositiveModulus() : Error("modulus must be positive") {}
};
struct AmbientMismatch : Error {
  AmbientMismatch() : Error("sets live in different ambient spaces") {}
};
struct NonPositiveDelta : Error {
  NonPositiveDelta() : Error("delta must be positive") {}
};
struct SearchExhausted : Error {
  explicit SearchExhausted(const std::string& what) : Error(what) {}
};
struct GammaTooLarge : Error {
  GammaTooLarge() : Error("gamma must be below min(alpha/q, beta/p)") {}
};
struct NotCoprime : Error {
  NotCoprime() : Error("arguments must be coprime") {}
};
struct InstanceTooLarge : Error {
  explicit InstanceTooLarge(const std::string& what) : Error(what) {}
};
struct BoundaryPoint : Error {
  explicit BoundaryPoint(const std::string& what) : Error(what) {}
};
struct ClosureDiverged : Error {
  explicit ClosureDiverged(const std::string& what) : Error(what) {}
};
struct NonConstantWeightOnCell : Error {
  NonConstantWeightOnCell() : Error("weight function is not constant on a cell") {}
};

}  // namespace simultile

#endif
