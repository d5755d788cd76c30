#pragma once

// Eigen dense types over exact rationals.

#include <Eigen/Core>

#include "nilhecke/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<nilhecke::Rational> : GenericNumTraits<nilhecke::Rational> {
  using Real = nilhecke::Rational;
  using NonInteger = nilhecke::Rational;
  using Nested = nilhecke::Rational;
  using Literal = nilhecke::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };

  // Exact arithmetic: no rounding slack anywhere.
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace nilhecke {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace nilhecke
