#pragma once

#include <stdexcept>
#include <string>

namespace satake {

// Base class for all contract violations raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InexactDivision : Error {
  using Error::Error;
};
struct AlphabetTooShort : Error {
  using Error::Error;
};
struct ZeroDenominatorForm : Error {
  using Error::Error;
};
struct CardinalityMismatch : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotSquare : Error {
  using Error::Error;
};
struct NotSkew : Error {
  using Error::Error;
};
struct BadIndex : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct NotIsotropicBasis : Error {
  using Error::Error;
};
struct ParityViolation : Error {
  using Error::Error;
};
struct RankTooSmall : Error {
  using Error::Error;
};
struct RepeatedTValues : Error {
  using Error::Error;
};
struct BadLabel : Error {
  using Error::Error;
};

}  // namespace satake
