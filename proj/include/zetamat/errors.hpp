#pragma once

#include <stdexcept>
#include <string>

namespace zetamat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotComparable : Error {
  using Error::Error;
};
struct RankTooLarge : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NotSquare : Error {
  using Error::Error;
};
struct NotUnipotentUpperTriangular : Error {
  using Error::Error;
};
struct PosetMismatch : Error {
  using Error::Error;
};
struct NonIntegerValues : Error {
  using Error::Error;
};
struct SizeCapExceeded : Error {
  using Error::Error;
};
struct InvalidLengths : Error {
  using Error::Error;
};
struct InvalidCycleType : Error {
  using Error::Error;
};
struct InexactDivision : Error {
  using Error::Error;
};
struct FactorizationMismatch : Error {
  using Error::Error;
};
struct InternalMismatch : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace zetamat
