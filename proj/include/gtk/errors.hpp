#pragma once

#include <stdexcept>
#include <string>

namespace gtk {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad cycle syntax, image out of range, bad spec JSON.
struct FormatError : Error {
  using Error::Error;
};

// Parameter outside its documented range.
struct RangeError : Error {
  using Error::Error;
};

// A formula input required by the selected formula is absent.
struct MissingField : Error {
  using Error::Error;
};

// A configured resource guard (order, degree, subgroup count, ...) was hit.
struct GuardExceeded : Error {
  using Error::Error;
};

// The generator-image map of a semidirect action does not define an
// automorphism of N, or does not respect the complement's relations.
struct NotAnAutomorphism : Error {
  using Error::Error;
};

struct NotSubgroup : Error {
  using Error::Error;
};

struct NotNormal : Error {
  using Error::Error;
};

struct NotAPGroup : Error {
  using Error::Error;
};

// p divides |H| where a coprime action is required.
struct CoprimalityViolation : Error {
  using Error::Error;
};

// An internal consistency check failed, e.g. a complement whose existence
// is guaranteed was not found by the exhaustive sweep.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace gtk
