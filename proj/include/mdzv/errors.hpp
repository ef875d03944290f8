#pragma once

#include <stdexcept>
#include <string>

namespace mdzv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A word whose topmost slot carries no frequency label; the leading
// denominator of the extracted term would vanish.
struct MalformedWord : Error {
  using Error::Error;
};

// Two factors of a product were given overlapping generator index ranges.
struct OverlapError : Error {
  using Error::Error;
};

// Terms of different total weight (or arity) fed into one collection.
struct MixedWeight : Error {
  using Error::Error;
};

// Discriminant that is not a negative squarefree integer.
struct BadDiscriminant : Error {
  using Error::Error;
};

// A denominator evaluated to zero; only reachable when the boundary ray
// is added to the summation domain.
struct SingularTerm : Error {
  using Error::Error;
};

struct UnknownIdentity : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace mdzv
