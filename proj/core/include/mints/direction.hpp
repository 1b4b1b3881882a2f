#ifndef MINTS_DIRECTION_HPP
#define MINTS_DIRECTION_HPP

#include <cstddef>
#include <vector>

#include "mints/int128.hpp"
#include "mints/scheme.hpp"

namespace mints {

// Exact integer vector with one coordinate per weighing.
struct IntVector {
  std::vector<Int128> coords;

  bool is_zero() const;
  bool operator==(const IntVector& other) const { return coords == other.coords; }
};

// Componentwise sum of the columns selected by the mask; the empty mask
// gives the zero vector.
IntVector subset_sum(const Scheme& scheme, SubsetMask mask);

// Primitive sign-canonical representative of a nonzero integer vector:
// coordinates divided by their gcd, negated if needed so the first nonzero
// coordinate is positive. Two nonzero vectors are collinear exactly when
// their canonical directions are equal.
class Direction {
 public:
  const std::vector<Int128>& coords() const { return coords_; }

  bool operator==(const Direction& other) const { return coords_ == other.coords_; }
  bool operator!=(const Direction& other) const { return !(*this == other); }
  bool operator<(const Direction& other) const;

  friend Direction canonical_direction(const IntVector& v);

 private:
  explicit Direction(std::vector<Int128> coords) : coords_(std::move(coords)) {}
  std::vector<Int128> coords_;
};

// Throws ZeroVectorError for the zero vector.
Direction canonical_direction(const IntVector& v);

struct DirectionHash {
  std::size_t operator()(const Direction& d) const;
};

}  // namespace mints

#endif  // MINTS_DIRECTION_HPP
