#include "mints/direction.hpp"

namespace mints {

bool IntVector::is_zero() const {
  for (Int128 c : coords)
    if (c != 0) return false;
  return true;
}

IntVector subset_sum(const Scheme& scheme, SubsetMask mask) {
  if (mask >= (SubsetMask{1} << scheme.mints()))
    throw ConfigError("subset mask has bits beyond the scheme's mints");
  IntVector v;
  v.coords.assign(scheme.weighings(), 0);
  for (int r = 0; mask != 0; ++r, mask >>= 1) {
    if (!(mask & 1u)) continue;
    for (int j = 0; j < scheme.weighings(); ++j)
      v.coords[j] = checked_add(v.coords[j], scheme.entry(j, r));
  }
  return v;
}

bool Direction::operator<(const Direction& other) const {
  const auto& a = coords_;
  const auto& b = other.coords_;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Direction canonical_direction(const IntVector& v) {
  if (v.is_zero()) throw ZeroVectorError("the zero vector has no direction");
  Int128 g = 0;
  for (Int128 c : v.coords) g = gcd128(g, c);
  std::vector<Int128> coords(v.coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = v.coords[i] / g;
  for (Int128 c : coords) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : coords) x = -x;
    break;
  }
  return Direction(std::move(coords));
}

std::size_t DirectionHash::operator()(const Direction& d) const {
  // splitmix64 over the 64-bit halves of each coordinate
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ d.coords().size();
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
  };
  for (Int128 c : d.coords()) {
    mix(static_cast<std::uint64_t>(static_cast<unsigned __int128>(c)));
    mix(static_cast<std::uint64_t>(static_cast<unsigned __int128>(c) >> 64));
  }
  return static_cast<std::size_t>(h);
}

}  // namespace mints
