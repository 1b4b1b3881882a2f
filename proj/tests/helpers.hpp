#ifndef MINTS_TESTS_HELPERS_HPP
#define MINTS_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "mints/scheme.hpp"

namespace mints::testing {

// Random valid two-weighing scheme: entries uniform in [0, max_entry],
// zero columns resampled away.
inline Scheme random_scheme(std::mt19937& rng, int n, long long max_entry) {
  std::uniform_int_distribution<long long> dist(0, max_entry);
  std::vector<long long> p(n), q(n);
  for (int r = 0; r < n; ++r) {
    do {
      p[r] = dist(rng);
      q[r] = dist(rng);
    } while (p[r] == 0 && q[r] == 0);
  }
  return Scheme::classic(std::move(p), std::move(q));
}

}  // namespace mints::testing

#endif  // MINTS_TESTS_HELPERS_HPP
