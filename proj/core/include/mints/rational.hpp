#ifndef MINTS_RATIONAL_HPP
#define MINTS_RATIONAL_HPP

#include <string>

#include "mints/errors.hpp"

namespace mints {

// Exact rational over 64-bit numerator and denominator, always reduced,
// denominator always positive. Intermediate products run in 128 bits;
// results that do not fit back into 64 bits raise OverflowError.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  // Accepts "2", "-7", "3/2", "-1/3".
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // ConfigError on zero divisor
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  // "4", "-4", "10/3", "-1/3".
  std::string to_string() const;

 private:
  static Rational reduced(__int128 num, __int128 den);

  long long num_;
  long long den_;
};

}  // namespace mints

#endif  // MINTS_RATIONAL_HPP
