#include "mints/rational.hpp"

#include <cstdlib>
#include <limits>

#include "mints/int128.hpp"

namespace mints {

namespace {

long long narrow(Int128 v, const char* what) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw OverflowError(std::string("rational ") + what + " exceeds 64 bits");
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::reduced(Int128 num, Int128 den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num, "numerator");
  r.den_ = narrow(den, "denominator");
  return r;
}

Rational::Rational(long long num, long long den) { *this = reduced(num, den); }

Rational Rational::parse(const std::string& text) {
  const auto parse_int = [](const std::string& s) -> long long {
    if (s.empty()) throw ConfigError("empty number in rational");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ConfigError("bad rational: '" + s + "'");
    }
    if (pos != s.size()) throw ConfigError("bad rational: '" + s + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator+(const Rational& o) const {
  return reduced(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                 checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return reduced(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw ConfigError("rational division by zero");
  return reduced(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

Rational Rational::operator-() const { return reduced(-static_cast<Int128>(num_), den_); }

bool Rational::operator<(const Rational& o) const {
  return static_cast<Int128>(num_) * o.den_ < static_cast<Int128>(o.num_) * den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace mints
