#include "asdimlab/rational.hpp"

#include <limits>

namespace asdim {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr auto hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw RationalOverflow("rational arithmetic overflowed 64 bits");
  Rational out;
  out.num_ = static_cast<std::int64_t>(num);
  out.den_ = static_cast<std::int64_t>(den);
  return out;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational division by zero");
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto lhs = static_cast<__int128>(a.num_) * b.den_;
  const auto rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& x) { return x.num() < 0 ? -x : x; }

}  // namespace asdim
