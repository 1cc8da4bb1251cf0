#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cvspec {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Exact rational number with a normalized 64-bit numerator/denominator.
///
/// Intermediate products are formed in 128-bit arithmetic; a result that does
/// not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.den_ +
                         static_cast<detail::wide_int>(b.num_) * a.den_,
                     static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.num_,
                     static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_wide(static_cast<detail::wide_int>(a.num_) * b.den_,
                     static_cast<detail::wide_int>(a.den_) * b.num_);
  }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<detail::wide_int>(a.num_) * b.den_ <
           static_cast<detail::wide_int>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  /// Exact conversion of an integral double; nullopt for anything else.
  static std::optional<Rational> from_integral(double x) {
    if (!(x == x) || x > 9.0e15 || x < -9.0e15) return std::nullopt;
    const auto i = static_cast<std::int64_t>(x);
    if (static_cast<double>(i) != x) return std::nullopt;
    return Rational(i);
  }

 private:
  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
  }

  static detail::wide_int gcd128(detail::wide_int a, detail::wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const detail::wide_int r = a % b;
      a = b;
      b = r;
    }
    return a;
  }

  static Rational from_wide(detail::wide_int num, detail::wide_int den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const detail::wide_int g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr detail::wide_int lim = static_cast<detail::wide_int>(INT64_MAX);
    if (num > lim || num < -lim || den > lim) {
      throw std::overflow_error("Rational: 64-bit overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cvspec
