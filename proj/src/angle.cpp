#include "rps/angle.hpp"

#include "rps/common.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace rps {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("AnglePi: integer overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("AnglePi: integer overflow");
  return r;
}

}  // namespace

AnglePi::AnglePi(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error("AnglePi: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double AnglePi::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_) * std::numbers::pi;
}

double AnglePi::degrees() const {
  return static_cast<double>(num_) / static_cast<double>(den_) * 180.0;
}

std::string AnglePi::to_string() const {
  if (num_ == 0) return "0";
  std::string s;
  if (num_ == 1) s = "π";
  else if (num_ == -1) s = "-π";
  else s = std::to_string(num_) + "π";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

AnglePi AnglePi::operator-() const { return AnglePi(-num_, den_); }

AnglePi& AnglePi::operator+=(const AnglePi& o) {
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t l = checked_mul(den_ / g, o.den_);
  std::int64_t n = checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_));
  *this = AnglePi(n, l);
  return *this;
}

AnglePi& AnglePi::operator-=(const AnglePi& o) { return *this += -o; }

AnglePi& AnglePi::operator*=(std::int64_t k) {
  std::int64_t g = std::gcd(k, den_);
  *this = AnglePi(checked_mul(num_, k / g), den_ / g);
  return *this;
}

AnglePi& AnglePi::operator/=(std::int64_t k) {
  if (k == 0) throw Error("AnglePi: division by zero");
  std::int64_t g = std::gcd(num_, k);
  if (g == 0) g = 1;
  *this = AnglePi(num_ / g, checked_mul(den_, k / g));
  return *this;
}

std::strong_ordering operator<=>(const AnglePi& a, const AnglePi& b) {
  // Compare a.num/a.den with b.num/b.den using 128-bit cross products.
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

}  // namespace rps
