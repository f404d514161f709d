#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rps {

// Exact rational multiple of pi: value() == num/den * pi, den > 0, lowest terms.
class AnglePi {
 public:
  constexpr AnglePi() = default;
  explicit AnglePi(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;  // radians
  double degrees() const;
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  // "p/q π", "π", "-π", "0"
  std::string to_string() const;

  AnglePi operator-() const;
  AnglePi& operator+=(const AnglePi& o);
  AnglePi& operator-=(const AnglePi& o);
  AnglePi& operator*=(std::int64_t k);
  AnglePi& operator/=(std::int64_t k);

  friend AnglePi operator+(AnglePi a, const AnglePi& b) { return a += b; }
  friend AnglePi operator-(AnglePi a, const AnglePi& b) { return a -= b; }
  friend AnglePi operator*(AnglePi a, std::int64_t k) { return a *= k; }
  friend AnglePi operator*(std::int64_t k, AnglePi a) { return a *= k; }
  friend AnglePi operator/(AnglePi a, std::int64_t k) { return a /= k; }

  friend bool operator==(const AnglePi& a, const AnglePi& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const AnglePi& a, const AnglePi& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rps
