#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "lmhs/errors.hpp"

namespace lmhs {

/// Arbitrary-precision integer scalar for the exact linear-algebra paths.
///
/// A plain value type wrapping boost cpp_int: no expression templates and no
/// implicit conversions from container-like types, so it can serve as an
/// Eigen scalar without tripping overload-resolution probes.
class Int {
 public:
  using Raw = boost::multiprecision::cpp_int;

  Int() : v_(0) {}
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(v) {}
  explicit Int(Raw v) : v_(std::move(v)) {}
  explicit Int(const std::string& s) : v_(s) {}

  const Raw& raw() const { return v_; }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  friend Int operator-(const Int& a) { return Int(-a.v_); }
  friend Int operator+(const Int& a) { return a; }

  Int& operator+=(const Int& o) {
    v_ += o.v_;
    return *this;
  }
  Int& operator-=(const Int& o) {
    v_ -= o.v_;
    return *this;
  }
  Int& operator*=(const Int& o) {
    v_ *= o.v_;
    return *this;
  }
  Int& operator/=(const Int& o) {
    v_ /= o.v_;
    return *this;
  }
  Int& operator%=(const Int& o) {
    v_ %= o.v_;
    return *this;
  }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& a) {
    return os << a.v_;
  }

 private:
  Raw v_;
};

inline Int abs(const Int& a) { return a < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.raw(), b.raw()));
}

inline bool is_zero(const Int& a) { return a == 0; }

inline int sign(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

/// True when d | a (with d == 0 only dividing 0).
inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return a % d == 0;
}

inline double to_double(const Int& a) {
  return a.raw().convert_to<double>();
}

inline long long to_int64(const Int& a) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (a < lo || a > hi) throw InvalidInput("integer does not fit in 64 bits");
  return a.raw().convert_to<long long>();
}

inline std::string to_string(const Int& a) { return a.raw().str(); }

}  // namespace lmhs

namespace Eigen {

template <>
struct NumTraits<lmhs::Int> {
  using Real = lmhs::Int;
  using NonInteger = lmhs::Int;
  using Literal = lmhs::Int;
  using Nested = lmhs::Int;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
