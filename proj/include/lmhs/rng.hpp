#pragma once

#include <cstdint>
#include <random>

#include "lmhs/exact.hpp"

namespace lmhs {

/// Seeded generator with platform-stable uniform draws (std::distributions
/// are implementation-defined, so doubles are built from raw 64-bit output).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  // inclusive bounds
  long long uniform_int(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(eng_() % span);
  }

  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return Complex(re, uniform(im_lo, im_hi));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace lmhs
