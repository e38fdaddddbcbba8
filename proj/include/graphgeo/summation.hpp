#pragma once

#include <cmath>
#include <complex>

namespace graphgeo {

// Neumaier-compensated accumulator. Error stays O(eps) independent of the
// number of terms, which matters for the 2^N reductions in the oracle.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  void add(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }

  void add(const CompensatedComplexSum& other) noexcept {
    re_.add(other.re_);
    im_.add(other.im_);
  }

  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace graphgeo
