#ifndef SEPGRAPH_SCALAR_HPP
#define SEPGRAPH_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sepgraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Gaussian rational: re + im*i with exact rational parts.
struct Scalar {
  BigRat re{0};
  BigRat im{0};

  Scalar() = default;
  Scalar(BigRat r) : re(std::move(r)) {}
  Scalar(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
  Scalar(long n) : re(n) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(BigRat(1)); }
  static Scalar imag_unit() { return Scalar(BigRat(0), BigRat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
  Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const = default;

  /// Exact text form, e.g. "1", "-2/3", "i", "1/2-3i", never floating point.
  std::string str() const;
};

inline std::string rat_str(const BigRat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1)
    s += "/" + denominator(r).str();
  return s;
}

inline std::string Scalar::str() const {
  if (is_zero())
    return "0";
  std::string s;
  if (re != 0)
    s = rat_str(re);
  if (im != 0) {
    if (!s.empty() && im > 0)
      s += "+";
    if (im == 1)
      s += "i";
    else if (im == -1)
      s += "-i";
    else
      s += rat_str(im) + "i";
  }
  return s;
}

} // namespace sepgraph

#endif
