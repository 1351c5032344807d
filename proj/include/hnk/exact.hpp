#ifndef HNK_EXACT_HPP
#define HNK_EXACT_HPP

#include <complex>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hnk {

/// Arbitrary-precision rational. Expression templates are disabled so the
/// type behaves as a plain value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Exact complex scalar re + i*im with rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(int re) : re_(re) {}  // NOLINT: Eigen builds Scalar(0), Scalar(1)
  GaussRational(long long re) : re_(re) {}  // NOLINT
  GaussRational(Rational re, Rational im = Rational(0))
      : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational& operator+=(const GaussRational& o) {
    if (o.is_zero()) return *this;
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    if (o.is_zero()) return *this;
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = GaussRational();
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  friend GaussRational conj(const GaussRational& a) { return {a.re_, -a.im_}; }
  friend Rational real(const GaussRational& a) { return a.re_; }
  friend Rational imag(const GaussRational& a) { return a.im_; }
  friend Rational abs2(const GaussRational& a) { return a.re_ * a.re_ + a.im_ * a.im_; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re_), static_cast<double>(im_)};
  }
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

using ExactMatrix = Eigen::Matrix<GaussRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussRational, Eigen::Dynamic, 1>;

inline std::ostream& operator<<(std::ostream& os, const GaussRational& x) {
  return os << x.to_string();
}

template <class T>
inline constexpr bool is_exact_scalar_v = false;
template <>
inline constexpr bool is_exact_scalar_v<GaussRational> = true;
template <>
inline constexpr bool is_exact_scalar_v<Rational> = true;

/// Integer-valued exact matrix from a nested initializer list (tests, examples).
ExactMatrix exact_from_ints(std::initializer_list<std::initializer_list<long long>> rows);

}  // namespace hnk

namespace Eigen {

template <>
struct NumTraits<hnk::Rational> : GenericNumTraits<hnk::Rational> {
  using Real = hnk::Rational;
  using NonInteger = hnk::Rational;
  using Nested = hnk::Rational;
  using Literal = hnk::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<hnk::GaussRational> : GenericNumTraits<hnk::GaussRational> {
  using Real = hnk::Rational;
  using NonInteger = hnk::GaussRational;
  using Nested = hnk::GaussRational;
  using Literal = hnk::GaussRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HNK_EXACT_HPP
