#ifndef ISOPAR_SCALAR_HPP
#define ISOPAR_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace isopar {

/// Exact element r + s*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Both parts are arbitrary-precision rationals. The representation is
/// canonical: two values are equal iff both parts are equal, and the value is
/// zero iff r == s == 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : r_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class r, mpq_class s = 0);

  /// Parses the rational and sqrt(2) parts from "p/q" or "p" strings.
  static Scalar parse(const std::string& r, const std::string& s = "0");
  static Scalar sqrt2() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar inv_sqrt2() { return Scalar(mpq_class(0), mpq_class(1, 2)); }
  static Scalar rational(long num, long den = 1);

  const mpq_class& rational_part() const { return r_; }
  const mpq_class& sqrt2_part() const { return s_; }

  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
  bool is_rational() const { return sgn(s_) == 0; }

  /// Exact sign of the real number r + s*sqrt(2).
  int sign() const;

  /// Galois conjugate r - s*sqrt(2).
  Scalar galois_conjugate() const { return Scalar(r_, -s_); }
  /// Field norm r^2 - 2 s^2, rational and nonzero for nonzero values.
  mpq_class field_norm() const { return r_ * r_ - 2 * s_ * s_; }
  Scalar inverse() const;

  double to_double() const;
  std::string to_string() const;

  Scalar operator-() const { return Scalar(-r_, -s_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Ordering by real value.
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }

 private:
  mpq_class r_{0};
  mpq_class s_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& v);

/// Exact complex number re + i*im with re, im in Q(sqrt 2).
class CScalar {
 public:
  CScalar() = default;
  CScalar(Scalar re, Scalar im = Scalar()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  CScalar(long value) : re_(value) {}  // NOLINT

  static CScalar i() { return CScalar(Scalar(), Scalar(1)); }

  const Scalar& real() const { return re_; }
  const Scalar& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  CScalar conj() const { return CScalar(re_, -im_); }
  CScalar inverse() const;

  CScalar operator-() const { return CScalar(-re_, -im_); }
  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o);
  CScalar& operator/=(const CScalar& o) { return *this *= o.inverse(); }

  friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
  friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
  friend CScalar operator*(CScalar a, const CScalar& b) { return a *= b; }
  friend CScalar operator/(CScalar a, const CScalar& b) { return a /= b; }
  friend bool operator==(const CScalar& a, const CScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Scalar re_;
  Scalar im_;
};

std::ostream& operator<<(std::ostream& os, const CScalar& v);

}  // namespace isopar

#endif  // ISOPAR_SCALAR_HPP
