#include "isopar/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "isopar/error.hpp"

namespace isopar {

namespace {

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ParseError("malformed rational '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar::Scalar(mpq_class r, mpq_class s) : r_(std::move(r)), s_(std::move(s)) {
  r_.canonicalize();
  s_.canonicalize();
}

Scalar Scalar::parse(const std::string& r, const std::string& s) {
  return Scalar(parse_rational(r), parse_rational(s));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

int Scalar::sign() const {
  const int sr = sgn(r_);
  const int ss = sgn(s_);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite signs: compare r^2 with 2 s^2.
  const int cmp = ::cmp(mpq_class(r_ * r_), mpq_class(2 * s_ * s_));
  return cmp > 0 ? sr : (cmp < 0 ? ss : 0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt2)");
  const mpq_class n = field_norm();
  return Scalar(r_ / n, -s_ / n);
}

double Scalar::to_double() const {
  static const double kSqrt2 = std::sqrt(2.0);
  return r_.get_d() + s_.get_d() * kSqrt2;
}

std::string Scalar::to_string() const {
  if (sgn(s_) == 0) return r_.get_str();
  std::string out;
  if (sgn(r_) != 0) out = r_.get_str() + (sgn(s_) > 0 ? "+" : "");
  if (s_ == 1) out += "sqrt2";
  else if (s_ == -1) out += "-sqrt2";
  else out += s_.get_str() + "*sqrt2";
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (sgn(o.r_) != 0) r_ += o.r_;
  if (sgn(o.s_) != 0) s_ += o.s_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (sgn(o.r_) != 0) r_ -= o.r_;
  if (sgn(o.s_) != 0) s_ -= o.s_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const bool a_rat = sgn(s_) == 0;
  const bool b_rat = sgn(o.s_) == 0;
  if (a_rat && b_rat) {
    r_ *= o.r_;
    return *this;
  }
  if (b_rat) {
    r_ *= o.r_;
    s_ *= o.r_;
    return *this;
  }
  if (a_rat) {
    s_ = r_ * o.s_;
    r_ *= o.r_;
    return *this;
  }
  // (a + b r2)(c + d r2) = (ac + 2bd) + (ad + bc) r2
  mpq_class rr = r_ * o.r_ + 2 * s_ * o.s_;
  mpq_class ss = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(rr);
  s_ = std::move(ss);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational()) {
    if (sgn(o.r_) == 0) throw DomainError("division by zero in Q(sqrt2)");
    r_ /= o.r_;
    s_ /= o.r_;
    return *this;
  }
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.to_string(); }

CScalar CScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of complex zero");
  const Scalar n = re_ * re_ + im_ * im_;
  return CScalar(re_ / n, -im_ / n);
}

CScalar& CScalar::operator+=(const CScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Scalar re = re_ * o.re_ - im_ * o.im_;
  Scalar im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string CScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::ostringstream os;
  os << '(' << re_ << ")+i(" << im_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CScalar& v) { return os << v.to_string(); }

}  // namespace isopar
