#include "isopar/geometry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "isopar/error.hpp"

namespace isopar {

namespace {

Vec scaled(Vec v, const Scalar& c) {
  for (auto& e : v) e *= c;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

/// Complex polynomial as a pair (re, im).
struct CPoly {
  MPoly re, im;
};

CPoly cmul_conj(const CPoly& a, const CPoly& b, bool conjugate) {
  // a * conj(b) or a * b
  if (conjugate) return {a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  return {a.re * b.re - a.im * b.im, a.im * b.re + a.re * b.im};
}

}  // namespace

std::string to_string(ExampleId id) { return id == ExampleId::H45 ? "h45" : "fkm69"; }

ExampleId parse_example(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "h45") return ExampleId::H45;
  if (s == "fkm69") return ExampleId::FKM69;
  throw ParseError("unknown example '" + name + "' (expected h45 or fkm69)");
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

// ------------------------------------------------------------ AdaptedFrame

std::vector<Vec> AdaptedFrame::all_vectors() const {
  std::vector<Vec> v{x};
  v.insert(v.end(), normals.begin(), normals.end());
  v.insert(v.end(), eplus.begin(), eplus.end());
  v.insert(v.end(), eminus.begin(), eminus.end());
  v.insert(v.end(), ezero.begin(), ezero.end());
  return v;
}

std::vector<Vec> AdaptedFrame::tangent_vectors() const {
  std::vector<Vec> v(eplus);
  v.insert(v.end(), eminus.begin(), eminus.end());
  v.insert(v.end(), ezero.begin(), ezero.end());
  return v;
}

void AdaptedFrame::check_shape() const {
  if (normals.size() != m1 + 1 || eplus.size() != m2 || eminus.size() != m2 || ezero.size() != m1)
    throw DimensionError("frame: vector counts do not match (m1, m2)");
  if (1 + normals.size() + eplus.size() + eminus.size() + ezero.size() != ambient_dim)
    throw DimensionError("frame: vectors do not span the ambient space");
  for (const auto& v : all_vectors())
    if (v.size() != ambient_dim) throw DimensionError("frame: vector of wrong length");
  if (orientation != 1 && orientation != -1) throw DomainError("frame: orientation must be +1 or -1");
}

RMat AdaptedFrame::gram() const {
  const auto v = all_vectors();
  RMat g(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) {
      g(i, j) = dot(v[i], v[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

bool AdaptedFrame::is_orthonormal() const {
  check_shape();
  return gram() == RMat::identity(ambient_dim);
}

// --------------------------------------------------------------- F_{4,5}

std::size_t h45_var(std::size_t i, std::size_t j, bool imag) {
  if (i < 1 || j > 5 || i >= j) throw DimensionError("h45_var: need 1 <= i < j <= 5");
  std::size_t k = 0;
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a + 1; b <= 5; ++b) {
      if (a == i && b == j) return 2 * k + (imag ? 1 : 0);
      ++k;
    }
  return 0;  // unreachable
}

MPoly build_F_45(Pairing pairing) {
  constexpr std::size_t n = 20;
  // Z_{ij} as complex linear polynomials, Z skew.
  std::array<std::array<CPoly, 5>, 5> z;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      z[i][j] = {MPoly(n), MPoly(n)};
      if (i == j) continue;
      const std::size_t a = std::min(i, j) + 1, b = std::max(i, j) + 1;
      const Scalar sign(i < j ? 1 : -1);
      z[i][j].re = MPoly::variable(n, h45_var(a, b, false), sign);
      z[i][j].im = MPoly::variable(n, h45_var(a, b, true), sign);
    }
  std::array<MPoly, 5> row_norm;
  for (std::size_t i = 0; i < 5; ++i) {
    row_norm[i] = MPoly(n);
    for (std::size_t k = 0; k < 5; ++k) row_norm[i] += z[i][k].re * z[i][k].re + z[i][k].im * z[i][k].im;
  }
  MPoly f(n);
  for (std::size_t i = 0; i < 5; ++i) f += row_norm[i] * row_norm[i] * Scalar::rational(-5, 4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) {
      f += row_norm[i] * row_norm[j] * Scalar::rational(3, 2);
      CPoly inner{MPoly(n), MPoly(n)};
      for (std::size_t k = 0; k < 5; ++k) {
        const CPoly t = cmul_conj(z[i][k], z[j][k], pairing == Pairing::Hermitian);
        inner.re += t.re;
        inner.im += t.im;
      }
      f += (inner.re * inner.re + inner.im * inner.im) * Scalar(-4);
    }
  return f;
}

// ---------------------------------------------------------------- F_{FKM}

MPoly build_F_fkm(const CliffordSystem& sys) {
  const auto rep = verify_clifford(sys);
  if (!rep.pass) throw DomainError("build_F_fkm: invalid Clifford system: " + rep.detail);
  const std::size_t n = sys.dim;
  if (n > kMaxVars) throw DimensionError("build_F_fkm: dimension exceeds 64");
  const MPoly r2 = MPoly::norm_sq(n);
  MPoly sum(n);
  for (const RMat& p : sys.mats) {
    std::vector<MPoly::Term> terms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (p(i, j).is_zero()) continue;
        Monomial m = Monomial::unit(i);
        m = m * Monomial::unit(j);
        terms.emplace_back(m, i == j ? p(i, j) : p(i, j) * Scalar(2));
      }
    const MPoly q = MPoly::from_terms(n, std::move(terms));
    sum += q * q;
  }
  return sum * Scalar(2) - r2 * r2;
}

// --------------------------------------------------------------- frame_45

AdaptedFrame frame_45() {
  constexpr std::size_t n = 20;
  const Scalar r = Scalar::inv_sqrt2();
  auto e = [&](std::size_t i, std::size_t j, bool imag) { return unit(n, h45_var(i, j, imag)); };
  auto comb = [&](int s1, const Vec& a, int s2, const Vec& b) {
    return scaled(add(scaled(a, Scalar(s1)), scaled(b, Scalar(s2))), r);
  };
  const bool X = false, Y = true;

  AdaptedFrame fr;
  fr.ambient_dim = n;
  fr.m1 = 4;
  fr.m2 = 5;
  fr.x = comb(1, e(1, 2, X), 1, e(3, 4, X));
  fr.normals = {
      comb(1, e(1, 2, X), -1, e(3, 4, X)),   // w0
      comb(-1, e(1, 4, X), 1, e(2, 3, X)),   // w1
      comb(1, e(1, 4, Y), 1, e(2, 3, Y)),    // w2
      comb(1, e(1, 3, X), 1, e(2, 4, X)),    // w3
      comb(-1, e(1, 3, Y), 1, e(2, 4, Y)),   // w4
  };
  fr.eplus = {e(3, 5, X), e(3, 5, Y), e(4, 5, X), e(4, 5, Y), e(3, 4, Y)};
  fr.eminus = {e(1, 5, X), e(1, 5, Y), e(2, 5, X), e(2, 5, Y), e(1, 2, Y)};
  fr.ezero = {
      comb(1, e(1, 4, Y), -1, e(2, 3, Y)),   // z1
      comb(1, e(1, 4, X), 1, e(2, 3, X)),    // z2
      comb(-1, e(1, 3, Y), -1, e(2, 4, Y)),  // z3
      comb(-1, e(1, 3, X), 1, e(2, 4, X)),   // z4
  };
  fr.check_shape();
  return fr;
}

// --------------------------------------------------------------- frame_69

namespace fkm {

Vec zeta_eta() {
  Vec v(32);
  v[1] = Scalar::inv_sqrt2();
  v[24] = Scalar::inv_sqrt2();
  return v;
}

Vec f(const CliffordSystem& sys, std::size_t a) {
  if (a >= sys.mats.size()) throw DimensionError("fkm::f: index out of range");
  const Vec ze = zeta_eta();
  return sys.mats[a].apply(ze);
}

Vec g(const CliffordSystem& sys, std::size_t p) {
  if (p < 1 || p >= sys.mats.size()) throw DimensionError("fkm::g: index out of range");
  const Vec p0 = f(sys, 0);
  return sys.mats[p].apply(p0);
}

Vec h(std::size_t alpha) {
  if (alpha < 1 || alpha > 8) throw DimensionError("fkm::h: index must be 1..8");
  return unit(32, 24 + alpha - 1);
}

Vec k(std::size_t mu) {
  if (mu < 1 || mu > 8) throw DimensionError("fkm::k: index must be 1..8");
  return unit(32, mu - 1);
}

}  // namespace fkm

AdaptedFrame frame_69(const CliffordSystem& sys) {
  AdaptedFrame fr;
  fr.ambient_dim = 32;
  fr.m1 = 6;
  fr.m2 = 9;
  fr.x = unit(32, 1);
  fr.normals.push_back(unit(32, 24));
  for (std::size_t alpha = 3; alpha <= 8; ++alpha) fr.normals.push_back(fkm::h(alpha));
  const Scalar minus(-1);
  for (std::size_t a = 1; a <= 9; ++a) fr.eplus.push_back(scaled(fkm::f(sys, a), minus));
  for (std::size_t p = 1; p <= 9; ++p) fr.eminus.push_back(scaled(fkm::g(sys, p), minus));
  for (std::size_t mu = 3; mu <= 8; ++mu) fr.ezero.push_back(scaled(fkm::k(mu), minus));
  fr.check_shape();
  return fr;
}

AdaptedFrame frame_69() { return frame_69(build_clifford_system()); }

StiefelResult stiefel_check(const Vec& point) {
  if (point.size() != 32) throw DimensionError("stiefel_check: point must have 32 entries");
  const Vec zeta(point.begin(), point.begin() + 16);
  const Vec eta(point.begin() + 16, point.end());
  const Scalar half = Scalar::rational(1, 2);
  StiefelResult res;
  std::string failed;
  auto require = [&](bool ok, const std::string& name) {
    if (ok) return;
    ++res.failed_conditions;
    failed += (failed.empty() ? "" : ", ") + name;
  };
  require(dot(zeta, zeta) == half, "|zeta|^2 = 1/2");
  require(dot(eta, eta) == half, "|eta|^2 = 1/2");
  require(dot(zeta, eta).is_zero(), "<zeta,eta> = 0");
  const auto reps = build_c8_rep();
  for (std::size_t i = 0; i < reps.size(); ++i)
    require(dot(reps[i].apply(zeta), eta).is_zero(), "<J" + std::to_string(i + 1) + " zeta,eta> = 0");
  res.pass = res.failed_conditions == 0;
  res.detail = res.pass ? "11/11 conditions hold" : "failed: " + failed;
  return res;
}

// ---------------------------------------------------------------- duality

AdaptedFrame dual_frame(const AdaptedFrame& frame) {
  frame.check_shape();
  const Scalar r = Scalar::inv_sqrt2();
  AdaptedFrame d;
  d.ambient_dim = frame.ambient_dim;
  d.m1 = frame.m2;
  d.m2 = frame.m1;
  d.orientation = -frame.orientation;
  d.x = scaled(add(frame.x, frame.normals[0]), r);
  d.normals.push_back(scaled(sub(frame.x, frame.normals[0]), r));
  d.normals.insert(d.normals.end(), frame.eplus.begin(), frame.eplus.end());
  d.eplus.assign(frame.normals.begin() + 1, frame.normals.end());
  d.eminus = frame.ezero;
  d.ezero = frame.eminus;
  d.check_shape();
  return d;
}

AdaptedFrame frame_for(ExampleId id) { return id == ExampleId::H45 ? frame_45() : frame_69(); }

MPoly polynomial_for(ExampleId id) {
  return id == ExampleId::H45 ? build_F_45() : build_F_fkm(build_clifford_system());
}

}  // namespace isopar
