#ifndef ISOPAR_ALGEBRAS_HPP
#define ISOPAR_ALGEBRAS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isopar/matrix.hpp"
#include "isopar/scalar.hpp"

namespace isopar {

/// Real quaternion over Q(sqrt 2) in the basis 1, i, j, k.
class Quaternion {
 public:
  Quaternion() = default;
  explicit Quaternion(std::array<Scalar, 4> c) : c_(std::move(c)) {}
  /// Basis element by 1-based index (1 = unit, 2..4 = i, j, k).
  static Quaternion basis(std::size_t idx);

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  Quaternion conj() const;
  Scalar norm_sq() const;

  Quaternion operator-() const;
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c_ == b.c_; }

 private:
  std::array<Scalar, 4> c_{};
};

/// Octonion over Q(sqrt 2) in the basis e1..e8 with e1 the unit.
///
/// Multiplication is the Cayley-Dickson doubling of the quaternions,
///   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
/// with e1..e4 = 1, i, j, k and e5..e8 = l, il, jl, kl.
class Octonion {
 public:
  Octonion() = default;
  explicit Octonion(std::array<Scalar, 8> c) : c_(std::move(c)) {}
  /// Basis element e_idx, idx in 1..8.
  static Octonion basis(std::size_t idx);
  static Octonion from_halves(const Quaternion& a, const Quaternion& b);

  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  Quaternion lower() const;
  Quaternion upper() const;

  Octonion conj() const;
  Scalar norm_sq() const;

  Octonion operator-() const;
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend Octonion operator-(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

 private:
  std::array<Scalar, 8> c_{};
};

Octonion oct_mul(const Octonion& a, const Octonion& b);
inline Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

/// Matrix of x -> x * e_idx on R^4 (idx 1..4 for 1, i, j, k).
RMat quaternion_right_mult_matrix(std::size_t idx);
/// Matrix of x -> x * e_idx on R^8 (idx 2..8); skew-symmetric and orthogonal.
RMat right_mult_matrix(std::size_t idx);

/// The 16x16 complex structures J1..J8: diag(J_i, -J_i) for i <= 7 with J_i
/// right multiplication by e_{i+1}, and J8 = [[0, I], [-I, 0]].
std::vector<RMat> build_c8_rep();

/// Symmetric orthogonal matrices P0..Pm with Pi Pj + Pj Pi = 2 delta_ij I.
struct CliffordSystem {
  std::size_t dim = 0;
  std::vector<RMat> mats;
};

/// P0..P9 on R^32 = (c, d):  P0 (c,d) = (c,-d),  P1 (c,d) = (d,c),
/// P_{1+i} (c,d) = (J_i d, -J_i c).
CliffordSystem build_clifford_system();

struct CliffordReport {
  bool pass = true;
  /// First offending pair (i, j); i == j for a symmetry or square failure.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string detail;
};

CliffordReport verify_clifford(const CliffordSystem& sys);

}  // namespace isopar

#endif  // ISOPAR_ALGEBRAS_HPP
