#ifndef ISOPAR_GEOMETRY_HPP
#define ISOPAR_GEOMETRY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "isopar/algebras.hpp"
#include "isopar/mpoly.hpp"
#include "isopar/scalar.hpp"

namespace isopar {

using Vec = std::vector<Scalar>;

enum class ExampleId { H45, FKM69 };

std::string to_string(ExampleId id);
/// Accepts "h45" / "fkm69" (case-insensitive); throws ParseError otherwise.
ExampleId parse_example(const std::string& name);

/// Orthonormal frame at a point x of a focal manifold:
/// normals n0..n_{m1}, Eplus / Eminus (m2 vectors each), Ezero (m1 vectors).
///
/// The frame is adapted to orientation * F, so orientation = -1 marks a frame
/// on F^{-1}(-1) read as the focal manifold of -F.
struct AdaptedFrame {
  std::size_t ambient_dim = 0;
  Vec x;
  std::vector<Vec> normals;
  std::vector<Vec> eplus;
  std::vector<Vec> eminus;
  std::vector<Vec> ezero;
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  int orientation = 1;

  /// x, normals, eplus, eminus, ezero in that order.
  std::vector<Vec> all_vectors() const;
  /// Tangent vectors in coordinate order x_1..x_m2, y_1..y_m2, z_1..z_m1.
  std::vector<Vec> tangent_vectors() const;
  std::size_t tangent_dim() const { return m1 + 2 * m2; }
  /// Exact Gram matrix of all_vectors().
  RMat gram() const;
  bool is_orthonormal() const;
  /// Throws DimensionError when vector counts or lengths are inconsistent.
  void check_shape() const;
};

Scalar dot(const Vec& a, const Vec& b);

enum class Pairing { Hermitian, Bilinear };

/// The quartic on the 20 real coordinates of skew 5x5 complex Z, variables
/// ordered x12, y12, x13, y13, ..., x45, y45.
MPoly build_F_45(Pairing pairing = Pairing::Hermitian);
/// Index of the x_ij (imag = false) or y_ij coordinate, 1 <= i < j <= 5.
std::size_t h45_var(std::size_t i, std::size_t j, bool imag);

/// -(|x|^4 - 2 sum <P_i x, x>^2); throws DomainError on an invalid system.
MPoly build_F_fkm(const CliffordSystem& sys);

AdaptedFrame frame_45();

/// The {6,9} vectors on R^32 = (c1, c2, d1, d2) (four 8-blocks).
namespace fkm {
Vec zeta_eta();                       ///< ((e2/sqrt2, 0), (0, e1/sqrt2))
Vec f(const CliffordSystem& sys, std::size_t a);  ///< P_a (zeta, eta), a = 0..9
Vec g(const CliffordSystem& sys, std::size_t p);  ///< P_p P_0 (zeta, eta), p = 1..9
Vec h(std::size_t alpha);             ///< (0, 0, 0, e_alpha)
Vec k(std::size_t mu);                ///< (e_mu, 0, 0, 0)
}  // namespace fkm

/// Frame at ((e2,0),0) on the codimension-7 focal manifold of build_F_fkm.
/// normals ((0,(0,e1)), h_3..h_8); Eplus = -f_a, Eminus = -g_p, Ezero = -k_mu.
AdaptedFrame frame_69(const CliffordSystem& sys);
AdaptedFrame frame_69();

/// The 11 conditions |zeta| = |eta| = 1/sqrt2, zeta _|_ eta, J_i zeta _|_ eta.
struct StiefelResult {
  bool pass = false;
  std::size_t failed_conditions = 0;
  std::string detail;
};
StiefelResult stiefel_check(const Vec& point);

/// x* = (x + n0)/sqrt2, n0* = (x - n0)/sqrt2; normals* = (n0*, Eplus),
/// Eplus* = (n1..n_m1), Eminus* = Ezero, Ezero* = Eminus; multiplicities and
/// orientation swap.
AdaptedFrame dual_frame(const AdaptedFrame& frame);

AdaptedFrame frame_for(ExampleId id);
MPoly polynomial_for(ExampleId id);

}  // namespace isopar

#endif  // ISOPAR_GEOMETRY_HPP
