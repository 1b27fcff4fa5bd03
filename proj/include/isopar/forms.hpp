#ifndef ISOPAR_FORMS_HPP
#define ISOPAR_FORMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isopar/geometry.hpp"
#include "isopar/matrix.hpp"
#include "isopar/mpoly.hpp"

namespace isopar {

/// Second and third fundamental forms at a focal point, in the tangent
/// coordinates x_1..x_m2 (Eplus), y_1..y_m2 (Eminus), z_1..z_m1 (Ezero).
struct SecondThirdForms {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::vector<MPoly> p;  ///< p_0..p_m1, quadratics
  std::vector<MPoly> q;  ///< q^0..q^m1, cubics
  bool residual_ok = false;

  std::size_t tangent_dim() const { return m1 + 2 * m2; }
  /// Variable indices, all 1-based in their own block.
  std::size_t xvar(std::size_t alpha) const { return alpha - 1; }
  std::size_t yvar(std::size_t mu) const { return m2 + mu - 1; }
  std::size_t zvar(std::size_t p) const { return 2 * m2 + p - 1; }
  std::vector<std::string> variable_names() const;
};

/// Expands (orientation * F)(t x + y + w) over the frame and reads off the
/// strata. Throws ExtractionError naming the first stratum that does not have
/// the required shape; the t^0 remainder only sets residual_ok.
SecondThirdForms ot_expand(const MPoly& F, const AdaptedFrame& frame);

/// p_a(u) = u^T S_a u with S_a = [[0, A_a, B_a], [A_a^T, 0, C_a], [B_a^T, C_a^T, 0]]
/// for a >= 1 and S_0 = diag(I, -I, 0). Vectors are indexed a - 1.
struct ShapeBlocks {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::vector<RMat> A;  ///< m2 x m2
  std::vector<RMat> B;  ///< m2 x m1
  std::vector<RMat> C;  ///< m2 x m1

  /// Assembled symmetric matrix S_a, a = 0..m1.
  RMat S(std::size_t a) const;
};

/// Throws ExtractionError when a coefficient falls outside the block pattern.
ShapeBlocks shape_blocks(const SecondThirdForms& forms);

/// T^p_{alpha mu} = -(coefficient of x_alpha y_mu z_p in q^0) / 2.
struct ThirdFormTensor {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::vector<RMat> full;     ///< m2 x m2, index p - 1
  std::vector<RMat> reduced;  ///< (m2-1) x (m2-1): the distinguished index m2 dropped
};

/// Throws ExtractionError when q^0 has terms other than x y z, or when T is
/// nonzero in the row or column of the distinguished index m2.
ThirdFormTensor third_form_tensor(const SecondThirdForms& forms);

/// One line of a verification report.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};
using CheckList = std::vector<CheckResult>;

/// Upper-block algebra attached to each example.
enum class UpperAlgebra { Quaternion, Octonion };

struct BlockSuiteOptions {
  std::size_t designated = 1;  ///< index d of the distinguished (A, B, C)
  UpperAlgebra algebra = UpperAlgebra::Quaternion;
};
BlockSuiteOptions default_block_options(ExampleId id);

/// Shape-operator identity families, Clifford relations on the upper
/// (m2-1)-blocks and the rank-one property of sum c_a B_a.
CheckList block_identity_suite(const ShapeBlocks& blocks, const BlockSuiteOptions& opt);

/// The two quadratic identities coupling (B, C) with T, over all index tuples.
CheckList mirror_check(const ShapeBlocks& blocks, const ThirdFormTensor& T);

/// Orthogonality of T and the distinguished-index zero pattern.
CheckList third_form_checks(const ThirdFormTensor& T);

/// sum p_a q^a = 0 and the gradient identities for all 0 <= a <= b <= m1.
CheckList pq_gradient_suite(const SecondThirdForms& forms);

/// X o Y := sum_p (X^T T^p Y) e_p and its algebraic identities.
CheckList circ_suite(const ThirdFormTensor& T, UpperAlgebra algebra, std::uint64_t seed);

/// q^a for a >= 1 against the structural formula built from T and A.
CheckList uv_cross_check(const SecondThirdForms& forms, const ShapeBlocks& blocks,
                         const ThirdFormTensor& T);

/// Blocks extracted at dual_frame(frame) against primal B, A and T data.
CheckList duality_check(const MPoly& F, const AdaptedFrame& frame);

/// Rebuilding F from the extracted strata reproduces the expansion.
CheckList roundtrip_check(const MPoly& F, const AdaptedFrame& frame, const SecondThirdForms& forms);

}  // namespace isopar

#endif  // ISOPAR_FORMS_HPP
