#ifndef ISOPAR_PENCIL_HPP
#define ISOPAR_PENCIL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isopar/forms.hpp"
#include "isopar/matrix.hpp"

namespace isopar {

using cdouble = std::complex<double>;
inline bool is_zero(const cdouble& v) { return v == cdouble(0.0, 0.0); }
using DMat = Mat<cdouble>;

/// A point c = alpha + i beta of the pencil coefficient space.
struct PencilSample {
  std::vector<cdouble> c;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::optional<cdouble> tau;
  bool nongeneric = false;
  std::optional<std::size_t> nullity;
  std::optional<long> r_lambda;
};

/// sum_a c_a S_a over the first c.size() normals (exact).
CMat pencil_matrix(std::span<const CScalar> c, const ShapeBlocks& blocks);
/// Same pencil in binary64.
DMat pencil_matrix(std::span<const cdouble> c, const ShapeBlocks& blocks);

/// Kernel dimension by fraction-free elimination over Q(sqrt2)(i).
std::size_t nullity(const CMat& m);
/// Kernel dimension by singular values below rel_tol * sigma_max.
std::size_t nullity(const DMat& m, double rel_tol = 1e-9);

/// n samples with alpha random, beta projected orthogonal to alpha and
/// rescaled to |alpha|, c = alpha + i beta (so tau = +i in the Gram-Schmidt
/// frame of alpha, beta). k+1 coefficients. Deterministic in seed.
std::vector<PencilSample> sample_hyperquadric(std::size_t k, std::size_t n, std::uint64_t seed);

struct ScanReport {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t k = 0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::map<long, std::size_t> histogram;
  std::vector<std::string> violations;
  std::vector<PencilSample> samples;
};

/// r = m1 + m2 - nullity at each sample; flags generic samples and r outside {0, 1}.
ScanReport r_lambda_scan(const ShapeBlocks& blocks, std::vector<PencilSample> samples,
                         double rel_tol = 1e-9);

/// Blocks with A_a = I (m2 x m2) and B = C = 0.
ShapeBlocks toy_blocks(std::size_t m1, std::size_t m2);

/// Rotates E- by diag(U_d^T, 1) so that the upper block of A_d becomes I.
ShapeBlocks normalize_blocks(const ShapeBlocks& blocks, std::size_t designated);

/// Structural checks at lambda = [1 : i : 0 ...] over (n0, n_d).
CheckList estimate_structure_check(const ShapeBlocks& blocks, std::size_t designated);

/// Exact nullity calibration: S_0 and S_0 + i S_d.
CheckList pencil_calibration(const ShapeBlocks& blocks, std::size_t designated);

/// Rank of the Jacobian of p_0..p_k at random rational points is <= k + 1.
CheckList jacobian_rank_check(const SecondThirdForms& forms, std::size_t points, std::uint64_t seed);

}  // namespace isopar

#endif  // ISOPAR_PENCIL_HPP
