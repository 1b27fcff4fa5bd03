#include <gtest/gtest.h>

#include <cmath>

#include "isopar/error.hpp"
#include "isopar/forms.hpp"
#include "isopar/geometry.hpp"
#include "isopar/pencil.hpp"

using namespace isopar;

namespace {

const ShapeBlocks& h45_blocks() {
  static const ShapeBlocks b = shape_blocks(ot_expand(build_F_45(), frame_45()));
  return b;
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<CScalar> unit_c(std::size_t dim, std::size_t i, CScalar v) {
  std::vector<CScalar> c(dim);
  c[0] = CScalar(1);
  c[i] = v;
  return c;
}

}  // namespace

TEST(Pencil, BasisCoefficientsGiveShapeOperators) {
  const auto& b = h45_blocks();
  std::vector<CScalar> c(5);
  c[0] = CScalar(1);
  const CMat m0 = pencil_matrix(std::span<const CScalar>(c), b);
  EXPECT_EQ(m0, b.S(0).map([](const Scalar& s) { return CScalar(s); }));
  c[0] = CScalar();
  c[1] = CScalar(1);
  const CMat m1 = pencil_matrix(std::span<const CScalar>(c), b);
  EXPECT_EQ(m1, b.S(1).map([](const Scalar& s) { return CScalar(s); }));
  // block form: zero diagonal blocks, A1 in the upper off-diagonal slot
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_TRUE(m1(i, j).is_zero());
      EXPECT_EQ(m1(i, 5 + j), CScalar(b.A[0](i, j)));
    }
}

TEST(Pencil, MatrixIsSymmetric) {
  const auto samples = sample_hyperquadric(4, 10, 3);
  for (const auto& s : samples) {
    const DMat m = pencil_matrix(std::span<const cdouble>(s.c), h45_blocks());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), m(j, i));
  }
}

TEST(Pencil, ExactNullities) {
  const auto& b = h45_blocks();
  EXPECT_EQ(nullity(pencil_matrix(std::span<const CScalar>(unit_c(5, 1, CScalar())), b)), 4u);
  const auto c = unit_c(5, 1, CScalar::i());
  EXPECT_EQ(nullity(pencil_matrix(std::span<const CScalar>(c), b)), 8u);
}

TEST(Pencil, FloatingAgreesWithExact) {
  const auto& b = h45_blocks();
  for (std::size_t a = 1; a <= 4; ++a) {
    const auto c = unit_c(5, a, CScalar::i());
    std::vector<cdouble> cd(5);
    for (std::size_t i = 0; i < 5; ++i) cd[i] = cdouble(c[i].real().to_double(), c[i].imag().to_double());
    EXPECT_EQ(nullity(pencil_matrix(std::span<const CScalar>(c), b)),
              nullity(pencil_matrix(std::span<const cdouble>(cd), b)));
  }
}

TEST(Pencil, SamplesLieOnHyperquadric) {
  const auto samples = sample_hyperquadric(6, 200, 99);
  ASSERT_EQ(samples.size(), 200u);
  for (const auto& s : samples) {
    EXPECT_LT(std::abs(dotd(s.alpha, s.beta)), 1e-12);
    EXPECT_LT(std::abs(dotd(s.alpha, s.alpha) - dotd(s.beta, s.beta)), 1e-12);
    EXPECT_TRUE(s.nongeneric);
  }
}

TEST(Pencil, SamplerIsDeterministic) {
  const auto a = sample_hyperquadric(4, 20, 42);
  const auto b = sample_hyperquadric(4, 20, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].alpha, b[i].alpha);
    EXPECT_EQ(a[i].beta, b[i].beta);
  }
  EXPECT_NE(sample_hyperquadric(4, 1, 43)[0].alpha, a[0].alpha);
  EXPECT_THROW(sample_hyperquadric(0, 1, 1), DomainError);
}

TEST(Pencil, OneDimensionalFamilyHasConstantNullity) {
  ShapeBlocks b = h45_blocks();
  b.m1 = 1;
  b.A.resize(1);
  b.B = {b.B[0].block(0, 0, 5, 1)};
  b.C = {b.C[0].block(0, 0, 5, 1)};
  const auto rep = r_lambda_scan(b, sample_hyperquadric(1, 50, 5));
  EXPECT_EQ(rep.histogram.size(), 1u);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Pencil, H45ScanGivesRankOne) {
  const auto rep = r_lambda_scan(h45_blocks(), sample_hyperquadric(4, 1000, 42));
  EXPECT_EQ(rep.histogram, (std::map<long, std::size_t>{{1, 1000}}));
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Pencil, ToyBlocksGiveRankZero) {
  const auto rep = r_lambda_scan(toy_blocks(1, 3), sample_hyperquadric(1, 100, 7));
  EXPECT_EQ(rep.histogram, (std::map<long, std::size_t>{{0, 100}}));
}

TEST(Pencil, OffQuadricSampleIsFlagged) {
  auto samples = sample_hyperquadric(4, 2, 1);
  samples[1].beta[0] += 0.5;
  const auto rep = r_lambda_scan(h45_blocks(), samples);
  EXPECT_EQ(rep.violations.size(), 1u);
}

TEST(Pencil, StructureAndCalibration) {
  for (const auto& checks : {estimate_structure_check(h45_blocks(), 1), pencil_calibration(h45_blocks(), 1)})
    for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
  EXPECT_THROW(normalize_blocks(h45_blocks(), 0), DimensionError);
}

TEST(Pencil, JacobianRank) {
  const auto forms = ot_expand(build_F_45(), frame_45());
  for (const auto& c : jacobian_rank_check(forms, 10, 1)) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
}
