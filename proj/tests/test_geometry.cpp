#include <gtest/gtest.h>

#include "isopar/algebras.hpp"
#include "isopar/error.hpp"
#include "isopar/geometry.hpp"

using namespace isopar;

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

const CliffordSystem& sys() {
  static const CliffordSystem s = build_clifford_system();
  return s;
}

}  // namespace

TEST(Geometry, ExampleNames) {
  EXPECT_EQ(parse_example(to_string(ExampleId::H45)), ExampleId::H45);
  EXPECT_EQ(parse_example(to_string(ExampleId::FKM69)), ExampleId::FKM69);
  EXPECT_THROW(parse_example("e8"), ParseError);
}

TEST(Geometry, F45ValueAtBasePoint) {
  const MPoly f = build_F_45();
  Vec p(20);
  p[h45_var(1, 2, false)] = Scalar::inv_sqrt2();
  p[h45_var(3, 4, false)] = Scalar::inv_sqrt2();
  EXPECT_EQ(f.eval(p), Scalar(1));
  EXPECT_EQ(f.eval(frame_45().x), Scalar(1));
}

TEST(Geometry, F45InvariantUnderIndexSwaps) {
  const MPoly f = build_F_45();
  auto swap_matrix = [](std::size_t a, std::size_t b) {
    // permutes the index labels a <-> b of z_ij, with the skew sign
    RMat m(20, 20);
    auto relabel = [&](std::size_t i) { return i == a ? b : (i == b ? a : i); };
    for (std::size_t i = 1; i <= 5; ++i)
      for (std::size_t j = i + 1; j <= 5; ++j) {
        std::size_t ni = relabel(i), nj = relabel(j);
        long sign = 1;
        if (ni > nj) {
          std::swap(ni, nj);
          sign = -1;
        }
        for (bool im : {false, true}) m(h45_var(i, j, im), h45_var(ni, nj, im)) = Scalar(sign);
      }
    return m;
  };
  EXPECT_EQ(subst_linear(f, swap_matrix(1, 2), 20), f);
  EXPECT_EQ(subst_linear(f, swap_matrix(3, 4), 20), f);
}

TEST(Geometry, BilinearPairingIsNotIsoparametric) {
  EXPECT_FALSE(verify_cm(build_F_45(Pairing::Bilinear), 4, 4, 5).pass());
}

TEST(Geometry, H45FrameIsOrthonormal) {
  const auto fr = frame_45();
  EXPECT_EQ(fr.m1, 4u);
  EXPECT_EQ(fr.m2, 5u);
  EXPECT_EQ(fr.all_vectors().size(), 20u);
  EXPECT_TRUE(fr.is_orthonormal());
  EXPECT_EQ(fr.gram(), RMat::identity(20));
}

TEST(Geometry, FkmPolynomialValues) {
  const MPoly f = build_F_fkm(sys());
  EXPECT_EQ(f.eval(fkm::zeta_eta()), Scalar(-1));
  EXPECT_EQ(f.eval(unit(32, 1)), Scalar(1));  // ((e2, 0), 0)
}

TEST(Geometry, FkmPolynomialRejectsBrokenSystem) {
  auto s = sys();
  s.mats[2] = s.mats[1];
  EXPECT_THROW(build_F_fkm(s), DomainError);
}

TEST(Geometry, FkmFrame) {
  const auto fr = frame_69(sys());
  EXPECT_EQ(fr.m1, 6u);
  EXPECT_EQ(fr.m2, 9u);
  EXPECT_EQ(fr.gram(), RMat::identity(32));
  EXPECT_EQ(fr.x, unit(32, 1));
}

TEST(Geometry, P9PairingsOnFrameVectors) {
  const auto& P = sys().mats;
  for (std::size_t a = 3; a <= 8; ++a)
    for (std::size_t m = 3; m <= 8; ++m) {
      // sign as produced by the block definitions of P9 and J8
      EXPECT_EQ(dot(P[9].apply(fkm::h(a)), fkm::k(m)), Scalar(a == m ? 1 : 0));
      for (std::size_t i = 1; i <= 7; ++i) EXPECT_TRUE(dot(P[1 + i].apply(fkm::h(a)), fkm::k(m)).is_zero());
    }
}

TEST(Geometry, StiefelConditions) {
  const Vec p = fkm::zeta_eta();
  EXPECT_TRUE(stiefel_check(p).pass);
  Vec scaled = p;
  for (std::size_t i = 16; i < 32; ++i) scaled[i] *= Scalar(2);
  const auto bad = stiefel_check(scaled);
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.detail.find("|eta|^2"), std::string::npos);
  Vec same(32);
  same[0] = Scalar::inv_sqrt2();
  same[16] = Scalar::inv_sqrt2();
  const auto r = stiefel_check(same);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.detail.find("<zeta,eta>"), std::string::npos);
  EXPECT_THROW(stiefel_check(Vec(31)), DimensionError);
}

TEST(Geometry, DualFrame) {
  for (auto id : {ExampleId::H45, ExampleId::FKM69}) {
    const auto fr = frame_for(id);
    const auto d = dual_frame(fr);
    EXPECT_EQ(d.m1, fr.m2);
    EXPECT_EQ(d.m2, fr.m1);
    EXPECT_EQ(d.orientation, -fr.orientation);
    EXPECT_TRUE(d.is_orthonormal());
    // the dual point lies on the other focal submanifold
    EXPECT_EQ(polynomial_for(id).eval(d.x), Scalar(-fr.orientation));
    const auto dd = dual_frame(d);
    EXPECT_EQ(dd.x, fr.x);
  }
}

TEST(Geometry, FrameShapeErrors) {
  auto fr = frame_45();
  fr.eplus.pop_back();
  EXPECT_THROW(fr.check_shape(), Error);
}
