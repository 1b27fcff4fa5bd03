#include <gtest/gtest.h>

#include <cstdint>

#include "isopar/algebras.hpp"
#include "isopar/error.hpp"
#include "isopar/forms.hpp"
#include "isopar/geometry.hpp"
#include "reference.hpp"

using namespace isopar;

namespace {

struct Example {
  ExampleId id;
  MPoly F;
  AdaptedFrame frame;
  SecondThirdForms forms;
  ShapeBlocks blocks;
  ThirdFormTensor T;

  explicit Example(ExampleId i)
      : id(i), F(polynomial_for(i)), frame(frame_for(i)), forms(ot_expand(F, frame)),
        blocks(shape_blocks(forms)), T(third_form_tensor(forms)) {}
};

const Example& h45() {
  static const Example e(ExampleId::H45);
  return e;
}
const Example& fkm69() {
  static const Example e(ExampleId::FKM69);
  return e;
}

void expect_all_pass(const CheckList& checks) {
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.detail;
}

}  // namespace

TEST(Forms, H45SecondFormMatchesDisplay) {
  const auto& f = h45().forms;
  ASSERT_TRUE(f.residual_ok);
  const ref::Vars v(f);
  const auto expect = ref::h45_p(v);
  ASSERT_EQ(f.p.size(), expect.size());
  for (std::size_t a = 0; a < expect.size(); ++a) EXPECT_EQ(f.p[a], expect[a]) << "p" << a;
}

TEST(Forms, H45ThirdFormQ0MatchesDisplay) {
  const auto& f = h45().forms;
  EXPECT_EQ(f.q[0], ref::h45_q0(ref::Vars(f)));
}

TEST(Forms, H45Blocks) {
  const auto& b = h45().blocks;
  const auto A = ref::h45_A();
  for (std::size_t a = 0; a < 4; ++a) {
    EXPECT_EQ(b.A[a], A[a]) << "A" << a + 1;
    EXPECT_EQ(b.B[a], ref::rank_one_B(5, 4, a + 1));
    EXPECT_EQ(b.C[a], b.B[a]);
  }
  RMat s0(14, 14);
  for (std::size_t i = 0; i < 5; ++i) {
    s0(i, i) = Scalar(1);
    s0(5 + i, 5 + i) = Scalar(-1);
  }
  EXPECT_EQ(b.S(0), s0);
}

TEST(Forms, H45ThirdFormTensor) {
  const auto& T = h45().T;
  const auto expect = ref::h45_T();
  ASSERT_EQ(T.reduced.size(), 4u);
  for (std::size_t p = 0; p < 4; ++p) EXPECT_EQ(T.reduced[p], expect[p]) << "T" << p + 1;
}

TEST(Forms, FkmStrataAndBlocks) {
  const auto& f = fkm69().forms;
  EXPECT_TRUE(f.residual_ok);
  EXPECT_EQ(f.m1, 6u);
  EXPECT_EQ(f.m2, 9u);
  // p0 is diagonal
  for (const auto& [m, c] : f.p[0].terms()) EXPECT_EQ(m.degree(), 2u);
  const ref::Vars v(f);
  MPoly p0(f.tangent_dim());
  for (int i = 1; i <= 9; ++i)
    p0 += v("x" + std::to_string(i)) * v("x" + std::to_string(i)) - v("y" + std::to_string(i)) * v("y" + std::to_string(i));
  EXPECT_EQ(f.p[0], p0);

  const auto& b = fkm69().blocks;
  const auto A = ref::fkm_A();
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(b.A[a], A[a]) << "A" << a + 3;
    EXPECT_EQ(b.B[a], ref::rank_one_B(9, 6, a + 1)) << "B" << a + 3;
    EXPECT_EQ(b.C[a], b.B[a]);
  }
}

TEST(Forms, FkmThirdFormTensor) {
  const auto& T = fkm69().T;
  const auto expect = ref::fkm_T();
  ASSERT_EQ(T.reduced.size(), 6u);
  for (std::size_t p = 0; p < 6; ++p) EXPECT_EQ(T.reduced[p], expect[p]) << "T" << p + 3;
  for (const auto& t : T.full)
    for (std::size_t i = 0; i < 9; ++i) {
      EXPECT_TRUE(t(8, i).is_zero());
      EXPECT_TRUE(t(i, 8).is_zero());
    }
}

TEST(Forms, WrongOrientationFailsAtLeadingStratum) {
  auto fr = frame_45();
  fr.orientation = -1;
  try {
    ot_expand(build_F_45(), fr);
    FAIL() << "expected ExtractionError";
  } catch (const ExtractionError& e) {
    EXPECT_EQ(e.stratum(), "t^4");
  }
}

TEST(Forms, NonQuarticRejected) {
  EXPECT_THROW(ot_expand(MPoly::norm_sq(20), frame_45()), DomainError);
}

TEST(Forms, BlockIdentitySuites) {
  expect_all_pass(block_identity_suite(h45().blocks, default_block_options(ExampleId::H45)));
  expect_all_pass(block_identity_suite(fkm69().blocks, default_block_options(ExampleId::FKM69)));
}

TEST(Forms, BlockSuiteDetectsCorruption) {
  auto b = h45().blocks;
  b.A[1](0, 0) = Scalar(1);
  const auto checks = block_identity_suite(b, default_block_options(ExampleId::H45));
  bool any_fail = false;
  for (const auto& c : checks) any_fail = any_fail || !c.pass;
  EXPECT_TRUE(any_fail);
}

TEST(Forms, MirrorIdentities) {
  expect_all_pass(mirror_check(h45().blocks, h45().T));
  expect_all_pass(mirror_check(fkm69().blocks, fkm69().T));
}

TEST(Forms, MirrorSingleEntries) {
  // p = q, alpha = beta = 1: only the T-part contributes, 1/2 * 2 * |row 1 of T^p|^2
  const auto& b = h45().blocks;
  const auto& T = h45().T;
  for (std::size_t p = 0; p < 4; ++p) {
    Scalar row;
    for (std::size_t mu = 0; mu < 5; ++mu) row += T.full[p](0, mu) * T.full[p](0, mu);
    EXPECT_EQ(row, Scalar(1));
    // p = q, alpha = beta = 5: 2 sum_a (S^a_{p,5})^2 with S^a_{p,5} = B_a(5, p)
    Scalar s;
    for (std::size_t a = 0; a < 4; ++a) s += b.B[a](4, p) * b.B[a](4, p);
    EXPECT_EQ(s * Scalar(2), Scalar(1));
  }
}

TEST(Forms, ThirdFormOrthogonality) {
  expect_all_pass(third_form_checks(h45().T));
  expect_all_pass(third_form_checks(fkm69().T));
  const auto& t = fkm69().T.reduced;
  EXPECT_EQ(t[0] * t[1] + t[1] * t[0], RMat(8, 8));
}

TEST(Forms, PQAndGradientIdentities) {
  expect_all_pass(pq_gradient_suite(h45().forms));
  expect_all_pass(pq_gradient_suite(fkm69().forms));
}

TEST(Forms, CircleProductSuites) {
  expect_all_pass(circ_suite(h45().T, UpperAlgebra::Quaternion, 42));
  expect_all_pass(circ_suite(fkm69().T, UpperAlgebra::Octonion, 42));
}

TEST(Forms, StructuralThirdForm) {
  expect_all_pass(uv_cross_check(h45().forms, h45().blocks, h45().T));
  expect_all_pass(uv_cross_check(fkm69().forms, fkm69().blocks, fkm69().T));
}

TEST(Forms, Duality) {
  expect_all_pass(duality_check(h45().F, h45().frame));
  expect_all_pass(duality_check(fkm69().F, fkm69().frame));
}

TEST(Forms, RoundTrip) {
  expect_all_pass(roundtrip_check(h45().F, h45().frame, h45().forms));
  expect_all_pass(roundtrip_check(fkm69().F, fkm69().frame, fkm69().forms));
}

TEST(Forms, SecondFormCrossCheckViaSubstitution) {
  // coefficient of t*w0 in F(t x + w0 n0 + sum u_i e_i) equals 8 p0
  const auto& fr = h45().frame;
  const auto tangents = fr.tangent_vectors();
  const std::size_t n = 2 + tangents.size();
  RMat rows(20, n);
  for (std::size_t i = 0; i < 20; ++i) {
    rows(i, 0) = fr.x[i];
    rows(i, 1) = fr.normals[0][i];
    for (std::size_t k = 0; k < tangents.size(); ++k) rows(i, 2 + k) = tangents[k][i];
  }
  const MPoly G = subst_linear(h45().F, rows, n);
  const MPoly tw = G.coefficient_of(0, 1).coefficient_of(1, 1);
  std::vector<std::size_t> slot(tangents.size());
  for (std::size_t k = 0; k < slot.size(); ++k) slot[k] = 2 + k;
  EXPECT_EQ(tw, h45().forms.p[0].embed(n, slot) * Scalar(8));
}
