#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "isopar/algebras.hpp"
#include "isopar/error.hpp"
#include "isopar/geometry.hpp"
#include "isopar/io.hpp"
#include "isopar/mpoly.hpp"

using namespace isopar;

namespace {

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

// Central differences at random rational points in [-1/4, 1/4]^n, compared
// against the symbolic gradient in the max norm.
double max_fd_error(const MPoly& f, std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  const auto g = grad(f);
  const double h = 1e-6;
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    std::vector<double> x(f.nvars());
    for (auto& v : x) v = static_cast<double>(static_cast<long>(rng() % 33) - 16) / 64.0;
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      auto xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (f.eval(std::span<const double>(xp)) - f.eval(std::span<const double>(xm))) / (2 * h);
      const double sym = g[i].eval(std::span<const double>(x));
      err = std::max(err, std::abs(fd - sym));
      scale = std::max(scale, std::abs(sym));
    }
    worst = std::max(worst, err / scale);
  }
  return worst;
}

}  // namespace

TEST(MPoly, GradientOfMonomial) {
  const MPoly f = var(2, 0) * var(2, 0);
  const auto g = grad(f);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], var(2, 0) * Scalar(2));
  EXPECT_TRUE(g[1].is_zero());
}

TEST(MPoly, GradientOfNormFourth) {
  const std::size_t n = 6;
  const MPoly r2 = MPoly::norm_sq(n);
  const auto g = grad(r2 * r2);
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(g[i], var(n, i) * r2 * Scalar(4));
}

TEST(MPoly, GradientMatchesFiniteDifferencesOnF45) {
  EXPECT_LT(max_fd_error(build_F_45(), 2024, 5), 1e-9);
}

TEST(MPoly, LaplacianExamples) {
  EXPECT_EQ(laplacian(MPoly::norm_sq(7)), MPoly::constant(7, Scalar(14)));
  const MPoly r2 = MPoly::norm_sq(32);
  EXPECT_EQ(laplacian(r2 * r2), r2 * Scalar(136));
  const auto sys = build_clifford_system();
  RMat p0 = sys.mats[0];
  MPoly form(32);
  for (std::size_t i = 0; i < 32; ++i)
    for (std::size_t j = 0; j < 32; ++j)
      if (!p0(i, j).is_zero()) form += var(32, i) * var(32, j) * p0(i, j);
  EXPECT_EQ(laplacian(form * form), r2 * Scalar(8));
}

TEST(MPoly, GradInnerExamples) {
  EXPECT_TRUE(grad_inner(var(2, 0), var(2, 1) * var(2, 1)).is_zero());
  const MPoly r2 = MPoly::norm_sq(5);
  EXPECT_EQ(grad_inner(r2, r2), r2 * Scalar(4));
  const MPoly f = build_F_45();
  EXPECT_EQ(grad_inner(f, f), MPoly::norm_sq(20).pow(3) * Scalar(16));
}

TEST(MPoly, GradInnerNonnegativeAtRandomPoints) {
  std::mt19937_64 rng(3);
  const MPoly f = th::random_poly(rng, 4, 3, 8);
  const MPoly g = grad_inner(f, f);
  for (int k = 0; k < 20; ++k) {
    const auto x = th::random_point(rng, 4);
    EXPECT_GE(g.eval(std::span<const double>(x)), -1e-9);
  }
}

TEST(MPoly, RingAxioms) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const MPoly a = th::random_poly(rng, 4, 3, 5);
    const MPoly b = th::random_poly(rng, 4, 3, 5);
    const MPoly c = th::random_poly(rng, 4, 3, 5);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(MPoly, EulerIdentity) {
  std::mt19937_64 rng(9);
  for (unsigned d = 1; d <= 4; ++d) {
    MPoly f(5);
    for (int k = 0; k < 6; ++k) f += th::random_poly(rng, 5, d, 1).filter([&](const Monomial& m) { return m.degree() == d; });
    EXPECT_EQ(euler_operator(f), f * Scalar(static_cast<long>(d)));
  }
  const MPoly f = build_F_45();
  EXPECT_EQ(euler_operator(f), f * Scalar(4));
}

TEST(MPoly, SubstLinearExamples) {
  const MPoly f = var(1, 0) * var(1, 0);
  RMat rows(1, 2);
  rows(0, 0) = Scalar::inv_sqrt2();
  rows(0, 1) = Scalar::inv_sqrt2();
  const MPoly u0 = var(2, 0), u1 = var(2, 1);
  EXPECT_EQ(subst_linear(f, rows, 2), (u0 * u0 + u0 * u1 * Scalar(2) + u1 * u1) * Scalar::rational(1, 2));
  std::mt19937_64 rng(1);
  const MPoly g = th::random_poly(rng, 3, 4, 10);
  EXPECT_EQ(subst_linear(g, RMat::identity(3), 3), g);
  EXPECT_THROW(subst_linear(g, RMat::identity(2), 2), DimensionError);
}

TEST(MPoly, SubstLinearComposes) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 5; ++k) {
    const MPoly f = th::random_poly(rng, 3, 3, 6);
    const RMat m1 = th::random_matrix(rng, 3, 2);
    const RMat m2 = th::random_matrix(rng, 2, 4);
    EXPECT_EQ(subst_linear(subst_linear(f, m1, 2), m2, 4), subst_linear(f, m1 * m2, 4));
  }
}

TEST(MPoly, VerifyCmOnF45) {
  const auto r = verify_cm(build_F_45(), 4, 4, 5);
  EXPECT_TRUE(r.gradient_ok);
  EXPECT_TRUE(r.laplacian_ok);
  EXPECT_EQ(r.laplacian, MPoly::norm_sq(20) * Scalar(8));
}

TEST(MPoly, VerifyCmRejectsSphereQuartic) {
  const MPoly r2 = MPoly::norm_sq(3);
  const auto r = verify_cm(r2 * r2, 4, 1, 1);
  EXPECT_TRUE(r.gradient_ok);
  EXPECT_FALSE(r.laplacian_ok);
  EXPECT_GT(r.laplacian_residual_terms, 0u);
  EXPECT_FALSE(r.pass());
}

TEST(MPoly, VerifyCmRejectsNonHomogeneous) {
  const MPoly f = MPoly::norm_sq(3) + var(3, 0);
  EXPECT_THROW(verify_cm(f, 4, 1, 1), DomainError);
}

TEST(MPoly, CoefficientOfAndDerivative) {
  const MPoly t = var(3, 0), a = var(3, 1), b = var(3, 2);
  const MPoly f = t * t * a + t * b * Scalar(3) + a * b;
  EXPECT_EQ(f.coefficient_of(0, 2), a);
  EXPECT_EQ(f.coefficient_of(0, 1), b * Scalar(3));
  EXPECT_EQ(f.coefficient_of(0, 0), a * b);
  EXPECT_EQ(f.derivative(0), t * a * Scalar(2) + b * Scalar(3));
}

TEST(MPoly, JsonRoundTrip) {
  std::mt19937_64 rng(17);
  const MPoly f = th::random_poly(rng, 6, 4, 12);
  EXPECT_EQ(poly_from_json(poly_to_json(f)), f);
  EXPECT_THROW(poly_from_json(json::parse(R"({"nvars":2,"terms":[{"exp":[1],"r":"1","s":"0"}]})")), ParseError);
}

TEST(MPoly, Printing) {
  const MPoly f = var(2, 0) * Scalar::sqrt2() - var(2, 1) * Scalar::rational(1, 2);
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(f.to_string(names), "sqrt2*x - 1/2*y");
}
