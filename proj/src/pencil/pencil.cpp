#include "isopar/pencil.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "isopar/error.hpp"

namespace isopar {

namespace {

/// Uniform double in (0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

/// Box-Muller; written out so that draws match across standard libraries.
double normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

CheckResult make(std::string id, bool pass, std::string detail) {
  return {std::move(id), pass, std::move(detail)};
}

}  // namespace

CMat pencil_matrix(std::span<const CScalar> c, const ShapeBlocks& blocks) {
  if (c.size() > blocks.m1 + 1) throw DimensionError("pencil_matrix: more coefficients than normals");
  const std::size_t n = blocks.m1 + 2 * blocks.m2;
  CMat m(n, n);
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a].is_zero()) continue;
    const RMat s = blocks.S(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!s(i, j).is_zero()) m(i, j) += c[a] * CScalar(s(i, j));
  }
  return m;
}

DMat pencil_matrix(std::span<const cdouble> c, const ShapeBlocks& blocks) {
  if (c.size() > blocks.m1 + 1) throw DimensionError("pencil_matrix: more coefficients than normals");
  const std::size_t n = blocks.m1 + 2 * blocks.m2;
  DMat m(n, n);
  for (std::size_t a = 0; a < c.size(); ++a) {
    const RMat s = blocks.S(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!s(i, j).is_zero()) m(i, j) += c[a] * s(i, j).to_double();
  }
  return m;
}

std::size_t nullity(const CMat& m) {
  if (!m.is_square()) throw DimensionError("nullity: matrix must be square");
  return m.cols() - rank(m);
}

std::size_t nullity(const DMat& m, double rel_tol) {
  if (!m.is_square()) throw DimensionError("nullity: matrix must be square");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return m.rows();
  std::size_t small = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= rel_tol * sv(0)) ++small;
  return small;
}

std::vector<PencilSample> sample_hyperquadric(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k < 1) throw DomainError("sample_hyperquadric: k must be at least 1");
  constexpr int kMaxRetries = 100;
  std::mt19937_64 rng(seed);
  std::vector<PencilSample> out;
  out.reserve(n);
  const std::size_t dim = k + 1;
  for (std::size_t s = 0; s < n; ++s) {
    int tries = 0;
    for (;;) {
      if (++tries > kMaxRetries) throw DomainError("sample_hyperquadric: too many degenerate draws");
      std::vector<double> alpha(dim), beta(dim);
      for (auto& v : alpha) v = normal(rng);
      for (auto& v : beta) v = normal(rng);
      const double aa = dotd(alpha, alpha);
      if (aa < 1e-12) continue;
      const double proj = dotd(alpha, beta) / aa;
      for (std::size_t i = 0; i < dim; ++i) beta[i] -= proj * alpha[i];
      const double bb = dotd(beta, beta);
      if (bb < 1e-16 * aa) continue;
      const double scale = std::sqrt(aa / bb);
      for (auto& v : beta) v *= scale;
      PencilSample ps;
      ps.alpha = alpha;
      ps.beta = beta;
      ps.c.resize(dim);
      for (std::size_t i = 0; i < dim; ++i) ps.c[i] = cdouble(alpha[i], beta[i]);
      ps.tau = cdouble(0.0, 1.0);
      const double ab = dotd(alpha, beta);
      ps.nongeneric = std::abs(ab) < 1e-9 * aa && std::abs(dotd(beta, beta) - aa) < 1e-9 * aa;
      out.push_back(std::move(ps));
      break;
    }
  }
  return out;
}

ScanReport r_lambda_scan(const ShapeBlocks& blocks, std::vector<PencilSample> samples, double rel_tol) {
  ScanReport rep;
  rep.m1 = blocks.m1;
  rep.m2 = blocks.m2;
  rep.k = samples.empty() ? 0 : samples.front().c.size() - 1;
  rep.n_samples = samples.size();
  const std::size_t full = blocks.m1 + blocks.m2;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto& s = samples[i];
    const double aa = dotd(s.alpha, s.alpha);
    s.nongeneric = std::abs(dotd(s.alpha, s.beta)) < 1e-9 * aa &&
                   std::abs(dotd(s.beta, s.beta) - aa) < 1e-9 * aa;
    if (!s.nongeneric) {
      rep.violations.push_back("sample " + std::to_string(i) + ": not on the hyperquadric");
      continue;
    }
    s.nullity = nullity(pencil_matrix(std::span<const cdouble>(s.c), blocks), rel_tol);
    s.r_lambda = static_cast<long>(full) - static_cast<long>(*s.nullity);
    ++rep.histogram[*s.r_lambda];
    if (*s.r_lambda != 0 && *s.r_lambda != 1)
      rep.violations.push_back("sample " + std::to_string(i) + ": r = " + std::to_string(*s.r_lambda));
  }
  rep.samples = std::move(samples);
  return rep;
}

ShapeBlocks toy_blocks(std::size_t m1, std::size_t m2) {
  ShapeBlocks b;
  b.m1 = m1;
  b.m2 = m2;
  for (std::size_t a = 0; a < m1; ++a) {
    b.A.push_back(RMat::identity(m2));
    b.B.emplace_back(m2, m1);
    b.C.emplace_back(m2, m1);
  }
  return b;
}

ShapeBlocks normalize_blocks(const ShapeBlocks& blocks, std::size_t d) {
  if (d < 1 || d > blocks.m1) throw DimensionError("normalize_blocks: designated index out of range");
  const std::size_t m2 = blocks.m2;
  RMat M(m2, m2);
  M.set_block(0, 0, blocks.A[d - 1].block(0, 0, m2 - 1, m2 - 1).transpose());
  M(m2 - 1, m2 - 1) = Scalar(1);
  if (M * M.transpose() != RMat::identity(m2))
    throw DomainError("normalize_blocks: designated upper block is not orthogonal");
  ShapeBlocks out = blocks;
  for (std::size_t a = 0; a < blocks.m1; ++a) {
    out.A[a] = blocks.A[a] * M;
    out.C[a] = M.transpose() * blocks.C[a];
  }
  return out;
}

CheckList estimate_structure_check(const ShapeBlocks& blocks, std::size_t d) {
  const ShapeBlocks nb = normalize_blocks(blocks, d);
  const std::size_t m1 = nb.m1, m2 = nb.m2;
  CheckList out;
  const RMat& A = nb.A[d - 1];
  const RMat& B = nb.B[d - 1];
  const RMat& C = nb.C[d - 1];

  RMat A_form(m2, m2);
  A_form.set_block(0, 0, RMat::identity(m2 - 1));  // Delta = 0 in the last slot
  std::size_t nonzero = 0;
  bool sigma_ok = true;
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m1; ++j)
      if (!B(i, j).is_zero()) {
        ++nonzero;
        sigma_ok = sigma_ok && i == m2 - 1 && B(i, j) == Scalar::inv_sqrt2();
      }
  out.push_back(make("pencil.normal_form_A", A == A_form, "A = diag(I, Delta) with Delta = 0"));
  out.push_back(make("pencil.normal_form_BC", B == C && nonzero == 1 && sigma_ok,
                     "B = C with a single entry sigma = 1/sqrt2 in row " + std::to_string(m2)));

  // Kernel of S_0 + i S_d: S_d v = tau S_0 v with tau = i.
  std::vector<CScalar> c(d + 1);
  c[0] = CScalar(1);
  c[d] = CScalar::i();
  const auto ker = nullspace(pencil_matrix(std::span<const CScalar>(c), nb));
  const CScalar tau = CScalar::i();
  bool eq_ok = true, some_x1 = false;
  for (const auto& v : ker) {
    for (std::size_t i = 0; i + 1 < m2; ++i) {
      const CScalar& x1 = v[i];
      const CScalar& y1 = v[m2 + i];
      eq_ok = eq_ok && x1 == -(tau * y1) && y1 == tau * x1;
      some_x1 = some_x1 || !x1.is_zero();
    }
  }
  const long r = 1;
  const bool dim_ok = ker.size() == m1 + m2 - r;
  out.push_back(make("pencil.estimate_kernel", eq_ok && some_x1,
                     "kernel vectors satisfy x1 = -tau y1, y1 = tau x1 (tau = i), x1 not identically 0"));
  out.push_back(make("pencil.estimate_dimension", dim_ok,
                     "dim = " + std::to_string(ker.size()) + " = m1 + m2 - r with r = rank B = 1"));
  return out;
}

CheckList pencil_calibration(const ShapeBlocks& blocks, std::size_t d) {
  CheckList out;
  const std::size_t m1 = blocks.m1, m2 = blocks.m2;
  std::vector<CScalar> c0{CScalar(1)};
  const std::size_t n0 = nullity(pencil_matrix(std::span<const CScalar>(c0), blocks));
  out.push_back(make("pencil.nullity_S0", n0 == m1, "nullity " + std::to_string(n0) + ", expected m1 = " + std::to_string(m1)));
  std::vector<CScalar> c(d + 1);
  c[0] = CScalar(1);
  c[d] = CScalar::i();
  const CMat P = pencil_matrix(std::span<const CScalar>(c), blocks);
  const std::size_t n1 = nullity(P);
  out.push_back(make("pencil.nullity_S0_iSd", n1 == m1 + m2 - 1,
                     "exact nullity " + std::to_string(n1) + ", expected m1 + m2 - 1 = " + std::to_string(m1 + m2 - 1)));
  const DMat Pd = P.map([](const CScalar& z) { return cdouble(z.real().to_double(), z.imag().to_double()); });
  const std::size_t n1f = nullity(Pd);
  out.push_back(make("pencil.exact_vs_floating", n1f == n1, "floating nullity " + std::to_string(n1f)));
  out.push_back(make("pencil.symmetric", P.is_symmetric(), "pencil equals its transpose"));
  return out;
}

CheckList jacobian_rank_check(const SecondThirdForms& forms, std::size_t points, std::uint64_t seed) {
  const std::size_t n = forms.tangent_dim();
  std::vector<std::vector<MPoly>> grads;
  for (const auto& p : forms.p) grads.push_back(grad(p));
  std::mt19937_64 rng(seed);
  bool ok = true;
  std::string where;
  std::size_t max_full = 0;
  for (std::size_t s = 0; s < points && ok; ++s) {
    Vec pt(n);
    for (auto& v : pt) v = Scalar::rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
    RMat J(forms.p.size(), n);
    for (std::size_t a = 0; a < forms.p.size(); ++a)
      for (std::size_t i = 0; i < n; ++i) J(a, i) = grads[a][i].eval(std::span<const Scalar>(pt));
    for (std::size_t k = 0; k < forms.p.size() && ok; ++k) {
      const std::size_t r = rank(J.block(0, 0, k + 1, n));
      if (r > k + 1) {
        ok = false;
        where = "point " + std::to_string(s) + ", k = " + std::to_string(k);
      }
      if (k + 1 == forms.p.size()) max_full = std::max(max_full, r);
    }
  }
  return {make("pencil.jacobian_rank", ok,
               ok ? std::to_string(points) + " points, rank(p0..pk) <= k+1; full rank " + std::to_string(max_full)
                  : "fails at " + where)};
}

}  // namespace isopar
