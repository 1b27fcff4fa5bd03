#include <numeric>

#include "isopar/error.hpp"
#include "isopar/forms.hpp"

namespace isopar {

namespace {

/// Layout of the expansion ring: t, then the tangent coordinates, then w_0..w_m1.
struct ExpansionRing {
  std::size_t tangent;
  std::size_t normals;
  std::size_t nvars() const { return 1 + tangent + normals; }
  std::size_t t() const { return 0; }
  std::size_t y(std::size_t i) const { return 1 + i; }
  std::size_t w(std::size_t a) const { return 1 + tangent + a; }
};

ExpansionRing ring_for(const AdaptedFrame& frame) {
  return {frame.tangent_dim(), frame.normals.size()};
}

/// Matrix of ambient x_i <- t x_i + sum y_j e_j,i + sum w_a n_a,i.
RMat substitution_rows(const AdaptedFrame& frame, const ExpansionRing& ring) {
  RMat rows(frame.ambient_dim, ring.nvars());
  const auto tangent = frame.tangent_vectors();
  for (std::size_t i = 0; i < frame.ambient_dim; ++i) {
    rows(i, ring.t()) = frame.x[i];
    for (std::size_t j = 0; j < tangent.size(); ++j) rows(i, ring.y(j)) = tangent[j][i];
    for (std::size_t a = 0; a < frame.normals.size(); ++a) rows(i, ring.w(a)) = frame.normals[a][i];
  }
  return rows;
}

std::vector<std::size_t> range(std::size_t from, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

MPoly sum_squares(std::size_t nvars, std::span<const std::size_t> vars) {
  std::vector<MPoly::Term> terms;
  for (auto v : vars) terms.emplace_back(Monomial::unit(v, 2), Scalar(1));
  return MPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

std::vector<std::string> SecondThirdForms::variable_names() const {
  std::vector<std::string> names;
  for (std::size_t a = 1; a <= m2; ++a) names.push_back("x" + std::to_string(a));
  for (std::size_t a = 1; a <= m2; ++a) names.push_back("y" + std::to_string(a));
  for (std::size_t a = 1; a <= m1; ++a) names.push_back("z" + std::to_string(a));
  return names;
}

SecondThirdForms ot_expand(const MPoly& F, const AdaptedFrame& frame) {
  frame.check_shape();
  if (F.nvars() != frame.ambient_dim) throw DimensionError("ot_expand: F and frame dimensions differ");
  if (!F.is_homogeneous(4) || F.is_zero()) throw DomainError("ot_expand: F must be a quartic form");
  const ExpansionRing ring = ring_for(frame);
  if (ring.nvars() > kMaxVars) throw DimensionError("ot_expand: expansion ring exceeds 64 variables");
  const std::size_t n = ring.nvars();
  const std::size_t T = ring.tangent;
  const std::size_t m1 = frame.m1;

  MPoly G = F;
  if (frame.orientation < 0) G = -G;
  const MPoly E = subst_linear(G, substitution_rows(frame, ring), n);

  const auto yvars = range(ring.y(0), T);
  const auto wvars = range(ring.w(0), m1 + 1);
  const MPoly y2 = sum_squares(n, yvars);
  const MPoly w2 = sum_squares(n, wvars);

  if (E.coefficient_of(ring.t(), 4) != MPoly::constant(n, Scalar(1)))
    throw ExtractionError("t^4", "coefficient is not 1 (F(x) != 1)");
  if (!E.coefficient_of(ring.t(), 3).is_zero())
    throw ExtractionError("t^3", "coefficient does not vanish");
  if (E.coefficient_of(ring.t(), 2) != y2 * Scalar(2) - w2 * Scalar(6))
    throw ExtractionError("t^2", "coefficient differs from 2|y|^2 - 6|w|^2");

  const MPoly t1 = E.coefficient_of(ring.t(), 1);
  for (const auto& [m, c] : t1.terms())
    if (m.degree_in(wvars) != 1) throw ExtractionError("t^1", "term not linear in the normal coordinates");

  const MPoly t0 = E.coefficient_of(ring.t(), 0);
  const Scalar eighth = Scalar::rational(1, 8);

  SecondThirdForms out;
  out.m1 = m1;
  out.m2 = frame.m2;
  std::vector<MPoly> p_big, q_big;
  for (std::size_t a = 0; a <= m1; ++a) {
    const std::size_t wa = ring.w(a);
    MPoly pa = t1.coefficient_of(wa, 1) * eighth;
    MPoly qa = t0.filter([&](const Monomial& m) { return m[wa] == 1 && m.degree_in(wvars) == 1; })
                   .coefficient_of(wa, 1) *
               (-eighth);
    out.p.push_back(pa.restrict_to(yvars));
    out.q.push_back(qa.restrict_to(yvars));
    p_big.push_back(std::move(pa));
    q_big.push_back(std::move(qa));
  }

  // t^0 remainder: |y|^4 - 6|y|^2|w|^2 + |w|^4 - 2 sum p_a^2
  //               + 2 sum <grad p_a, grad p_b> w_a w_b - 8 sum q^a w_a
  std::vector<std::size_t> slot = yvars;
  MPoly expected = y2 * y2 - y2 * w2 * Scalar(6) + w2 * w2;
  for (std::size_t a = 0; a <= m1; ++a) {
    expected -= p_big[a] * p_big[a] * Scalar(2);
    expected -= q_big[a] * MPoly::variable(n, ring.w(a)) * Scalar(8);
    for (std::size_t b = 0; b <= m1; ++b) {
      const MPoly gi = grad_inner(out.p[a], out.p[b]).embed(n, slot);
      expected += gi * (MPoly::variable(n, ring.w(a)) * MPoly::variable(n, ring.w(b))) * Scalar(2);
    }
  }
  out.residual_ok = (t0 == expected);
  return out;
}

// ------------------------------------------------------------ shape blocks

RMat ShapeBlocks::S(std::size_t a) const {
  const std::size_t n = m1 + 2 * m2;
  RMat s(n, n);
  if (a == 0) {
    for (std::size_t i = 0; i < m2; ++i) {
      s(i, i) = Scalar(1);
      s(m2 + i, m2 + i) = Scalar(-1);
    }
    return s;
  }
  if (a > m1) throw DimensionError("ShapeBlocks::S: index out of range");
  s.set_block(0, m2, A[a - 1]);
  s.set_block(m2, 0, A[a - 1].transpose());
  s.set_block(0, 2 * m2, B[a - 1]);
  s.set_block(2 * m2, 0, B[a - 1].transpose());
  s.set_block(m2, 2 * m2, C[a - 1]);
  s.set_block(2 * m2, m2, C[a - 1].transpose());
  return s;
}

namespace {

/// Symmetric matrix of a quadratic form: p(u) = u^T S u.
RMat quadratic_matrix(const MPoly& p, std::size_t n, const std::string& stratum) {
  RMat s(n, n);
  const Scalar half = Scalar::rational(1, 2);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 2) throw ExtractionError(stratum, "not a quadratic form");
    std::size_t i = n, j = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] == 2) i = j = v;
      if (m[v] == 1) (i == n ? i : j) = v;
    }
    if (i == j) {
      s(i, i) = c;
    } else {
      s(i, j) = c * half;
      s(j, i) = c * half;
    }
  }
  return s;
}

}  // namespace

ShapeBlocks shape_blocks(const SecondThirdForms& forms) {
  const std::size_t m1 = forms.m1, m2 = forms.m2, n = forms.tangent_dim();
  if (forms.p.size() != m1 + 1) throw DimensionError("shape_blocks: need m1+1 quadratics");
  ShapeBlocks blocks;
  blocks.m1 = m1;
  blocks.m2 = m2;
  for (std::size_t a = 0; a <= m1; ++a) {
    const std::string stratum = "p" + std::to_string(a);
    const RMat s = quadratic_matrix(forms.p[a], n, stratum);
    if (a == 0) {
      ShapeBlocks probe;
      probe.m1 = m1;
      probe.m2 = m2;
      if (s != probe.S(0)) throw ExtractionError(stratum, "S_0 is not diag(I, -I, 0)");
      continue;
    }
    if (!s.block(0, 0, m2, m2).is_zero() || !s.block(m2, m2, m2, m2).is_zero() ||
        !s.block(2 * m2, 2 * m2, m1, m1).is_zero())
      throw ExtractionError(stratum, "nonzero diagonal block (E+xE+, E-xE- or E0xE0)");
    blocks.A.push_back(s.block(0, m2, m2, m2));
    blocks.B.push_back(s.block(0, 2 * m2, m2, m1));
    blocks.C.push_back(s.block(m2, 2 * m2, m2, m1));
  }
  return blocks;
}

// ----------------------------------------------------------- third form

ThirdFormTensor third_form_tensor(const SecondThirdForms& forms) {
  const std::size_t m1 = forms.m1, m2 = forms.m2;
  if (forms.q.empty()) throw DimensionError("third_form_tensor: q^0 missing");
  ThirdFormTensor T;
  T.m1 = m1;
  T.m2 = m2;
  T.full.assign(m1, RMat(m2, m2));
  const Scalar minus_half = Scalar::rational(-1, 2);
  for (const auto& [m, c] : forms.q[0].terms()) {
    std::size_t alpha = 0, mu = 0, p = 0;
    bool ok = m.degree() == 3;
    for (std::size_t v = 0; v < forms.tangent_dim() && ok; ++v) {
      if (m[v] == 0) continue;
      if (m[v] != 1) ok = false;
      else if (v < m2 && alpha == 0) alpha = v + 1;
      else if (v >= m2 && v < 2 * m2 && mu == 0) mu = v - m2 + 1;
      else if (v >= 2 * m2 && p == 0) p = v - 2 * m2 + 1;
      else ok = false;
    }
    if (!ok || alpha == 0 || mu == 0 || p == 0)
      throw ExtractionError("q0", "term outside the x y z pattern: " + forms.q[0].to_string());
    T.full[p - 1](alpha - 1, mu - 1) = c * minus_half;
  }
  for (std::size_t p = 0; p < m1; ++p) {
    for (std::size_t i = 0; i < m2; ++i)
      if (!T.full[p](m2 - 1, i).is_zero() || !T.full[p](i, m2 - 1).is_zero())
        throw ExtractionError("q0", "T^" + std::to_string(p + 1) +
                                        " nonzero in the row or column of the distinguished index");
    T.reduced.push_back(T.full[p].block(0, 0, m2 - 1, m2 - 1));
  }
  return T;
}

}  // namespace isopar
