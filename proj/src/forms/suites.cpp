#include <random>
#include <sstream>

#include "isopar/algebras.hpp"
#include "isopar/error.hpp"
#include "isopar/forms.hpp"

namespace isopar {

namespace {

CheckResult make(std::string id, bool pass, std::string detail) {
  return {std::move(id), pass, std::move(detail)};
}

std::string idx(std::initializer_list<std::size_t> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : xs) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ')';
  return os.str();
}

/// Small random rational in [-9, 9] / [1, 4]; portable across standard libraries.
Scalar random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 4) + 1;
  return Scalar::rational(num, den);
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec v(n);
  for (auto& e : v) e = random_rational(rng);
  return v;
}

Vec basis_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

}  // namespace

BlockSuiteOptions default_block_options(ExampleId id) {
  if (id == ExampleId::H45) return {1, UpperAlgebra::Quaternion};
  return {1, UpperAlgebra::Octonion};
}

// ------------------------------------------------------------ block suite

CheckList block_identity_suite(const ShapeBlocks& bl, const BlockSuiteOptions& opt) {
  const std::size_t m1 = bl.m1, m2 = bl.m2, d = opt.designated;
  if (d < 1 || d > m1) throw DimensionError("block_identity_suite: designated index out of range");
  const RMat& A = bl.A[d - 1];
  const RMat& B = bl.B[d - 1];
  const RMat& C = bl.C[d - 1];
  const RMat Im2 = RMat::identity(m2);
  const Scalar two(2);
  CheckList out;

  auto family = [&](const std::string& id, auto&& holds, bool include_d) {
    for (std::size_t j = 1; j <= m1; ++j) {
      if (j == d && !include_d) continue;
      if (!holds(j)) {
        out.push_back(make(id, false, "fails at j=" + std::to_string(j)));
        return;
      }
    }
    out.push_back(make(id, true, "designated index " + std::to_string(d)));
  };
  auto at = [&](const std::vector<RMat>& v, std::size_t j) -> const RMat& { return v[j - 1]; };

  family("blocks.AB_polar", [&](std::size_t j) {
    const RMat& Aj = at(bl.A, j);
    const RMat& Bj = at(bl.B, j);
    return (Aj * A.transpose() + A * Aj.transpose() + two * (Bj * B.transpose()) + two * (B * Bj.transpose())).is_zero();
  }, false);
  family("blocks.AC_polar", [&](std::size_t j) {
    const RMat& Aj = at(bl.A, j);
    const RMat& Cj = at(bl.C, j);
    return (Aj.transpose() * A + A.transpose() * Aj + two * (Cj * C.transpose()) + two * (C * Cj.transpose())).is_zero();
  }, false);
  family("blocks.AC_polar_row", [&](std::size_t j) {
    const RMat& Aj = at(bl.A, j);
    const RMat& Cj = at(bl.C, j);
    return (Aj * A.transpose() + A * Aj.transpose() + two * (Cj * C.transpose()) + two * (C * Cj.transpose())).is_zero();
  }, false);
  family("blocks.ACB_skew", [&](std::size_t j) {
    const RMat M = at(bl.A, j) * C * B.transpose() + at(bl.B, j) * C.transpose() * A.transpose() +
                   A * at(bl.C, j) * B.transpose();
    return (M + M.transpose()).is_zero();
  }, false);
  family("blocks.AA_BB_identity", [&](std::size_t j) {
    const RMat& Aj = at(bl.A, j);
    const RMat& Bj = at(bl.B, j);
    return Aj * Aj.transpose() + two * (Bj * Bj.transpose()) == Im2;
  }, true);
  {
    bool ok = true;
    std::string where;
    for (std::size_t j = 1; j <= m1 && ok; ++j)
      for (std::size_t k = j + 1; k <= m1 && ok; ++k) {
        const RMat &Aj = at(bl.A, j), &Ak = at(bl.A, k), &Bj = at(bl.B, j), &Bk = at(bl.B, k);
        ok = (Aj * Ak.transpose() + Ak * Aj.transpose() + two * (Bj * Bk.transpose()) + two * (Bk * Bj.transpose()))
                 .is_zero();
        if (!ok) where = idx({j, k});
      }
    out.push_back(make("blocks.AA_BB_polar", ok, ok ? "all pairs j<k" : "fails at " + where));
  }
  family("blocks.BB_CC", [&](std::size_t j) {
    const RMat& Bj = at(bl.B, j);
    const RMat& Cj = at(bl.C, j);
    return Bj.transpose() * B + B.transpose() * Bj == Cj.transpose() * C + C.transpose() * Cj;
  }, false);

  // Clifford relations on the upper (m2-1)-blocks.
  const std::size_t n = m2 - 1;
  std::vector<RMat> U;
  for (const auto& a : bl.A) U.push_back(a.block(0, 0, n, n));
  const RMat In = RMat::identity(n);
  const RMat& Ud = U[d - 1];
  {
    bool ok = Ud * Ud.transpose() == In;
    std::string where = ok ? "" : "designated block not orthogonal";
    std::vector<RMat> N;
    for (std::size_t j = 1; j <= m1; ++j)
      if (j != d) N.push_back(Ud.transpose() * U[j - 1]);
    for (std::size_t i = 0; i < N.size() && ok; ++i) {
      if (N[i] * N[i] != -In) {
        ok = false;
        where = "generator " + std::to_string(i + 1) + " does not square to -I";
      }
      for (std::size_t j = i + 1; j < N.size() && ok; ++j)
        if (!(N[i] * N[j] + N[j] * N[i]).is_zero()) {
          ok = false;
          where = "generators " + idx({i + 1, j + 1}) + " do not anticommute";
        }
    }
    out.push_back(make("blocks.clifford_normalized", ok,
                       ok ? std::to_string(N.size()) + " generators U_d^T U_j anticommute, square -I" : where));
  }
  if (opt.algebra == UpperAlgebra::Quaternion) {
    bool ok = m1 >= 4 && n == 4;
    std::string where = ok ? "" : "needs four 4x4 upper blocks";
    for (std::size_t a = 1; a <= 4 && ok; ++a)
      if (U[a - 1] != quaternion_right_mult_matrix(a)) {
        ok = false;
        where = "upper block of A" + std::to_string(a) + " is not right multiplication";
      }
    out.push_back(make("blocks.quaternion_right_mult", ok, ok ? "A1..A4 upper = R(1), R(i), R(j), R(k)" : where));
    const bool prod = m1 >= 4 && U[1] * U[2] == -U[3];
    out.push_back(make("blocks.A2A3_eq_minus_A4", prod, prod ? "upper blocks" : "A2 A3 != -A4"));
  } else {
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; i < m1 && ok; ++i)
      for (std::size_t j = i; j < m1 && ok; ++j) {
        const RMat ac = U[i] * U[j] + U[j] * U[i];
        ok = i == j ? ac == In * Scalar(-2) : ac.is_zero();
        if (!ok) where = idx({i + 1, j + 1});
      }
    out.push_back(make("blocks.upper_anticommute", ok,
                       ok ? std::to_string(m1) + " upper blocks: U_i U_j + U_j U_i = -2 delta I" : "fails at " + where));
  }

  // Rank one: every 2x2 minor of sum_a c_a B_a vanishes identically in c.
  {
    const std::size_t nv = m1;
    auto entry = [&](std::size_t r, std::size_t c) {
      MPoly e(nv);
      for (std::size_t a = 0; a < m1; ++a) e += MPoly::variable(nv, a, bl.B[a](r, c));
      return e;
    };
    std::vector<std::vector<MPoly>> M(m2, std::vector<MPoly>(m1));
    bool nonzero = false;
    for (std::size_t r = 0; r < m2; ++r)
      for (std::size_t c = 0; c < m1; ++c) {
        M[r][c] = entry(r, c);
        nonzero = nonzero || !M[r][c].is_zero();
      }
    bool ok = nonzero;
    std::string where = nonzero ? "" : "sum c_a B_a is identically zero";
    for (std::size_t r1 = 0; r1 < m2 && ok; ++r1)
      for (std::size_t r2 = r1 + 1; r2 < m2 && ok; ++r2)
        for (std::size_t c1 = 0; c1 < m1 && ok; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < m1 && ok; ++c2)
            if (!(M[r1][c1] * M[r2][c2] - M[r1][c2] * M[r2][c1]).is_zero()) {
              ok = false;
              where = "minor rows " + idx({r1 + 1, r2 + 1}) + " cols " + idx({c1 + 1, c2 + 1});
            }
    out.push_back(make("blocks.B_rank_one", ok, ok ? "all 2x2 minors vanish identically" : where));
  }
  return out;
}

// ----------------------------------------------------------- mirror

CheckList mirror_check(const ShapeBlocks& bl, const ThirdFormTensor& T) {
  const std::size_t m1 = bl.m1, m2 = bl.m2;
  if (T.m1 != m1 || T.m2 != m2) throw DimensionError("mirror_check: block and tensor sizes differ");
  CheckList out;
  const Scalar half = Scalar::rational(1, 2);
  // S^a_{p alpha} = B_a(alpha, p); S^a_{p mu} = C_a(mu, p); S^p_{alpha mu} = T^p(alpha, mu).
  auto scan = [&](const std::string& id, const std::vector<RMat>& side, bool over_rows) {
    std::size_t tuples = 0;
    for (std::size_t p = 0; p < m1; ++p)
      for (std::size_t q = 0; q < m1; ++q)
        for (std::size_t i = 0; i < m2; ++i)
          for (std::size_t j = 0; j < m2; ++j) {
            Scalar v;
            for (std::size_t a = 0; a < m1; ++a)
              v += side[a](i, p) * side[a](j, q) + side[a](i, q) * side[a](j, p);
            Scalar t;
            for (std::size_t k = 0; k < m2; ++k) {
              const auto& Tp = T.full[p];
              const auto& Tq = T.full[q];
              t += over_rows ? Tp(i, k) * Tq(j, k) + Tq(i, k) * Tp(j, k)
                             : Tp(k, i) * Tq(k, j) + Tq(k, i) * Tp(k, j);
            }
            v += half * t;
            const Scalar expected(p == q && i == j ? 1 : 0);
            ++tuples;
            if (v != expected) {
              out.push_back(make(id, false, "fails at (p,q,i,j)=" + idx({p + 1, q + 1, i + 1, j + 1}) +
                                                ": " + v.to_string()));
              return;
            }
          }
    out.push_back(make(id, true, std::to_string(tuples) + " index tuples"));
  };
  scan("mirror.plus", bl.B, true);
  scan("mirror.minus", bl.C, false);
  return out;
}

CheckList third_form_checks(const ThirdFormTensor& T) {
  CheckList out;
  const std::size_t n = T.m2 - 1;
  bool ok = true;
  std::string where;
  for (std::size_t p = 0; p < T.m1 && ok; ++p)
    if (T.reduced[p].transpose() * T.reduced[p] != RMat::identity(n)) {
      ok = false;
      where = "T^" + std::to_string(p + 1) + " not orthogonal";
    }
  out.push_back(make("thirdform.orthogonal", ok, ok ? std::to_string(T.m1) + " matrices" : where));
  bool zero = true;
  for (std::size_t p = 0; p < T.m1; ++p)
    for (std::size_t i = 0; i < T.m2; ++i)
      zero = zero && T.full[p](T.m2 - 1, i).is_zero() && T.full[p](i, T.m2 - 1).is_zero();
  out.push_back(make("thirdform.distinguished_zero", zero, "row and column " + std::to_string(T.m2)));
  return out;
}

// --------------------------------------------------------- PQ / gradients

CheckList pq_gradient_suite(const SecondThirdForms& f) {
  CheckList out;
  const std::size_t n = f.tangent_dim();
  const std::size_t m1 = f.m1;
  MPoly pq(n);
  for (std::size_t a = 0; a <= m1; ++a) pq += f.p[a] * f.q[a];
  out.push_back(make("pq.sum_pq_zero", pq.is_zero(), pq.is_zero() ? "sum p_a q^a = 0" : std::to_string(pq.size()) + " residual terms"));

  const MPoly y2 = MPoly::norm_sq(n);
  MPoly G(n);
  for (const auto& p : f.p) G += p * p;
  std::vector<std::vector<MPoly>> gp(m1 + 1, std::vector<MPoly>(m1 + 1));
  for (std::size_t a = 0; a <= m1; ++a)
    for (std::size_t b = a; b <= m1; ++b) gp[a][b] = gp[b][a] = grad_inner(f.p[a], f.p[b]);

  bool ok = true;
  std::string where;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a <= m1 && ok; ++a)
    for (std::size_t b = a; b <= m1 && ok; ++b) {
      const MPoly lhs = grad_inner(f.q[a], f.q[b]) * Scalar(8);
      MPoly rhs = (gp[a][b] * y2 - f.p[a] * f.p[b]) * Scalar(8) + grad_inner(gp[a][b], G);
      if (a == b) rhs -= G * Scalar(24);
      for (std::size_t c = 0; c <= m1; ++c) rhs -= gp[a][c] * gp[b][c] * Scalar(2);
      ++pairs;
      if (lhs != rhs) {
        ok = false;
        where = "fails at (a,b)=" + idx({a, b});
      }
    }
  out.push_back(make("pq.gradient_identities", ok, ok ? std::to_string(pairs) + " pairs 0<=a<=b<=m1" : where));
  return out;
}

// ------------------------------------------------------------ circle

namespace {

/// Circle product into the algebra coordinates: component p lands on slot
/// offset + p.
struct Circle {
  const ThirdFormTensor& T;
  std::size_t n;       // algebra dimension
  std::size_t offset;  // first slot hit by the product

  Vec operator()(const Vec& X, const Vec& Y) const {
    Vec out(n);
    for (std::size_t p = 0; p < T.m1; ++p) {
      const RMat& Tp = T.reduced[p];
      Scalar s;
      for (std::size_t i = 0; i < n; ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!Tp(i, j).is_zero() && !Y[j].is_zero()) s += X[i] * Tp(i, j) * Y[j];
      }
      out[offset + p] = std::move(s);
    }
    return out;
  }
};

}  // namespace

CheckList circ_suite(const ThirdFormTensor& T, UpperAlgebra algebra, std::uint64_t seed) {
  const std::size_t n = T.m2 - 1;
  const std::size_t want = algebra == UpperAlgebra::Quaternion ? 4 : 8;
  if (n != want || T.m1 > n) throw DimensionError("circ_suite: tensor does not fit the algebra");
  const Circle circ{T, n, n - T.m1};
  auto mul = [&](const Vec& a, const Vec& b) {
    if (algebra == UpperAlgebra::Quaternion) {
      const Quaternion r = Quaternion({a[0], a[1], a[2], a[3]}) * Quaternion({b[0], b[1], b[2], b[3]});
      return Vec{r[0], r[1], r[2], r[3]};
    }
    Octonion x, y;
    for (std::size_t i = 0; i < 8; ++i) {
      x[i] = a[i];
      y[i] = b[i];
    }
    const Octonion r = x * y;
    return Vec(&r[0], &r[0] + 8);
  };
  // Z ranges over the image of the circle product.
  auto zbasis = [&](std::size_t k) { return basis_vec(n, circ.offset + k); };
  const std::size_t zdim = T.m1;
  auto random_z = [&](std::mt19937_64& rng) {
    Vec z(n);
    for (std::size_t k = 0; k < zdim; ++k) z[circ.offset + k] = random_rational(rng);
    return z;
  };

  CheckList out;
  {
    bool ok = true;
    std::string where;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        const Vec X = basis_vec(n, i), Y = basis_vec(n, j);
        const Vec c = circ(X, Y);
        for (std::size_t p = 0; p < T.m1 && ok; ++p) {
          const Vec TY = T.reduced[p].apply(Y);
          if (c[circ.offset + p] != dot(TY, X)) {
            ok = false;
            where = idx({i + 1, j + 1, p + 1});
          }
        }
      }
    out.push_back(make("circ.useful", ok, ok ? "all basis pairs" : "fails at " + where));
  }

  auto yz = [&](const Vec& Y, const Vec& Z) { return dot(circ(mul(Y, Z), Y), Z); };
  auto symm1 = [&](const Vec& Y1, const Vec& Y2, const Vec& Z) {
    return dot(circ(mul(Y1, Z), Y2), Z) + dot(circ(mul(Y2, Z), Y1), Z);
  };
  auto symm2 = [&](const Vec& Y, const Vec& Z1, const Vec& Z2) {
    return dot(circ(mul(Y, Z1), Y), Z2) + dot(circ(mul(Y, Z2), Y), Z1);
  };

  bool yz_ok = true, s1_ok = true, s2_ok = true;
  std::string yz_where, s1_where, s2_where;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < zdim; ++k) {
      if (yz_ok && !yz(basis_vec(n, i), zbasis(k)).is_zero()) {
        yz_ok = false;
        yz_where = "basis " + idx({i + 1, circ.offset + k + 1});
      }
      for (std::size_t j = 0; j < n && s1_ok; ++j)
        if (!symm1(basis_vec(n, i), basis_vec(n, j), zbasis(k)).is_zero()) {
          s1_ok = false;
          s1_where = "basis " + idx({i + 1, j + 1, circ.offset + k + 1});
        }
      for (std::size_t l = 0; l < zdim && s2_ok; ++l)
        if (!symm2(basis_vec(n, i), zbasis(k), zbasis(l)).is_zero()) {
          s2_ok = false;
          s2_where = "basis " + idx({i + 1, circ.offset + k + 1, circ.offset + l + 1});
        }
    }
  std::mt19937_64 rng(seed);
  constexpr int kDraws = 20;
  for (int d = 0; d < kDraws; ++d) {
    const Vec Y = random_vec(rng, n), Y2 = random_vec(rng, n);
    const Vec Z = random_z(rng), Z2 = random_z(rng);
    if (yz_ok && !yz(Y, Z).is_zero()) {
      yz_ok = false;
      yz_where = "random draw " + std::to_string(d);
    }
    if (s1_ok && !symm1(Y, Y2, Z).is_zero()) {
      s1_ok = false;
      s1_where = "random draw " + std::to_string(d);
    }
    if (s2_ok && !symm2(Y, Z, Z2).is_zero()) {
      s2_ok = false;
      s2_where = "random draw " + std::to_string(d);
    }
  }
  const std::string scope = "basis triples + " + std::to_string(kDraws) + " rational draws";
  out.push_back(make("circ.YZ", yz_ok, yz_ok ? scope : "fails at " + yz_where));
  out.push_back(make("circ.symm_Y", s1_ok, s1_ok ? scope : "fails at " + s1_where));
  out.push_back(make("circ.symm_Z", s2_ok, s2_ok ? scope : "fails at " + s2_where));

  if (algebra == UpperAlgebra::Octonion) {
    bool skew = true, corner = true, anti = true;
    std::string where;
    for (std::size_t p = 0; p < T.m1; ++p) {
      const RMat& Tp = T.reduced[p];
      skew = skew && (Tp + Tp.transpose()).is_zero();
      corner = corner && Tp.block(0, 0, 2, 2).is_zero();
      for (std::size_t q = p + 1; q < T.m1; ++q)
        if (anti && !(Tp * T.reduced[q] + T.reduced[q] * Tp).is_zero()) {
          anti = false;
          where = idx({p + 1, q + 1});
        }
    }
    out.push_back(make("circ.T_skew", skew, "T^p + (T^p)^T = 0"));
    out.push_back(make("circ.T_corner_zero", corner, "upper-left 2x2 block of each T^p"));
    out.push_back(make("circ.T_anticommute", anti, anti ? "all pairs p<q" : "fails at " + where));
  }
  return out;
}

// ---------------------------------------------------------- U/V display

CheckList uv_cross_check(const SecondThirdForms& f, const ShapeBlocks& bl, const ThirdFormTensor& T) {
  const std::size_t m1 = f.m1, m2 = f.m2, n = f.tangent_dim();
  const Scalar half = Scalar::rational(1, 2);
  auto x = [&](std::size_t i) { return MPoly::variable(n, f.xvar(i + 1)); };
  auto y = [&](std::size_t i) { return MPoly::variable(n, f.yvar(i + 1)); };
  auto z = [&](std::size_t i) { return MPoly::variable(n, f.zvar(i + 1)); };
  bool ok = true;
  std::string where;
  for (std::size_t a = 0; a < m1 && ok; ++a) {
    const RMat& Aa = bl.A[a];
    MPoly bilinear(n);
    for (std::size_t al = 0; al < m2; ++al)
      for (std::size_t mu = 0; mu < m2; ++mu)
        if (!T.full[a](al, mu).is_zero()) bilinear += x(al) * y(mu) * T.full[a](al, mu);
    MPoly pred = (x(m2 - 1) - y(m2 - 1)) * bilinear * Scalar::sqrt2();
    for (std::size_t p = 0; p < m1; ++p) {
      const RMat& Tp = T.full[p];
      for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
          Scalar U, V;
          for (std::size_t k = 0; k < m2; ++k) {
            U += Tp(i, k) * Aa(j, k) + Tp(j, k) * Aa(i, k);
            V += Tp(k, i) * Aa(k, j) + Tp(k, j) * Aa(k, i);
          }
          U *= half;
          V *= -half;
          if (!U.is_zero()) pred += x(i) * x(j) * z(p) * U;
          if (!V.is_zero()) pred += y(i) * y(j) * z(p) * V;
        }
    }
    if (pred != f.q[a + 1]) {
      ok = false;
      where = "q^" + std::to_string(a + 1) + ": difference " + (f.q[a + 1] - pred).to_string(f.variable_names());
    }
  }
  return {make("uv.structural_display", ok, ok ? "q^1..q^m1 rebuilt from T and A" : where)};
}

// ----------------------------------------------------------- duality

CheckList duality_check(const MPoly& F, const AdaptedFrame& frame) {
  const auto primal = ot_expand(F, frame);
  const auto bl = shape_blocks(primal);
  const auto T = third_form_tensor(primal);
  const AdaptedFrame df = dual_frame(frame);
  const auto dual = ot_expand(F, df);
  const auto db = shape_blocks(dual);
  const std::size_t m1 = frame.m1, m2 = frame.m2;
  const Scalar s2 = Scalar::sqrt2(), is2 = Scalar::inv_sqrt2();

  CheckList out;
  out.push_back(make("duality.residual", dual.residual_ok, "expansion remainder at the dual frame"));
  bool a_ok = true, b_ok = true, c_ok = true;
  for (std::size_t al = 0; al < m2; ++al) {
    for (std::size_t a = 0; a < m1; ++a)
      for (std::size_t p = 0; p < m1; ++p)
        a_ok = a_ok && db.A[al](a, p) == -s2 * bl.B[a](al, p);
    for (std::size_t a = 0; a < m1; ++a)
      for (std::size_t mu = 0; mu < m2; ++mu)
        b_ok = b_ok && db.B[al](a, mu) == -is2 * bl.A[a](al, mu);
    for (std::size_t p = 0; p < m1; ++p)
      for (std::size_t mu = 0; mu < m2; ++mu)
        c_ok = c_ok && db.C[al](p, mu) == -is2 * T.full[p](al, mu);
  }
  out.push_back(make("duality.A_star", a_ok, "A*_alpha = -sqrt2 (S^a_{p alpha})"));
  out.push_back(make("duality.B_star", b_ok, "B*_alpha = -(S^a_{alpha mu})/sqrt2"));
  out.push_back(make("duality.C_star", c_ok, "C*_alpha = -(S^p_{alpha mu})/sqrt2"));
  return out;
}

// ---------------------------------------------------------- round trip

CheckList roundtrip_check(const MPoly& F, const AdaptedFrame& frame, const SecondThirdForms& f) {
  // E(t, u, w) rebuilt from the strata, then pulled back by the inverse
  // (transpose) of the orthonormal frame.
  const std::size_t T = f.tangent_dim(), m1 = f.m1;
  const std::size_t n = 1 + T + m1 + 1;
  std::vector<std::size_t> slot(T);
  for (std::size_t i = 0; i < T; ++i) slot[i] = 1 + i;
  auto w = [&](std::size_t a) { return MPoly::variable(n, 1 + T + a); };
  const MPoly t = MPoly::variable(n, 0);
  const MPoly y2 = MPoly::norm_sq(T).embed(n, slot);
  MPoly w2(n);
  for (std::size_t a = 0; a <= m1; ++a) w2 += w(a) * w(a);
  MPoly E = t.pow(4) + t * t * (y2 * Scalar(2) - w2 * Scalar(6)) + y2 * y2 - y2 * w2 * Scalar(6) + w2 * w2;
  for (std::size_t a = 0; a <= m1; ++a) {
    const MPoly pa = f.p[a].embed(n, slot);
    E += t * w(a) * pa * Scalar(8) - w(a) * f.q[a].embed(n, slot) * Scalar(8) - pa * pa * Scalar(2);
    for (std::size_t b = 0; b <= m1; ++b)
      E += w(a) * w(b) * grad_inner(f.p[a], f.p[b]).embed(n, slot) * Scalar(2);
  }
  const auto vecs = frame.all_vectors();  // x, normals, E+, E-, E0
  RMat rows(n, frame.ambient_dim);
  // expansion order: t (x), tangent (E+, E-, E0), normals
  std::size_t r = 0;
  auto put = [&](const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j) rows(r, j) = v[j];
    ++r;
  };
  put(frame.x);
  for (const auto& v : frame.tangent_vectors()) put(v);
  for (const auto& v : frame.normals) put(v);
  MPoly rebuilt = subst_linear(E, rows, frame.ambient_dim);
  if (frame.orientation < 0) rebuilt = -rebuilt;
  const bool same = rebuilt == F;
  bool again = false;
  if (same) {
    const auto f2 = ot_expand(rebuilt, frame);
    again = f2.p == f.p && f2.q == f.q && f2.residual_ok;
  }
  return {make("forms.roundtrip_F", same, "F rebuilt from the extracted strata"),
          make("forms.roundtrip_reextract", again, "re-extraction returns identical p and q")};
}

}  // namespace isopar
