#include "isopar/algebras.hpp"

#include "isopar/error.hpp"

namespace isopar {

// -------------------------------------------------------------- Quaternion

Quaternion Quaternion::basis(std::size_t idx) {
  if (idx < 1 || idx > 4) throw DimensionError("quaternion basis index must be 1..4");
  Quaternion q;
  q.c_[idx - 1] = Scalar(1);
  return q;
}

Quaternion Quaternion::conj() const { return Quaternion({c_[0], -c_[1], -c_[2], -c_[3]}); }

Scalar Quaternion::norm_sq() const {
  Scalar s;
  for (const auto& v : c_) s += v * v;
  return s;
}

Quaternion Quaternion::operator-() const { return Quaternion({-c_[0], -c_[1], -c_[2], -c_[3]}); }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  Quaternion r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  Quaternion r;
  for (std::size_t i = 0; i < 4; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& [a0, a1, a2, a3] = a.c_;
  const auto& [b0, b1, b2, b3] = b.c_;
  return Quaternion({a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                     a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                     a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                     a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0});
}

// ---------------------------------------------------------------- Octonion

Octonion Octonion::basis(std::size_t idx) {
  if (idx < 1 || idx > 8) throw DimensionError("octonion basis index must be 1..8");
  Octonion o;
  o.c_[idx - 1] = Scalar(1);
  return o;
}

Octonion Octonion::from_halves(const Quaternion& a, const Quaternion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 4; ++i) {
    o.c_[i] = a[i];
    o.c_[i + 4] = b[i];
  }
  return o;
}

Quaternion Octonion::lower() const { return Quaternion({c_[0], c_[1], c_[2], c_[3]}); }
Quaternion Octonion::upper() const { return Quaternion({c_[4], c_[5], c_[6], c_[7]}); }

Octonion Octonion::conj() const { return from_halves(lower().conj(), -upper()); }

Scalar Octonion::norm_sq() const {
  Scalar s;
  for (const auto& v : c_) s += v * v;
  return s;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = -c_[i];
  return r;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  const Quaternion a = x.lower(), b = x.upper();
  const Quaternion c = y.lower(), d = y.upper();
  return Octonion::from_halves(a * c - d.conj() * b, d * a + b * c.conj());
}

// ------------------------------------------------------ matrix realizations

RMat quaternion_right_mult_matrix(std::size_t idx) {
  const Quaternion e = Quaternion::basis(idx);
  RMat m(4, 4);
  for (std::size_t k = 1; k <= 4; ++k) {
    const Quaternion col = Quaternion::basis(k) * e;
    for (std::size_t r = 0; r < 4; ++r) m(r, k - 1) = col[r];
  }
  return m;
}

RMat right_mult_matrix(std::size_t idx) {
  if (idx < 2 || idx > 8) throw DimensionError("right_mult_matrix: index must be 2..8");
  const Octonion e = Octonion::basis(idx);
  RMat m(8, 8);
  for (std::size_t k = 1; k <= 8; ++k) {
    const Octonion col = oct_mul(Octonion::basis(k), e);
    for (std::size_t r = 0; r < 8; ++r) m(r, k - 1) = col[r];
  }
  return m;
}

std::vector<RMat> build_c8_rep() {
  std::vector<RMat> reps;
  for (std::size_t i = 1; i <= 7; ++i) {
    const RMat j = right_mult_matrix(i + 1);
    RMat m(16, 16);
    m.set_block(0, 0, j);
    m.set_block(8, 8, -j);
    reps.push_back(std::move(m));
  }
  RMat j8(16, 16);
  j8.set_block(0, 8, RMat::identity(8));
  j8.set_block(8, 0, -RMat::identity(8));
  reps.push_back(std::move(j8));
  return reps;
}

CliffordSystem build_clifford_system() {
  const RMat id = RMat::identity(16);
  CliffordSystem sys;
  sys.dim = 32;
  RMat p0(32, 32);
  p0.set_block(0, 0, id);
  p0.set_block(16, 16, -id);
  sys.mats.push_back(std::move(p0));
  RMat p1(32, 32);
  p1.set_block(0, 16, id);
  p1.set_block(16, 0, id);
  sys.mats.push_back(std::move(p1));
  for (const RMat& j : build_c8_rep()) {
    RMat p(32, 32);
    p.set_block(0, 16, j);
    p.set_block(16, 0, -j);
    sys.mats.push_back(std::move(p));
  }
  const auto report = verify_clifford(sys);
  if (!report.pass) throw DomainError("Clifford system construction failed: " + report.detail);
  return sys;
}

CliffordReport verify_clifford(const CliffordSystem& sys) {
  CliffordReport rep;
  const RMat id = RMat::identity(sys.dim);
  auto fail = [&](std::size_t i, std::size_t j, std::string why) {
    rep.pass = false;
    rep.failing_pair = std::make_pair(i, j);
    rep.detail = std::move(why);
    return rep;
  };
  for (std::size_t i = 0; i < sys.mats.size(); ++i) {
    const RMat& p = sys.mats[i];
    if (p.rows() != sys.dim || p.cols() != sys.dim)
      return fail(i, i, "P" + std::to_string(i) + " has wrong size");
    if (!p.is_symmetric()) return fail(i, i, "P" + std::to_string(i) + " is not symmetric");
  }
  for (std::size_t i = 0; i < sys.mats.size(); ++i) {
    for (std::size_t j = i; j < sys.mats.size(); ++j) {
      const RMat ac = sys.mats[i] * sys.mats[j] + sys.mats[j] * sys.mats[i];
      const RMat expected = i == j ? id * Scalar(2) : RMat(sys.dim, sys.dim);
      if (ac != expected) {
        return fail(i, j, i == j ? "P" + std::to_string(i) + "^2 != I"
                                 : "P" + std::to_string(i) + " and P" + std::to_string(j) +
                                       " do not anticommute");
      }
    }
  }
  rep.detail = std::to_string(sys.mats.size()) + " matrices verified";
  return rep;
}

}  // namespace isopar
