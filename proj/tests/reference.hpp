// Reference matrices and polynomials typed in by hand, independent of the
// extraction code.
#ifndef ISOPAR_TESTS_REFERENCE_HPP
#define ISOPAR_TESTS_REFERENCE_HPP

#include <map>
#include <string>
#include <vector>

#include "isopar/forms.hpp"
#include "isopar/matrix.hpp"

namespace ref {

using isopar::MPoly;
using isopar::RMat;
using isopar::Scalar;

inline RMat m2(long a, long b, long c, long d) {
  return RMat::from_rows({{Scalar(a), Scalar(b)}, {Scalar(c), Scalar(d)}});
}
inline const RMat O = m2(0, 0, 0, 0);
inline const RMat I = m2(1, 0, 0, 1);
inline const RMat J = m2(0, -1, 1, 0);
inline const RMat K = m2(1, 0, 0, -1);
inline const RMat L = m2(0, 1, 1, 0);

/// Assembles 2x2 blocks; `pad` appends zero rows/columns at the end.
inline RMat blocks(const std::vector<std::vector<RMat>>& b, std::size_t pad = 0) {
  const std::size_t n = 2 * b.size() + pad;
  RMat m(n, n);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j) m.set_block(2 * i, 2 * j, b[i][j]);
  return m;
}

// ---- homogeneous {4,5}: 5x5 A-matrices, 4x4 third-form matrices
inline std::vector<RMat> h45_A() {
  return {blocks({{I, O}, {O, I}}, 1), blocks({{J, O}, {O, -J}}, 1), blocks({{O, -I}, {I, O}}, 1),
          blocks({{O, J}, {J, O}}, 1)};
}
inline std::vector<RMat> h45_T() {
  return {blocks({{-J, O}, {O, -J}}), blocks({{I, O}, {O, -I}}), blocks({{O, J}, {-J, O}}),
          blocks({{O, I}, {I, O}})};
}

// ---- {6,9}: 9x9 A-matrices (labels 3..8), 8x8 third-form matrices (labels 3..8)
inline std::vector<RMat> fkm_A() {
  return {blocks({{O, I, O, O}, {-I, O, O, O}, {O, O, O, -I}, {O, O, I, O}}, 1),
          blocks({{O, -J, O, O}, {-J, O, O, O}, {O, O, O, J}, {O, O, J, O}}, 1),
          blocks({{O, O, I, O}, {O, O, O, I}, {-I, O, O, O}, {O, -I, O, O}}, 1),
          blocks({{O, O, -J, O}, {O, O, O, -J}, {-J, O, O, O}, {O, -J, O, O}}, 1),
          blocks({{O, O, O, K}, {O, O, -K, O}, {O, K, O, O}, {-K, O, O, O}}, 1),
          blocks({{O, O, O, L}, {O, O, -L, O}, {O, L, O, O}, {-L, O, O, O}}, 1)};
}
inline std::vector<RMat> fkm_T() {
  return {blocks({{O, J, O, O}, {J, O, O, O}, {O, O, O, J}, {O, O, J, O}}),
          blocks({{O, I, O, O}, {-I, O, O, O}, {O, O, O, I}, {O, O, -I, O}}),
          blocks({{O, O, J, O}, {O, O, O, -J}, {J, O, O, O}, {O, -J, O, O}}),
          blocks({{O, O, I, O}, {O, O, O, -I}, {-I, O, O, O}, {O, I, O, O}}),
          blocks({{O, O, O, L}, {O, O, L, O}, {O, -L, O, O}, {-L, O, O, O}}),
          blocks({{O, O, O, -K}, {O, O, -K, O}, {O, K, O, O}, {K, O, O, O}})};
}

/// m2 x m1 matrix with the single entry (m2, a) = 1/sqrt2 (1-based a).
inline RMat rank_one_B(std::size_t m2, std::size_t m1, std::size_t a) {
  RMat b(m2, m1);
  b(m2 - 1, a - 1) = Scalar::inv_sqrt2();
  return b;
}

/// Named tangent variables x1.., y1.., z1.. of a forms object.
class Vars {
 public:
  explicit Vars(const isopar::SecondThirdForms& f) : n_(f.tangent_dim()) {
    const auto names = f.variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) idx_[names[i]] = i;
  }
  MPoly operator()(const std::string& name) const { return MPoly::variable(n_, idx_.at(name)); }
  MPoly c(const Scalar& s) const { return MPoly::constant(n_, s); }

 private:
  std::size_t n_;
  std::map<std::string, std::size_t> idx_;
};

// printed second fundamental form of the {4,5} example
inline std::vector<MPoly> h45_p(const Vars& v) {
  auto x = [&](int i) { return v("x" + std::to_string(i)); };
  auto y = [&](int i) { return v("y" + std::to_string(i)); };
  auto z = [&](int i) { return v("z" + std::to_string(i)); };
  const Scalar two(2);
  const MPoly s = (x(5) + y(5)) * Scalar::sqrt2();
  MPoly p0 = x(1) * x(1);
  for (int i = 2; i <= 5; ++i) p0 += x(i) * x(i);
  for (int i = 1; i <= 5; ++i) p0 -= y(i) * y(i);
  return {p0,
          (x(1) * y(1) + x(2) * y(2) + x(3) * y(3) + x(4) * y(4)) * two + s * z(1),
          (x(2) * y(1) - x(1) * y(2)) * two + (x(3) * y(4) - x(4) * y(3)) * two + s * z(2),
          (x(3) * y(1) - x(1) * y(3)) * two + (x(4) * y(2) - x(2) * y(4)) * two + s * z(3),
          (x(2) * y(3) - x(3) * y(2)) * two + (x(4) * y(1) - x(1) * y(4)) * two + s * z(4)};
}

inline MPoly h45_q0(const Vars& v) {
  auto x = [&](int i) { return v("x" + std::to_string(i)); };
  auto y = [&](int i) { return v("y" + std::to_string(i)); };
  auto z = [&](int i) { return v("z" + std::to_string(i)); };
  const Scalar mt(-2);
  return z(4) * (x(1) * y(3) + x(3) * y(1) + x(2) * y(4) + x(4) * y(2)) * mt +
         z(3) * (-(x(1) * y(4)) - x(4) * y(1) + x(2) * y(3) + x(3) * y(2)) * mt +
         z(2) * (x(1) * y(1) + x(2) * y(2) - x(3) * y(3) - x(4) * y(4)) * mt +
         z(1) * (x(1) * y(2) - x(2) * y(1) + x(3) * y(4) - x(4) * y(3)) * mt;
}

}  // namespace ref

#endif
