#ifndef ISOPAR_MPOLY_HPP
#define ISOPAR_MPOLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isopar/matrix.hpp"
#include "isopar/scalar.hpp"

namespace isopar {

/// Upper bound on the number of variables of an MPoly.
inline constexpr std::size_t kMaxVars = 64;

/// Exponent vector of a monomial; unused slots beyond nvars stay zero.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial unit(std::size_t var, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  /// Total degree restricted to the given variables.
  unsigned degree_in(std::span<const std::size_t> vars) const;

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Graded lexicographic order: higher total degree first, then lexicographic.
  friend bool grlex_greater(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse multivariate polynomial over Q(sqrt 2).
///
/// Terms are kept sorted in descending graded-lexicographic order with no
/// zero coefficients, so two polynomials are equal iff their term lists are.
class MPoly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit MPoly(std::size_t nvars = 0);

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t var, const Scalar& c = Scalar(1));
  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// |x|^2 = sum of x_i^2.
  static MPoly norm_sq(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// True when every term has total degree d (the zero polynomial qualifies).
  bool is_homogeneous(int d) const;

  Scalar coefficient(const Monomial& m) const;

  Scalar eval(std::span<const Scalar> point) const;
  double eval(std::span<const double> point) const;

  MPoly derivative(std::size_t var) const;
  /// Terms with exponent `power` in `var`, with that variable removed.
  MPoly coefficient_of(std::size_t var, unsigned power) const;
  /// Terms whose monomial satisfies the predicate.
  MPoly filter(const std::function<bool(const Monomial&)>& keep) const;
  /// Re-indexes onto the listed variables; every other variable must be absent.
  MPoly restrict_to(std::span<const std::size_t> vars) const;
  /// Re-embeds into a ring with more variables: variable i becomes slot[i].
  MPoly embed(std::size_t new_nvars, std::span<const std::size_t> slot) const;
  MPoly pow(unsigned e) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Human-readable form; variables are named x1.. unless names are given.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void require_same_ring(const MPoly& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Exact gradient (component i is dF/dx_i).
std::vector<MPoly> grad(const MPoly& f);
/// Exact Laplacian sum_i d^2F/dx_i^2.
MPoly laplacian(const MPoly& f);
/// Exact <grad F, grad G>.
MPoly grad_inner(const MPoly& f, const MPoly& g);
/// Substitutes x_i <- sum_j rows(i, j) u_j; rows is nvars x new_nvars.
MPoly subst_linear(const MPoly& f, const RMat& rows, std::size_t new_nvars);
/// Euler operator sum_i x_i dF/dx_i.
MPoly euler_operator(const MPoly& f);

/// Outcome of checking the two Cartan-Muenzner equations.
struct CmResult {
  bool gradient_ok = false;
  bool laplacian_ok = false;
  /// Term counts of the nonzero differences (0 when the identity holds).
  std::size_t gradient_residual_terms = 0;
  std::size_t laplacian_residual_terms = 0;
  MPoly gradient_norm;  ///< |grad F|^2 as computed
  MPoly laplacian;      ///< Delta F as computed

  bool pass() const { return gradient_ok && laplacian_ok; }
};

/// Checks |grad F|^2 = g^2 |x|^(2g-2) and Delta F = (m2-m1) g^2 |x|^(g-2) / 2
/// as polynomial identities. Throws DomainError unless F is homogeneous of
/// degree g; odd g additionally requires m1 == m2.
CmResult verify_cm(const MPoly& f, unsigned g, unsigned m1, unsigned m2);

}  // namespace isopar

#endif  // ISOPAR_MPOLY_HPP
