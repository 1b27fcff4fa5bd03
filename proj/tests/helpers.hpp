#ifndef ISOPAR_TESTS_HELPERS_HPP
#define ISOPAR_TESTS_HELPERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "isopar/matrix.hpp"
#include "isopar/mpoly.hpp"
#include "isopar/scalar.hpp"

namespace th {

using isopar::MPoly;
using isopar::Monomial;
using isopar::RMat;
using isopar::Scalar;

inline Scalar random_scalar(std::mt19937_64& rng, bool with_sqrt2 = true) {
  auto small = [&] { return mpq_class(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1); };
  return with_sqrt2 ? Scalar(small(), small()) : Scalar(small());
}

inline MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, std::size_t nterms) {
  std::vector<MPoly::Term> terms;
  for (std::size_t k = 0; k < nterms; ++k) {
    Monomial m;
    unsigned left = static_cast<unsigned>(rng() % (max_deg + 1));
    while (left > 0) {
      const std::size_t v = rng() % nvars;
      m.set(v, m[v] + 1);
      --left;
    }
    terms.emplace_back(m, random_scalar(rng));
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

inline RMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  RMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng);
  return m;
}

inline std::vector<double> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> p(n);
  for (auto& v : p) v = u(rng);
  return p;
}

}  // namespace th

#endif
