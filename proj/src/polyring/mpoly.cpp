#include "isopar/mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <unordered_map>

#include "isopar/error.hpp"

namespace isopar {

namespace {

/// Hash-map accumulation of terms; the workhorse behind products and
/// substitutions.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t expected = 0) { map_.reserve(expected); }

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add_product(const Monomial& m, const Scalar& a, const Scalar& b) {
    auto [it, inserted] = map_.try_emplace(m, a);
    if (inserted) {
      it->second *= b;
    } else {
      it->second += a * b;
    }
  }

  MPoly finish(std::size_t nvars) {
    std::vector<MPoly::Term> terms;
    terms.reserve(map_.size());
    for (auto& [m, c] : map_)
      if (!c.is_zero()) terms.emplace_back(m, std::move(c));
    map_.clear();
    return MPoly::from_terms(nvars, std::move(terms));
  }

 private:
  std::unordered_map<Monomial, Scalar, MonomialHash> map_;
};

bool term_order(const MPoly::Term& a, const MPoly::Term& b) { return grlex_greater(a.first, b.first); }

void append_coefficient(std::ostringstream& os, const Scalar& c, bool first, bool has_monomial) {
  const bool pure_sqrt2 = sgn(c.rational_part()) == 0;
  if (!c.is_rational() && !pure_sqrt2) {
    if (!first) os << " + ";
    os << '(' << c.to_string() << ')' << (has_monomial ? "*" : "");
    return;
  }
  const mpq_class& q = pure_sqrt2 ? c.sqrt2_part() : c.rational_part();
  const bool negative = sgn(q) < 0;
  if (!first) os << (negative ? " - " : " + ");
  else if (negative) os << '-';
  const mpq_class mag = abs(q);
  const bool unit = mag == 1;
  if (pure_sqrt2) {
    if (!unit) os << mag.get_str() << '*';
    os << "sqrt2" << (has_monomial ? "*" : "");
  } else if (!(unit && has_monomial)) {
    os << mag.get_str() << (has_monomial ? "*" : "");
  }
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::unit(std::size_t var, unsigned power) {
  Monomial m;
  m.set(var, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw DimensionError("variable index beyond kMaxVars");
  if (e > 255) throw DomainError("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::degree_in(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (auto v : vars) d += exps_[v];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exps_[i]) + unsigned(o.exps_[i]);
    if (e > 255) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + o.degree_);
  return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars) > 0;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t k = 0; k < kMaxVars; k += 8) {
    std::uint64_t w;
    std::memcpy(&w, exps_.data() + k, 8);
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw DimensionError("too many variables (max 64)");
}

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t var, const Scalar& c) {
  if (var >= nvars) throw DimensionError("variable index out of range");
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial::unit(var), c);
  return p;
}

MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MPoly p(nvars);
  std::sort(terms.begin(), terms.end(), term_order);
  for (auto& t : terms) {
    for (std::size_t i = nvars; i < kMaxVars; ++i)
      if (t.first[i] != 0) throw DimensionError("term uses a variable beyond nvars");
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MPoly MPoly::norm_sq(std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < nvars; ++i) terms.emplace_back(Monomial::unit(i, 2), Scalar(1));
  return from_terms(nvars, std::move(terms));
}

int MPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree());
}

bool MPoly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return static_cast<int>(t.first.degree()) == d; });
}

Scalar MPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_greater(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Scalar();
}

Scalar MPoly::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong dimension");
  Scalar acc;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

double MPoly::eval(std::span<const double> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has wrong dimension");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double v = c.to_double();
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i] != 0) v *= std::pow(point[i], static_cast<int>(m[i]));
    acc += v;
  }
  return acc;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    out.emplace_back(d, c * Scalar(static_cast<long>(e)));
  }
  return from_terms(nvars_, std::move(out));
}

MPoly MPoly::coefficient_of(std::size_t var, unsigned power) const {
  if (var >= nvars_) throw DimensionError("variable index out of range");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m[var] != power) continue;
    Monomial d = m;
    d.set(var, 0);
    out.emplace_back(d, c);
  }
  return from_terms(nvars_, std::move(out));
}

MPoly MPoly::filter(const std::function<bool(const Monomial&)>& keep) const {
  MPoly p(nvars_);
  for (const auto& t : terms_)
    if (keep(t.first)) p.terms_.push_back(t);
  return p;
}

MPoly MPoly::restrict_to(std::span<const std::size_t> vars) const {
  std::vector<bool> kept(nvars_, false);
  for (auto v : vars) {
    if (v >= nvars_) throw DimensionError("restrict_to: variable out of range");
    kept[v] = true;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i)
      if (!kept[i] && m[i] != 0) throw DimensionError("restrict_to: dropped variable is present");
    Monomial r;
    for (std::size_t k = 0; k < vars.size(); ++k) r.set(k, m[vars[k]]);
    out.emplace_back(r, c);
  }
  return from_terms(vars.size(), std::move(out));
}

MPoly MPoly::embed(std::size_t new_nvars, std::span<const std::size_t> slot) const {
  if (slot.size() != nvars_) throw DimensionError("embed: slot map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (slot[i] >= new_nvars) throw DimensionError("embed: slot out of range");
      r.set(slot[i], r[slot[i]] + m[i]);
    }
    out.emplace_back(r, c);
  }
  return from_terms(new_nvars, std::move(out));
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, Scalar(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void MPoly::require_same_ring(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials live in different rings");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_ring(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && grlex_greater(a->first, b->first))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_greater(b->first, a->first)) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_ring(b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars_);
  TermAccumulator acc(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc.add_product(ma * mb, ca, cb);
  return acc.finish(a.nvars_);
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool has_monomial = m.degree() > 0;
    append_coefficient(os, c, first, has_monomial);
    bool first_var = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      if (i < names.size()) os << names[i];
      else os << 'x' << (i + 1);
      if (m[i] > 1) os << '^' << m[i];
    }
    first = false;
  }
  return os.str();
}

// -------------------------------------------------------------- calculus

std::vector<MPoly> grad(const MPoly& f) {
  std::vector<MPoly> g;
  g.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

MPoly laplacian(const MPoly& f) {
  std::vector<MPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const unsigned e = m[i];
      if (e < 2) continue;
      Monomial d = m;
      d.set(i, e - 2);
      out.emplace_back(d, c * Scalar(static_cast<long>(e * (e - 1))));
    }
  }
  return MPoly::from_terms(f.nvars(), std::move(out));
}

MPoly grad_inner(const MPoly& f, const MPoly& g) {
  if (f.nvars() != g.nvars()) throw DimensionError("grad_inner: different rings");
  const auto gf = grad(f);
  const bool same = (&f == &g) || f == g;
  const auto gg = same ? std::vector<MPoly>{} : grad(g);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    expected += gf[i].size() * (same ? gf[i].size() : gg[i].size());
  TermAccumulator acc(expected / 2 + 16);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    const MPoly& a = gf[i];
    const MPoly& b = same ? gf[i] : gg[i];
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) acc.add_product(ma * mb, ca, cb);
  }
  return acc.finish(f.nvars());
}

MPoly subst_linear(const MPoly& f, const RMat& rows, std::size_t new_nvars) {
  if (rows.rows() != f.nvars() || rows.cols() != new_nvars)
    throw DimensionError("subst_linear: substitution matrix must be nvars x new_nvars");
  std::vector<std::vector<MPoly>> powers(f.nvars());
  auto power = [&](std::size_t var, unsigned e) -> const MPoly& {
    auto& cache = powers[var];
    if (cache.empty()) {
      std::vector<MPoly::Term> lin;
      for (std::size_t j = 0; j < new_nvars; ++j)
        if (!rows(var, j).is_zero()) lin.emplace_back(Monomial::unit(j), rows(var, j));
      cache.push_back(MPoly::constant(new_nvars, Scalar(1)));
      cache.push_back(MPoly::from_terms(new_nvars, std::move(lin)));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  TermAccumulator acc(f.size() * 8);
  for (const auto& [m, c] : f.terms()) {
    MPoly prod = MPoly::constant(new_nvars, c);
    for (std::size_t i = 0; i < f.nvars() && !prod.is_zero(); ++i)
      if (m[i] != 0) prod = prod * power(i, m[i]);
    for (const auto& [pm, pc] : prod.terms()) acc.add(pm, pc);
  }
  return acc.finish(new_nvars);
}

MPoly euler_operator(const MPoly& f) {
  std::vector<MPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms())
    out.emplace_back(m, c * Scalar(static_cast<long>(m.degree())));
  return MPoly::from_terms(f.nvars(), std::move(out));
}

CmResult verify_cm(const MPoly& f, unsigned g, unsigned m1, unsigned m2) {
  if (g == 0) throw DomainError("verify_cm: g must be positive");
  if (f.is_zero() || !f.is_homogeneous(static_cast<int>(g)))
    throw DomainError("verify_cm: F is not homogeneous of degree " + std::to_string(g));
  if (g % 2 == 1 && m1 != m2)
    throw DomainError("verify_cm: odd g requires m1 == m2 (|x|^(g-2) is not polynomial)");
  const std::size_t n = f.nvars();
  const MPoly r2 = MPoly::norm_sq(n);
  const Scalar g2(static_cast<long>(g * g));

  CmResult res;
  res.gradient_norm = grad_inner(f, f);
  const MPoly grad_target = r2.pow(g - 1) * g2;
  const MPoly grad_diff = res.gradient_norm - grad_target;
  res.gradient_residual_terms = grad_diff.size();
  res.gradient_ok = grad_diff.is_zero();

  res.laplacian = laplacian(f);
  MPoly lap_target(n);
  if (m1 != m2) {
    const Scalar c = Scalar(static_cast<long>(m2) - static_cast<long>(m1)) * g2 / Scalar(2);
    lap_target = r2.pow((g - 2) / 2) * c;
  }
  const MPoly lap_diff = res.laplacian - lap_target;
  res.laplacian_residual_terms = lap_diff.size();
  res.laplacian_ok = lap_diff.is_zero();
  return res;
}

}  // namespace isopar
