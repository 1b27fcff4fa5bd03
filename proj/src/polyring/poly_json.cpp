#include <vector>

#include "isopar/error.hpp"
#include "isopar/io.hpp"

namespace isopar {

json scalar_to_json(const Scalar& v) {
  return json{{"r", v.rational_part().get_str()}, {"s", v.sqrt2_part().get_str()}};
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r")) throw ParseError("scalar needs an \"r\" field");
  const auto text = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("scalar parts must be strings or integers");
  };
  return Scalar::parse(text(j.at("r")), j.contains("s") ? text(j.at("s")) : "0");
}

json poly_to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> exps(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) exps[i] = m[i];
    json t = scalar_to_json(c);
    t["exp"] = exps;
    terms.push_back(std::move(t));
  }
  return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MPoly poly_from_json(const json& j) {
  try {
    const auto n = j.at("nvars").get<std::size_t>();
    if (n > kMaxVars) throw ParseError("nvars exceeds 64");
    std::vector<MPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& exps = t.at("exp");
      if (!exps.is_array() || exps.size() != n) throw ParseError("exponent vector length must equal nvars");
      Monomial m;
      for (std::size_t i = 0; i < n; ++i) {
        const auto e = exps[i].get<long long>();
        if (e < 0 || e > 255) throw ParseError("exponent out of range");
        m.set(i, static_cast<unsigned>(e));
      }
      terms.emplace_back(m, scalar_from_json(t));
    }
    return MPoly::from_terms(n, std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

json matrix_to_json(const RMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMat matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Scalar> row;
    for (const auto& v : r) row.push_back(scalar_from_json(v));
    rows.push_back(std::move(row));
  }
  return RMat::from_rows(rows);
}

}  // namespace isopar
