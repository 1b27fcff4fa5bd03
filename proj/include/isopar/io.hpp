#ifndef ISOPAR_IO_HPP
#define ISOPAR_IO_HPP

#include <string>

#include <json.hpp>

#include "isopar/matrix.hpp"
#include "isopar/mpoly.hpp"
#include "isopar/scalar.hpp"

namespace isopar {

using json = nlohmann::json;

/// {"r": "p/q", "s": "p/q"}
json scalar_to_json(const Scalar& v);
Scalar scalar_from_json(const json& j);

/// {"nvars": n, "terms": [{"exp": [...], "r": "p/q", "s": "p/q"}]}
json poly_to_json(const MPoly& p);
MPoly poly_from_json(const json& j);

/// Row-major list of rows of exact scalars.
json matrix_to_json(const RMat& m);
RMat matrix_from_json(const json& j);

}  // namespace isopar

#endif  // ISOPAR_IO_HPP
