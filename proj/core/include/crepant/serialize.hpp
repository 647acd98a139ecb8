#ifndef CREPANT_SERIALIZE_HPP
#define CREPANT_SERIALIZE_HPP

#include "crepant/matgroup.hpp"

#include <json.hpp>

namespace crepant {

/** {"conductor": n, "coeffs": ["num/den", ...]} over the power basis. */
nlohmann::json cycnum_to_json(const CycNum& x);
CycNum cycnum_from_json(const nlohmann::json& j);

/** {"dim": n, "conductor": m, "entries": [[CycNum...], ...]} row major. */
nlohmann::json matrix_to_json(const MatrixOverCyc& m);
MatrixOverCyc matrix_from_json(const nlohmann::json& j);

}  // namespace crepant

#endif
