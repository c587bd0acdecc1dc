#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gqi/qcm.hpp"

namespace gqi {

// QCM file format:
//   {"ordering": "xp"|"modewise",
//    "subsystems": [{"name": "A", "modes": 1}, ...],
//    "matrix": [[...], ...]}
// The reader validates symmetry (tol 1e-10) and the bona fide condition
// (tol 1e-9) and names the failed check in the error message.

Qcm qcm_from_json(const nlohmann::json& j);
nlohmann::json qcm_to_json(const Qcm& V, Ordering ordering = Ordering::XpBlock);

Qcm read_qcm(const std::string& path);
void write_qcm(const Qcm& V, const std::string& path,
               Ordering ordering = Ordering::XpBlock);

}  // namespace gqi
