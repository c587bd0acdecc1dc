#include "gqi/io.hpp"

#include <cmath>
#include <fstream>

namespace gqi {

Qcm qcm_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("ordering") || !j.contains("subsystems") ||
      !j.contains("matrix")) {
    throw InvalidInputError(
        "QCM JSON must contain 'ordering', 'subsystems' and 'matrix'");
  }
  const std::string ord_s = j.at("ordering").get<std::string>();
  Ordering ord;
  if (ord_s == "xp") {
    ord = Ordering::XpBlock;
  } else if (ord_s == "modewise") {
    ord = Ordering::ModeWise;
  } else {
    throw InvalidInputError("QCM JSON: ordering must be 'xp' or 'modewise'");
  }

  std::vector<Subsystem> subs;
  for (const auto& s : j.at("subsystems")) {
    subs.push_back({s.at("name").get<std::string>(), s.at("modes").get<int>()});
  }
  Partition part{subs};

  const auto& rows = j.at("matrix");
  const int n = static_cast<int>(rows.size());
  if (n != part.dim()) {
    throw InvalidInputError("QCM JSON: matrix dimension " + std::to_string(n) +
                            " does not match partition dimension " +
                            std::to_string(part.dim()));
  }
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw InvalidInputError("QCM JSON: matrix is not square");
    }
    for (int k = 0; k < n; ++k) {
      const double v = rows[i][k].get<double>();
      if (!std::isfinite(v)) {
        throw InvalidInputError("QCM JSON: matrix entries must be finite");
      }
      M(i, k) = v;
    }
  }
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidInputError("QCM validation failed: symmetry (tol 1e-10)");
  }
  if (ord == Ordering::ModeWise) {
    M = reorder(M, Ordering::ModeWise, Ordering::XpBlock);
  }
  Qcm V(std::move(M), std::move(part));
  if (!V.is_bona_fide(1e-9)) {
    throw InvalidInputError(
        "QCM validation failed: bona fide condition V + i*Omega >= 0 (tol 1e-9)");
  }
  return V;
}

nlohmann::json qcm_to_json(const Qcm& V, Ordering ordering) {
  nlohmann::json j;
  j["ordering"] = (ordering == Ordering::XpBlock) ? "xp" : "modewise";
  j["subsystems"] = nlohmann::json::array();
  for (const auto& s : V.partition.subsystems()) {
    j["subsystems"].push_back({{"name", s.name}, {"modes", s.modes}});
  }
  Eigen::MatrixXd M = (ordering == Ordering::XpBlock)
                          ? V.matrix
                          : reorder(V.matrix, Ordering::XpBlock, Ordering::ModeWise);
  auto rows = nlohmann::json::array();
  for (int i = 0; i < M.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < M.cols(); ++k) row.push_back(M(i, k));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

Qcm read_qcm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open QCM file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError("QCM JSON parse error in " + path + ": " + e.what());
  }
  return qcm_from_json(j);
}

void write_qcm(const Qcm& V, const std::string& path, Ordering ordering) {
  std::ofstream out(path);
  if (!out) throw NumericError("cannot write QCM file: " + path);
  out << qcm_to_json(V, ordering).dump(2) << "\n";
}

}  // namespace gqi
