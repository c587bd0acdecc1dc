#include "gqi/qcm.hpp"

#include <complex>

#include "gqi/schur.hpp"

namespace gqi {

Qcm::Qcm(Eigen::MatrixXd m, Partition p)
    : matrix(std::move(m)), partition(std::move(p)) {
  if (matrix.rows() != partition.dim() || matrix.cols() != partition.dim()) {
    throw InvalidShapeError("Qcm: matrix dimension does not match partition");
  }
}

Qcm Qcm::block(const std::vector<std::string>& names) const {
  const auto idx = partition.xp_indices(names);
  return Qcm(submatrix(matrix, idx), partition.subset(names));
}

double Qcm::bona_fide_violation() const {
  const Eigen::MatrixXcd H =
      matrix.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * omega(modes()).cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return std::max(0.0, -min_eig);
}

bool Qcm::is_bona_fide(double tol) const {
  const double sym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  return sym <= 1e-10 * std::max(1.0, matrix.cwiseAbs().maxCoeff()) &&
         bona_fide_violation() <= tol;
}

void Qcm::require_bona_fide(double tol) const {
  if (!is_bona_fide(tol)) {
    throw InvalidInputError("QCM fails the bona fide condition V + i*Omega >= 0");
  }
}

bool Qcm::is_pure(double tol) const { return is_pure_qcm(matrix, tol); }

Qcm direct_sum(const Qcm& a, const Qcm& b) {
  Partition pa = a.partition;
  Partition pb = b.partition;
  bool clash = false;
  for (const auto& s : pb.subsystems()) {
    if (pa.has(s.name)) clash = true;
  }
  if (clash) {
    pa = pa.with_suffix("1");
    pb = pb.with_suffix("2");
  }
  std::vector<Subsystem> subs = pa.subsystems();
  subs.insert(subs.end(), pb.subsystems().begin(), pb.subsystems().end());
  Partition part{subs};

  const int ma = a.modes(), mb = b.modes(), m = ma + mb;
  // Global XpBlock indices of a's and b's rows inside the combined layout.
  auto scatter = [&](const Qcm& src, int mode_off, Eigen::MatrixXd& out) {
    const int ms = src.modes();
    std::vector<int> g(2 * ms);
    for (int k = 0; k < ms; ++k) {
      g[k] = mode_off + k;           // x row
      g[ms + k] = m + mode_off + k;  // p row
    }
    for (int i = 0; i < 2 * ms; ++i) {
      for (int j = 0; j < 2 * ms; ++j) {
        out(g[i], g[j]) = src.matrix(i, j);
      }
    }
  };
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  scatter(a, 0, M);
  scatter(b, ma, M);
  return Qcm(std::move(M), std::move(part));
}

Qcm direct_sum_power(const Qcm& a, int n) {
  if (n < 1) throw InvalidInputError("direct_sum_power: n must be >= 1");
  Qcm acc(a.matrix, a.partition.with_suffix("1"));
  for (int k = 2; k <= n; ++k) {
    Qcm next(a.matrix, a.partition.with_suffix(std::to_string(k)));
    Qcm merged = direct_sum(acc, next);  // names already distinct: no re-suffix
    acc = std::move(merged);
  }
  return acc;
}

Qcm measurement_update(const Qcm& V, const Qcm& gamma) {
  V.require_bona_fide();
  gamma.require_bona_fide();
  const auto meas = gamma.partition.names();
  for (const auto& n : meas) {
    if (!V.partition.has(n) || V.partition.modes_of(n) != gamma.partition.modes_of(n)) {
      throw PartitionError("measurement_update: seed partition does not match '" + n + "'");
    }
  }
  if (meas.size() == V.partition.size()) {
    throw PartitionError("measurement_update: cannot measure every subsystem");
  }
  const auto idx = V.partition.xp_indices(meas);
  Eigen::MatrixXd sum = V.matrix;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sum(idx[i], idx[j]) += gamma.matrix(i, j);
    }
  }
  const auto rest = V.partition.complement(meas);
  return Qcm(schur_complement(sum, idx), V.partition.subset(rest));
}

}  // namespace gqi
