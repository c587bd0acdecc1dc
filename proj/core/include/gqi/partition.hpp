#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gqi/types.hpp"

namespace gqi {

struct Subsystem {
  std::string name;
  int modes = 0;
  bool operator==(const Subsystem&) const = default;
};

// Ordered list of named subsystems with mode counts. Index maps into the
// global XpBlock layout are derived on demand: mode k of the whole system
// owns row k (its x quadrature) and row m+k (its p quadrature).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Subsystem> subs);
  Partition(std::initializer_list<Subsystem> subs);

  const std::vector<Subsystem>& subsystems() const { return subs_; }
  int total_modes() const { return total_modes_; }
  int dim() const { return 2 * total_modes_; }
  std::size_t size() const { return subs_.size(); }

  bool has(const std::string& name) const;
  int modes_of(const std::string& name) const;
  // First global mode index of the named subsystem.
  int mode_offset(const std::string& name) const;

  std::vector<std::string> names() const;
  std::vector<std::string> complement(const std::vector<std::string>& names) const;

  // Global mode indices of the named subsystems, in the order given.
  std::vector<int> mode_indices(const std::vector<std::string>& names) const;
  // Global XpBlock row indices: x rows of the selected modes, then p rows.
  std::vector<int> xp_indices(const std::vector<std::string>& names) const;

  Partition subset(const std::vector<std::string>& names) const;
  Partition with_suffix(const std::string& suffix) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Subsystem> subs_;
  int total_modes_ = 0;
};

// Gather the principal submatrix M[idx, idx].
Eigen::MatrixXd submatrix(const Eigen::MatrixXd& M, const std::vector<int>& idx);

}  // namespace gqi
