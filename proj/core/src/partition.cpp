#include "gqi/partition.hpp"

#include <algorithm>
#include <set>

namespace gqi {

Partition::Partition(std::vector<Subsystem> subs) : subs_(std::move(subs)) {
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.name.empty()) {
      throw PartitionError("subsystem name must be non-empty");
    }
    if (s.modes < 0) {
      throw PartitionError("subsystem '" + s.name + "' has negative mode count");
    }
    if (!seen.insert(s.name).second) {
      throw PartitionError("duplicate subsystem name '" + s.name + "'");
    }
    total_modes_ += s.modes;
  }
}

Partition::Partition(std::initializer_list<Subsystem> subs)
    : Partition(std::vector<Subsystem>(subs)) {}

bool Partition::has(const std::string& name) const {
  return std::any_of(subs_.begin(), subs_.end(),
                     [&](const Subsystem& s) { return s.name == name; });
}

int Partition::modes_of(const std::string& name) const {
  for (const auto& s : subs_) {
    if (s.name == name) return s.modes;
  }
  throw PartitionError("unknown subsystem '" + name + "'");
}

int Partition::mode_offset(const std::string& name) const {
  int off = 0;
  for (const auto& s : subs_) {
    if (s.name == name) return off;
    off += s.modes;
  }
  throw PartitionError("unknown subsystem '" + name + "'");
}

std::vector<std::string> Partition::names() const {
  std::vector<std::string> out;
  out.reserve(subs_.size());
  for (const auto& s : subs_) out.push_back(s.name);
  return out;
}

std::vector<std::string> Partition::complement(
    const std::vector<std::string>& names) const {
  for (const auto& n : names) {
    if (!has(n)) throw PartitionError("unknown subsystem '" + n + "'");
  }
  std::vector<std::string> out;
  for (const auto& s : subs_) {
    if (std::find(names.begin(), names.end(), s.name) == names.end()) {
      out.push_back(s.name);
    }
  }
  return out;
}

std::vector<int> Partition::mode_indices(
    const std::vector<std::string>& names) const {
  std::vector<int> out;
  for (const auto& n : names) {
    const int off = mode_offset(n);
    const int m = modes_of(n);
    for (int k = 0; k < m; ++k) out.push_back(off + k);
  }
  return out;
}

std::vector<int> Partition::xp_indices(
    const std::vector<std::string>& names) const {
  const auto modes = mode_indices(names);
  std::vector<int> out;
  out.reserve(2 * modes.size());
  for (int k : modes) out.push_back(k);
  for (int k : modes) out.push_back(total_modes_ + k);
  return out;
}

Partition Partition::subset(const std::vector<std::string>& names) const {
  std::vector<Subsystem> subs;
  for (const auto& n : names) subs.push_back({n, modes_of(n)});
  return Partition(std::move(subs));
}

Partition Partition::with_suffix(const std::string& suffix) const {
  std::vector<Subsystem> subs = subs_;
  for (auto& s : subs) s.name += suffix;
  return Partition(std::move(subs));
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& M, const std::vector<int>& idx) {
  Eigen::MatrixXd out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      out(i, j) = M(idx[i], idx[j]);
    }
  }
  return out;
}

}  // namespace gqi
