#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqi/qcm.hpp"

namespace gqi {

struct LawResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  // Replay hint for the first failing instance (seed and trial index).
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

void record_failure(LawResult& law, std::uint64_t seed, int trial,
                    double value);

// Schur-complement calculus laws on random symmetric/PD matrices and QCMs.
std::vector<LawResult> verify_schur(int trials, std::uint64_t seed);

// Williamson decomposition and symplectic-spectrum laws on random QCMs.
std::vector<LawResult> verify_symplectic(int trials, std::uint64_t seed);

// Log-determinant mutual information laws, including the pure-state identity
// and the homodyne limit.
std::vector<LawResult> verify_infomeasures(int trials, std::uint64_t seed);

// Saddle-point check: on random two-mode QCMs, the intrinsic-entanglement
// lower/upper estimates bracket the formation measure within 2e-2 bits.
// Each trial runs the full optimizer stack and is much slower than the
// structural suites.
std::vector<LawResult> verify_conjecture(int trials, std::uint64_t seed);

}  // namespace gqi
