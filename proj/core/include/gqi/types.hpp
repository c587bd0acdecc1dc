#pragma once

#include <stdexcept>
#include <string>

namespace gqi {

// Phase-space coordinate orderings for 2m-dimensional vectors/matrices.
//   XpBlock:  (x_1, ..., x_m, p_1, ..., p_m)   -- the internal canonical form
//   ModeWise: (x_1, p_1, ..., x_m, p_m)        -- accepted at I/O boundaries
enum class Ordering { XpBlock, ModeWise };

// Error taxonomy. Validation problems derive from std::invalid_argument,
// runtime/numeric problems from std::runtime_error.

struct InvalidShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PartitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ChannelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix block was too ill-conditioned to invert safely.
class SingularBlockError : public std::runtime_error {
 public:
  SingularBlockError(const std::string& msg, double condition_estimate)
      : std::runtime_error(msg), condition_(condition_estimate) {}
  double condition_estimate() const { return condition_; }

 private:
  double condition_;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceError : NumericError {
  using NumericError::NumericError;
};

}  // namespace gqi
