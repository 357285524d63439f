#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfsa {

inline constexpr const char* version = "0.1.0";

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

// Malformed input files or datasets.
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Computations that cannot proceed numerically (singular systems, thresholds
// below the achievable numerical rank).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Sample matrices store one d-dimensional sample per column.
inline void validate_samples(const Matrix& X) {
  require(X.cols() >= 1, "sample matrix must contain at least one column");
  require(X.rows() >= 1, "sample matrix must have positive dimension");
  require(X.allFinite(), "sample matrix contains non-finite entries");
}

}  // namespace kfsa
