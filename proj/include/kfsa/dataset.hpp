#pragma once

#include <vector>

#include "kfsa/types.hpp"

namespace kfsa {

enum class OutputEncoding { regression, one_hot };

// Output matrix Y with one d'-dimensional output per column.
struct OutputMatrix {
  Matrix values;
  OutputEncoding encoding = OutputEncoding::regression;

  static OutputMatrix one_hot(const std::vector<int>& labels, int num_classes) {
    require(num_classes >= 1, "one_hot requires at least one class");
    Matrix y = Matrix::Zero(num_classes, static_cast<Index>(labels.size()));
    for (std::size_t j = 0; j < labels.size(); ++j) {
      require(labels[j] >= 0 && labels[j] < num_classes, "label out of range");
      y(labels[j], static_cast<Index>(j)) = 1.0;
    }
    return OutputMatrix{std::move(y), OutputEncoding::one_hot};
  }

  // one_hot columns must contain exactly one entry equal to 1, rest 0.
  void validate() const {
    require(values.allFinite(), "output matrix contains non-finite entries");
    if (encoding != OutputEncoding::one_hot) return;
    for (Index j = 0; j < values.cols(); ++j) {
      int ones = 0;
      for (Index i = 0; i < values.rows(); ++i) {
        if (values(i, j) == 1.0) {
          ++ones;
        } else {
          require(values(i, j) == 0.0, "one_hot entries must be 0 or 1");
        }
      }
      require(ones == 1, "one_hot columns must contain exactly one 1");
    }
  }

  // class index per column (one_hot only)
  std::vector<int> labels() const {
    require(encoding == OutputEncoding::one_hot, "labels() requires one_hot encoding");
    std::vector<int> out(static_cast<std::size_t>(values.cols()));
    for (Index j = 0; j < values.cols(); ++j) {
      Index best = 0;
      values.col(j).maxCoeff(&best);
      out[static_cast<std::size_t>(j)] = static_cast<int>(best);
    }
    return out;
  }
};

// Per-dimension min-max constants fitted on training data and reused verbatim
// on test data: x_hat_i = (x_i - lower_i) / (upper_i - lower_i).
struct Normalizer {
  Vector lower;
  Vector upper;
};

inline Normalizer fit_normalizer(const Matrix& X) {
  validate_samples(X);
  return Normalizer{X.rowwise().minCoeff(), X.rowwise().maxCoeff()};
}

// Constant dimensions (upper == lower) map to zero. Values outside the fitted
// range map outside [0, 1]; they are not clipped.
inline Matrix apply_normalizer(const Normalizer& n, const Matrix& X) {
  require(n.lower.size() == n.upper.size(), "normalizer bounds must share dimension");
  require(X.rows() == n.lower.size(), "normalizer dimension mismatch");
  require((n.upper.array() >= n.lower.array()).all(), "normalizer requires upper >= lower");
  Matrix out(X.rows(), X.cols());
  for (Index i = 0; i < X.rows(); ++i) {
    const double span = n.upper[i] - n.lower[i];
    if (span == 0.0) {
      out.row(i).setZero();
    } else {
      out.row(i) = (X.row(i).array() - n.lower[i]) / span;
    }
  }
  return out;
}

inline Vector apply_normalizer(const Normalizer& n, Eigen::Ref<const Vector> x) {
  Matrix m = x;
  return apply_normalizer(n, m).col(0);
}

enum class Split { train, test };

struct LabeledDataset {
  Matrix X;        // d x m
  OutputMatrix Y;  // d' x m
  Split split = Split::train;

  Index dimension() const { return X.rows(); }
  Index samples() const { return X.cols(); }

  void validate() const {
    validate_samples(X);
    require(Y.values.cols() == X.cols(), "input/output sample counts differ");
    Y.validate();
  }
};

}  // namespace kfsa
