#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <variant>
#include <vector>

#include "kfsa/types.hpp"

namespace kfsa {

// k(x, x') = exp(-kappa * ||x - x'||^2)
struct GaussianKernel {
  double kappa = 1.0;
};

// k(x, x') = (kappa + x^T x')^degree
struct PolynomialKernel {
  double kappa = 1.0;
  int degree = 3;
};

// k(x, x') = prod_j cos(kappa * (x_{p_j} - x'_{p_j})) over a pixel subset.
// Evaluated through cos(a-b) = cos(a)cos(b) + sin(a)sin(b) so that Gram
// assembly can reuse per-sample cosine/sine tables and produce entries that
// are bit-identical to kernel_eval.
struct CosineProductKernel {
  double kappa = 1.0;
  std::vector<Index> pixels;
};

// Normalized sum of cosine-product kernels over all nonempty combinations of
// B disjoint pixel blocks: k = (prod_b (1 + k_b) - 1) / (2^B - 1).
struct BlockCompositeKernel {
  double kappa = 1.0;
  std::vector<std::vector<Index>> blocks;
};

using KernelSpec =
    std::variant<GaussianKernel, PolynomialKernel, CosineProductKernel, BlockCompositeKernel>;

namespace detail {

inline double pow_int(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// 2^b - 1, exact for b < 53.
inline double pow2_minus_one(std::size_t b) { return std::ldexp(1.0, static_cast<int>(b)) - 1.0; }

inline void check_distinct(const std::vector<Index>& pixels, std::set<Index>& seen) {
  for (Index p : pixels) {
    require(p >= 0, "pixel indices must be nonnegative");
    require(seen.insert(p).second, "pixel indices must be mutually distinct");
  }
}

}  // namespace detail

inline void validate_kernel(const KernelSpec& spec) {
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, GaussianKernel>) {
          require(k.kappa > 0.0 && std::isfinite(k.kappa), "Gaussian kernel requires kappa > 0");
        } else if constexpr (std::is_same_v<T, PolynomialKernel>) {
          require(k.kappa >= 0.0 && std::isfinite(k.kappa),
                  "polynomial kernel requires kappa >= 0");
          require(k.degree >= 1, "polynomial kernel requires degree >= 1");
        } else if constexpr (std::is_same_v<T, CosineProductKernel>) {
          require(k.kappa > 0.0 && std::isfinite(k.kappa),
                  "cosine product kernel requires kappa > 0");
          require(!k.pixels.empty(), "cosine product kernel requires at least one pixel");
          std::set<Index> seen;
          detail::check_distinct(k.pixels, seen);
        } else {
          require(k.kappa > 0.0 && std::isfinite(k.kappa),
                  "block composite kernel requires kappa > 0");
          require(!k.blocks.empty(), "block composite kernel requires at least one block");
          std::set<Index> seen;  // blocks must be mutually disjoint
          for (const auto& block : k.blocks) {
            require(!block.empty(), "block composite kernel blocks must be nonempty");
            detail::check_distinct(block, seen);
          }
        }
      },
      spec);
}

// Smallest sample dimension the kernel can be evaluated on.
inline Index kernel_min_dimension(const KernelSpec& spec) {
  return std::visit(
      [](const auto& k) -> Index {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, CosineProductKernel>) {
          Index mx = 0;
          for (Index p : k.pixels) mx = std::max(mx, p + 1);
          return mx;
        } else if constexpr (std::is_same_v<T, BlockCompositeKernel>) {
          Index mx = 0;
          for (const auto& block : k.blocks)
            for (Index p : block) mx = std::max(mx, p + 1);
          return mx;
        } else {
          (void)k;
          return 1;
        }
      },
      spec);
}

namespace detail {

inline double eval_gaussian(double kappa, Eigen::Ref<const Vector> x, Eigen::Ref<const Vector> y) {
  return std::exp(-kappa * (x - y).squaredNorm());
}

inline double eval_polynomial(double kappa, int degree, Eigen::Ref<const Vector> x,
                              Eigen::Ref<const Vector> y) {
  return pow_int(kappa + x.dot(y), degree);
}

inline double eval_cosine(double kappa, const std::vector<Index>& pixels,
                          Eigen::Ref<const Vector> x, Eigen::Ref<const Vector> y) {
  double acc = 1.0;
  for (Index p : pixels) {
    acc *= std::cos(kappa * x[p]) * std::cos(kappa * y[p]) +
           std::sin(kappa * x[p]) * std::sin(kappa * y[p]);
  }
  return acc;
}

inline double eval_composite(double kappa, const std::vector<std::vector<Index>>& blocks,
                             Eigen::Ref<const Vector> x, Eigen::Ref<const Vector> y) {
  double prod = 1.0;
  for (const auto& block : blocks) prod *= 1.0 + eval_cosine(kappa, block, x, y);
  return (prod - 1.0) / pow2_minus_one(blocks.size());
}

inline double raw_eval(const KernelSpec& spec, Eigen::Ref<const Vector> x,
                       Eigen::Ref<const Vector> y) {
  return std::visit(
      [&](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, GaussianKernel>) {
          return eval_gaussian(k.kappa, x, y);
        } else if constexpr (std::is_same_v<T, PolynomialKernel>) {
          return eval_polynomial(k.kappa, k.degree, x, y);
        } else if constexpr (std::is_same_v<T, CosineProductKernel>) {
          return eval_cosine(k.kappa, k.pixels, x, y);
        } else {
          return eval_composite(k.kappa, k.blocks, x, y);
        }
      },
      spec);
}

// Deterministic byte-order comparison used to order kernel arguments.
inline bool byte_less(Eigen::Ref<const Vector> a, Eigen::Ref<const Vector> b) {
  for (Index i = 0; i < a.size(); ++i) {
    const auto ua = std::bit_cast<std::uint64_t>(a[i]);
    const auto ub = std::bit_cast<std::uint64_t>(b[i]);
    if (ua != ub) return ua < ub;
  }
  return false;
}

}  // namespace detail

// Single kernel evaluation. The two arguments are ordered canonically before
// evaluation so k(x, x') and k(x', x) are bit-identical.
inline double kernel_eval(const KernelSpec& spec, Eigen::Ref<const Vector> x,
                          Eigen::Ref<const Vector> y) {
  validate_kernel(spec);
  require(x.size() == y.size(), "kernel arguments must share dimension");
  require(x.size() >= kernel_min_dimension(spec), "sample dimension too small for kernel");
  require(x.allFinite() && y.allFinite(), "kernel arguments must be finite");
  if (detail::byte_less(y, x)) return detail::raw_eval(spec, y, x);
  return detail::raw_eval(spec, x, y);
}

// k(x, x) for every column of X.
inline Vector kernel_diagonal(const KernelSpec& spec, const Matrix& X) {
  validate_kernel(spec);
  validate_samples(X);
  require(X.rows() >= kernel_min_dimension(spec), "sample dimension too small for kernel");
  Vector d(X.cols());
  for (Index i = 0; i < X.cols(); ++i) d[i] = detail::raw_eval(spec, X.col(i), X.col(i));
  return d;
}

// (prod_b (G_b + 1) - 1) / (2^B - 1): the normalized sum over all nonempty
// block-subset Hadamard products of the given Gram matrices.
inline Matrix composite_gram(const std::vector<Matrix>& base_grams) {
  require(!base_grams.empty(), "composite_gram requires at least one Gram matrix");
  const Index rows = base_grams.front().rows();
  const Index cols = base_grams.front().cols();
  Matrix prod = Matrix::Ones(rows, cols);
  for (const Matrix& g : base_grams) {
    require(g.rows() == rows && g.cols() == cols, "composite_gram shape mismatch");
    prod.array() *= g.array() + 1.0;
  }
  const double divisor = detail::pow2_minus_one(base_grams.size());
  return ((prod.array() - 1.0) / divisor).matrix();
}

namespace detail {

// Entry evaluator for Gram assembly. For the cosine-based kernels it holds
// per-sample cos/sin tables; the per-entry arithmetic is the same sequence of
// operations as raw_eval, so results are bit-identical to kernel_eval.
class PairEvaluator {
 public:
  PairEvaluator(const KernelSpec& spec, const Matrix& X, const Matrix& Xp)
      : spec_(&spec), X_(&X), Xp_(&Xp) {
    std::visit(
        [&](const auto& k) {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, CosineProductKernel>) {
            tables_x_.push_back(make_tables(k.kappa, k.pixels, X));
            tables_y_.push_back(&X == &Xp ? tables_x_.front() : make_tables(k.kappa, k.pixels, Xp));
          } else if constexpr (std::is_same_v<T, BlockCompositeKernel>) {
            divisor_ = pow2_minus_one(k.blocks.size());
            for (const auto& block : k.blocks) {
              tables_x_.push_back(make_tables(k.kappa, block, X));
              tables_y_.push_back(&X == &Xp ? tables_x_.back() : make_tables(k.kappa, block, Xp));
            }
          }
        },
        spec);
  }

  double operator()(Index i, Index j) const {
    return std::visit(
        [&](const auto& k) -> double {
          using T = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<T, GaussianKernel>) {
            return eval_gaussian(k.kappa, X_->col(i), Xp_->col(j));
          } else if constexpr (std::is_same_v<T, PolynomialKernel>) {
            return eval_polynomial(k.kappa, k.degree, X_->col(i), Xp_->col(j));
          } else if constexpr (std::is_same_v<T, CosineProductKernel>) {
            return block_eval(0, i, j);
          } else {
            double prod = 1.0;
            for (std::size_t b = 0; b < tables_x_.size(); ++b) prod *= 1.0 + block_eval(b, i, j);
            return (prod - 1.0) / divisor_;
          }
        },
        *spec_);
  }

 private:
  struct Trig {
    Matrix c, s;  // pixels x samples
  };

  static Trig make_tables(double kappa, const std::vector<Index>& pixels, const Matrix& M) {
    Trig t;
    const Index r = static_cast<Index>(pixels.size());
    t.c.resize(r, M.cols());
    t.s.resize(r, M.cols());
    for (Index j = 0; j < M.cols(); ++j) {
      for (Index p = 0; p < r; ++p) {
        const double v = kappa * M(pixels[static_cast<std::size_t>(p)], j);
        t.c(p, j) = std::cos(v);
        t.s(p, j) = std::sin(v);
      }
    }
    return t;
  }

  double block_eval(std::size_t b, Index i, Index j) const {
    const Trig& tx = tables_x_[b];
    const Trig& ty = tables_y_[b];
    double acc = 1.0;
    for (Index p = 0; p < tx.c.rows(); ++p) {
      acc *= tx.c(p, i) * ty.c(p, j) + tx.s(p, i) * ty.s(p, j);
    }
    return acc;
  }

  const KernelSpec* spec_;
  const Matrix* X_;
  const Matrix* Xp_;
  std::vector<Trig> tables_x_, tables_y_;
  double divisor_ = 1.0;
};

}  // namespace detail

// Gram matrix between two sample sets: values(i, j) = k(X[:,i], Xp[:,j]).
inline Matrix gram(const KernelSpec& spec, const Matrix& X, const Matrix& Xp) {
  validate_kernel(spec);
  validate_samples(X);
  validate_samples(Xp);
  require(X.rows() == Xp.rows(), "sample sets must share dimension");
  require(X.rows() >= kernel_min_dimension(spec), "sample dimension too small for kernel");
  detail::PairEvaluator ev(spec, X, Xp);
  Matrix G(X.cols(), Xp.cols());
  for (Index j = 0; j < Xp.cols(); ++j)
    for (Index i = 0; i < X.cols(); ++i) G(i, j) = ev(i, j);
  return G;
}

// Symmetric Gram matrix of one sample set; the lower triangle is mirrored so
// the result is bit-symmetric.
inline Matrix gram(const KernelSpec& spec, const Matrix& X) {
  validate_kernel(spec);
  validate_samples(X);
  require(X.rows() >= kernel_min_dimension(spec), "sample dimension too small for kernel");
  detail::PairEvaluator ev(spec, X, X);
  const Index m = X.cols();
  Matrix G(m, m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i <= j; ++i) {
      G(i, j) = ev(i, j);
      G(j, i) = G(i, j);
    }
  }
  return G;
}

}  // namespace kfsa
